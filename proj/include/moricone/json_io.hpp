#pragma once

#include "moricone/rational.hpp"

#include "json.hpp"

namespace moricone::json_io {

using Json = nlohmann::ordered_json;

/// Rationals as "p/q" strings; integers omit the denominator.
Json rational(const Rational& q);
Json vector(const ClassVector& v);
Json vectors(const std::vector<ClassVector>& vs);
Json matrix(const RationalMatrix& m);

/// Accept strings "p" / "p/q" and JSON integers. Throw InputError otherwise.
Rational parse_rational(const Json& j);
ClassVector parse_vector(const Json& j);
std::vector<ClassVector> parse_vectors(const Json& j);
/// `cols` is needed for matrices with zero rows.
RationalMatrix parse_matrix(const Json& j, std::size_t cols);

}  // namespace moricone::json_io

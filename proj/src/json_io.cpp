#include "moricone/json_io.hpp"

#include "moricone/errors.hpp"

namespace moricone::json_io {

Json rational(const Rational& q) { return to_string(q); }

Json vector(const ClassVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(rational(x));
    return a;
}

Json vectors(const std::vector<ClassVector>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(vector(v));
    return a;
}

Json matrix(const RationalMatrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vector(m.row(i)));
    return a;
}

Rational parse_rational(const Json& j) {
    if (j.is_string()) return moricone::parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
    throw InputError("expected a rational as a string or an integer, got " + j.dump());
}

ClassVector parse_vector(const Json& j) {
    if (!j.is_array()) throw InputError("expected an array of rationals, got " + j.dump());
    std::vector<Rational> out;
    for (const auto& x : j) out.push_back(parse_rational(x));
    return ClassVector(std::move(out));
}

std::vector<ClassVector> parse_vectors(const Json& j) {
    if (!j.is_array()) throw InputError("expected an array of vectors");
    std::vector<ClassVector> out;
    for (const auto& v : j) out.push_back(parse_vector(v));
    return out;
}

RationalMatrix parse_matrix(const Json& j, std::size_t cols) {
    auto rows = parse_vectors(j);
    for (const auto& r : rows)
        if (r.size() != cols) throw CertificateShapeError("matrix row of length " + std::to_string(r.size()) +
                                                          ", expected " + std::to_string(cols));
    return RationalMatrix(cols, std::move(rows));
}

}  // namespace moricone::json_io

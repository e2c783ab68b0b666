#pragma once

#include "moricone/rational.hpp"
#include "moricone/ratcone.hpp"

#include <vector>

namespace moricone::detail {

using IntVector = std::vector<Integer>;

IntVector to_primitive_ints(const ClassVector& v);
ClassVector to_class_vector(const IntVector& v);

/// Extremal rays of {u : <a, u> >= 0 for every row a}. The rows must span
/// R^n; otherwise LinealityError is thrown with a kernel vector. Rows are
/// deduplicated and inserted in lexicographic order; output rays are
/// primitive and sorted.
std::vector<IntVector> extreme_rays(std::size_t n, std::vector<IntVector> rows, const Budget& budget);

/// Basis of the kernel {x : <a, x> = 0 for all rows a}.
std::vector<ClassVector> kernel_basis(const std::vector<ClassVector>& rows, std::size_t n);

}  // namespace moricone::detail

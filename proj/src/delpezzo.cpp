#include "moricone/delpezzo.hpp"

#include "moricone/errors.hpp"

#include <algorithm>

namespace moricone::delpezzo {

Lattice::Lattice(int r) : r_(r) {
    if (r < 0 || r > 8) throw InputError("del Pezzo point count must lie in 0..8, got " + std::to_string(r));
}

Lattice build(int r) { return Lattice(r); }

std::vector<std::string> Lattice::basis_names() const {
    std::vector<std::string> names{"H"};
    for (int j = 1; j <= r_; ++j) names.push_back("E" + std::to_string(j));
    return names;
}

Rational Lattice::intersect(const ClassVector& a, const ClassVector& b) const {
    return dot(a, curve_vector(b));
}

ClassVector Lattice::curve_vector(const ClassVector& d) const {
    if (d.size() != rank()) throw DimensionMismatch("class of length " + std::to_string(d.size()) +
                                                    " on a lattice of rank " + std::to_string(rank()));
    ClassVector v = -d;
    v[0] = d[0];
    return v;
}

ClassVector Lattice::hyperplane() const { return ClassVector::unit(rank(), 0); }

ClassVector Lattice::exceptional(int j) const {
    if (j < 1 || j > r_) throw InputError("exceptional index out of range");
    return ClassVector::unit(rank(), static_cast<std::size_t>(j));
}

ClassVector Lattice::canonical() const {
    ClassVector k(rank());
    k[0] = -3;
    for (int j = 1; j <= r_; ++j) k[static_cast<std::size_t>(j)] = 1;
    return k;
}

namespace {

// All tuples m in [-1, d]^r with sum m = 3d-1 and sum m^2 = d^2+1.
void extend(int d, int r, std::vector<int>& m, int sum, int sq, std::vector<ClassVector>& out) {
    const int target_sum = 3 * d - 1, target_sq = d * d + 1;
    if (static_cast<int>(m.size()) == r) {
        if (sum != target_sum || sq != target_sq) return;
        ClassVector v(static_cast<std::size_t>(r) + 1);
        v[0] = d;
        for (int j = 0; j < r; ++j) v[static_cast<std::size_t>(j) + 1] = -m[static_cast<std::size_t>(j)];
        out.push_back(std::move(v));
        return;
    }
    const int left = r - static_cast<int>(m.size()) - 1;
    for (int x = -1; x <= d; ++x) {
        int s = sum + x, q = sq + x * x;
        if (q > target_sq) continue;
        // Remaining entries lie in [-1, d]; each contributes at least 0 to q.
        if (s - left > target_sum || s + left * d < target_sum) continue;
        m.push_back(x);
        extend(d, r, m, s, q, out);
        m.pop_back();
    }
}

}  // namespace

std::vector<ClassVector> minus_one_classes(const Lattice& lattice) {
    const int r = lattice.points();
    std::vector<ClassVector> out;
    std::vector<int> m;
    // (3d-1)^2 <= r(d^2+1) forces d <= 6 when r <= 8.
    for (int d = 0; d <= 6; ++d) {
        if ((3 * d - 1) * (3 * d - 1) > r * (d * d + 1)) continue;
        extend(d, r, m, 0, 0, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ClassVector> ne_generators(const Lattice& lattice) {
    switch (lattice.points()) {
        case 0: return {lattice.hyperplane()};
        case 1: return {lattice.exceptional(1), lattice.hyperplane() - lattice.exceptional(1)};
        default: return minus_one_classes(lattice);
    }
}

std::vector<ClassVector> ne_curve_vectors(const Lattice& lattice) {
    std::vector<ClassVector> out;
    for (const auto& c : ne_generators(lattice)) out.push_back(lattice.curve_vector(c));
    return out;
}

PolyCone nef_cone(const Lattice& lattice, const Budget& budget) {
    auto curves = ne_curve_vectors(lattice);
    return dual(cone_from_rays(lattice.rank(), curves, budget), budget);
}

bool is_nef(const Lattice& lattice, const ClassVector& d) {
    if (d.size() != lattice.rank()) throw DimensionMismatch("is_nef: class has wrong length");
    auto curves = ne_curve_vectors(lattice);
    return std::all_of(curves.begin(), curves.end(), [&](const ClassVector& c) { return dot(d, c) >= 0; });
}

bool is_ample(const Lattice& lattice, const ClassVector& d) {
    if (d.size() != lattice.rank()) throw DimensionMismatch("is_ample: class has wrong length");
    auto curves = ne_curve_vectors(lattice);
    return std::all_of(curves.begin(), curves.end(), [&](const ClassVector& c) { return dot(d, c) > 0; });
}

}  // namespace moricone::delpezzo

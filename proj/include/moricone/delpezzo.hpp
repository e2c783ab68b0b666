#pragma once

#include "moricone/ratcone.hpp"

#include <string>
#include <vector>

namespace moricone::delpezzo {

/// Picard lattice of the plane blown up at r general points, basis
/// (H, E_1, ..., E_r) with form diag(1, -1, ..., -1). Divisors are
/// coefficient vectors in this basis.
class Lattice {
public:
    explicit Lattice(int r);

    int points() const noexcept { return r_; }
    std::size_t rank() const noexcept { return static_cast<std::size_t>(r_) + 1; }
    std::vector<std::string> basis_names() const;

    Rational intersect(const ClassVector& a, const ClassVector& b) const;
    /// Intersection vector of a class: pairing it with a divisor is a dot product.
    ClassVector curve_vector(const ClassVector& d) const;

    ClassVector hyperplane() const;
    ClassVector exceptional(int j) const;  // 1-based
    ClassVector canonical() const;

private:
    int r_;
};

/// Throws InputError unless 0 <= r <= 8.
Lattice build(int r);

/// Every class dH - sum m_j E_j with D.D = -1 and D.K = -1, sorted.
std::vector<ClassVector> minus_one_classes(const Lattice& lattice);

/// Generators of the cone of curves as divisor classes.
std::vector<ClassVector> ne_generators(const Lattice& lattice);

/// Intersection vectors of ne_generators().
std::vector<ClassVector> ne_curve_vectors(const Lattice& lattice);

PolyCone nef_cone(const Lattice& lattice, const Budget& budget = {});
bool is_nef(const Lattice& lattice, const ClassVector& d);
bool is_ample(const Lattice& lattice, const ClassVector& d);

}  // namespace moricone::delpezzo

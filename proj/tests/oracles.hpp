#pragma once
// Independent reference computations used only by tests.

#include "moricone/rational.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using moricone::ClassVector;
using moricone::Rational;

// Determinant by cofactor-free fraction elimination.
inline Rational det(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            Rational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

// Generalized cross product of n-1 vectors in R^n (cofactor expansion).
inline ClassVector cross(const std::vector<ClassVector>& vs, std::size_t n) {
    ClassVector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::vector<Rational>> m;
        for (const auto& v : vs) {
            std::vector<Rational> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) row.push_back(v[j]);
            m.push_back(row);
        }
        Rational d = det(m);
        out[i] = (i % 2 == 0) ? d : Rational(-d);
    }
    return out;
}

// Facets of a full-dimensional cone: every normal to n-1 generators that is
// nonnegative on all generators. Exponential, fine for small inputs.
inline std::vector<ClassVector> brute_facets(const std::vector<ClassVector>& gens, std::size_t n) {
    std::set<ClassVector> found;
    if (n == 1) {
        bool pos = false, neg = false;
        for (const auto& g : gens) {
            pos = pos || g[0] > 0;
            neg = neg || g[0] < 0;
        }
        if (pos && !neg) found.insert(ClassVector{1});
        if (neg && !pos) found.insert(ClassVector{-1});
        return {found.begin(), found.end()};
    }
    std::vector<std::size_t> idx(n - 1);
    const std::size_t m = gens.size();
    if (m < n - 1) return {};
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + (n - 1), true);
    do {
        std::vector<ClassVector> sub;
        for (std::size_t i = 0; i < m; ++i)
            if (pick[i]) sub.push_back(gens[i]);
        ClassVector u = cross(sub, n);
        if (u.is_zero()) continue;
        bool all_pos = true, all_neg = true;
        for (const auto& g : gens) {
            Rational s = moricone::dot(u, g);
            all_pos = all_pos && s >= 0;
            all_neg = all_neg && s <= 0;
        }
        if (all_pos) found.insert(u.primitive());
        if (all_neg) found.insert((-u).primitive());
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return {found.begin(), found.end()};
}

// Random pointed full-dimensional cone: generators with positive last-coordinate
// sum lie in the half space x_0 + ... > 0 after a shift.
inline std::vector<ClassVector> random_pointed_cone(std::mt19937& rng, std::size_t n, std::size_t count) {
    std::uniform_int_distribution<int> coord(-3, 3);
    for (;;) {
        std::vector<ClassVector> gens;
        for (std::size_t k = 0; k < count; ++k) {
            ClassVector v(n);
            Rational s = 0;
            for (std::size_t i = 1; i < n; ++i) {
                v[i] = coord(rng);
                s += abs(v[i]);
            }
            v[0] = s + 1;  // strictly positive on e_0 keeps the cone pointed
            gens.push_back(v);
        }
        if (moricone::rank_of(gens, n) == n) return gens;
    }
}

// Independent enumeration: integer m_j with sum m_j^2 = d^2 + 1 for d <= 10, the
// last coordinate solved from K.D = -1, no other pruning.
inline void brute_extend(long d, std::vector<long>& m, long budget, int r, std::set<std::vector<long>>& out) {
    if (static_cast<int>(m.size()) == r - 1) {
        long last = 3 * d - 1 - std::accumulate(m.begin(), m.end(), 0L);
        if (last * last != budget) return;
        std::vector<long> v{d};
        for (long x : m) v.push_back(-x);
        v.push_back(-last);
        out.insert(v);
        return;
    }
    for (long x = -10; x <= 10; ++x) {
        if (x * x > budget) continue;
        m.push_back(x);
        brute_extend(d, m, budget - x * x, r, out);
        m.pop_back();
    }
}

inline std::set<std::vector<long>> brute_minus_one(int r) {
    std::set<std::vector<long>> out;
    for (long d = 0; d <= 10; ++d) {
        std::vector<long> m;
        brute_extend(d, m, d * d + 1, r, out);
    }
    return out;
}

}  // namespace oracle

#include "moricone/errors.hpp"
#include "moricone/ratcone.hpp"

#include <stdexcept>

namespace moricone {

namespace {

// Phase-one simplex for  G lambda = v, lambda >= 0  with Bland's rule. On
// infeasibility the optimal phase-one duals give a Farkas functional.
Membership phase_one(std::span<const ClassVector> gens, std::size_t n, const ClassVector& v) {
    const std::size_t m = gens.size();
    const std::size_t cols = m + n;  // structural + artificial
    std::vector<int> flip(n, 1);
    for (std::size_t i = 0; i < n; ++i)
        if (v[i] < 0) flip[i] = -1;

    std::vector<std::vector<Rational>> t(n, std::vector<Rational>(cols + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) t[i][j] = flip[i] * gens[j][i];
        t[i][m + i] = 1;
        t[i][cols] = flip[i] * v[i];
    }
    std::vector<std::size_t> basis(n);
    for (std::size_t i = 0; i < n; ++i) basis[i] = m + i;

    // Reduced costs d_j = c_j - sum_i c_B(i) t[i][j]; phase-one costs are 1 on artificials.
    auto cost = [&](std::size_t j) { return j >= m ? Rational(1) : Rational(0); };
    std::vector<Rational> d(cols + 1);
    auto recompute = [&] {
        for (std::size_t j = 0; j <= cols; ++j) {
            Rational s = j < cols ? cost(j) : Rational(0);
            for (std::size_t i = 0; i < n; ++i)
                if (basis[i] >= m) s -= t[i][j];
            d[j] = s;
        }
    };
    recompute();

    for (;;) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (d[j] < 0) {
                enter = j;
                break;
            }
        if (enter == cols) break;
        std::size_t leave = n;
        Rational best;
        for (std::size_t i = 0; i < n; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][cols] / t[i][enter];
            if (leave == n || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == n) throw std::logic_error("phase-one simplex is bounded below by zero");
        Rational piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rational f = t[i][enter];
            for (std::size_t j = 0; j <= cols; ++j)
                if (t[leave][j] != 0) t[i][j] -= f * t[leave][j];
        }
        Rational f = d[enter];
        for (std::size_t j = 0; j <= cols; ++j)
            if (t[leave][j] != 0) d[j] -= f * t[leave][j];
        basis[leave] = enter;
    }

    Rational objective = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (basis[i] >= m) objective += t[i][cols];

    Membership out;
    if (objective == 0) {
        out.member = true;
        out.combination.assign(m, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            if (basis[i] < m) out.combination[basis[i]] = t[i][cols];
        return out;
    }
    // y_i = 1 - d(artificial_i); separator u = -S y.
    out.separator = ClassVector(n);
    for (std::size_t i = 0; i < n; ++i) out.separator[i] = -(Rational(1) - d[m + i]) * flip[i];
    return out;
}

}  // namespace

Membership in_cone_generated_by(std::span<const ClassVector> generators, std::size_t dim, const ClassVector& v) {
    if (v.size() != dim) throw DimensionMismatch("membership query vector has wrong length");
    for (const auto& g : generators)
        if (g.size() != dim) throw DimensionMismatch("generator has wrong length");
    Membership m = phase_one(generators, dim, v);
    // Exactness is checked, not assumed.
    bool ok = true;
    if (m.member) {
        ClassVector sum(dim);
        for (std::size_t i = 0; i < generators.size(); ++i) {
            ok = ok && m.combination[i] >= 0;
            sum += m.combination[i] * generators[i];
        }
        ok = ok && sum == v;
    } else {
        for (const auto& g : generators) ok = ok && dot(m.separator, g) >= 0;
        ok = ok && dot(m.separator, v) < 0;
    }
    if (!ok) throw std::logic_error("membership certificate failed verification");
    return m;
}

Membership contains(const PolyCone& cone, const ClassVector& v) {
    if (v.size() != cone.dim()) throw DimensionMismatch("contains: vector length differs from cone dimension");
    return in_cone_generated_by(cone.rays(), cone.dim(), v);
}

}  // namespace moricone

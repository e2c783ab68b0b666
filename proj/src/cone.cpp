#include "moricone/ratcone.hpp"

#include "double_description.hpp"
#include "moricone/errors.hpp"

#include <algorithm>
#include <chrono>

namespace moricone {

namespace {

void check_lengths(std::size_t dim, std::span<const ClassVector> vs, const char* what) {
    for (const auto& v : vs)
        if (v.size() != dim)
            throw DimensionMismatch(std::string(what) + ": expected length " + std::to_string(dim) + ", got " +
                                    std::to_string(v.size()));
}

// Pivot columns of the row space of `vs`. Restricting to these coordinates is
// injective on span(vs).
std::vector<std::size_t> span_pivots(std::span<const ClassVector> vs, std::size_t dim) {
    std::vector<ClassVector> m(vs.begin(), vs.end());
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < dim && r < m.size(); ++col) {
        std::size_t p = r;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[r], m[p]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][col] == 0) continue;
            Rational f = m[i][col] / m[r][col];
            m[i] -= f * m[r];
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

ClassVector restrict_to(const ClassVector& v, const std::vector<std::size_t>& idx) {
    ClassVector out(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) out[i] = v[idx[i]];
    return out;
}

// Span element whose pivot coordinates are `w`.
ClassVector span_element(std::span<const ClassVector> vs, std::size_t dim, const ClassVector& w) {
    std::vector<ClassVector> m(vs.begin(), vs.end());
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < dim && r < m.size(); ++col) {
        std::size_t p = r;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[r], m[p]);
        m[r] *= 1 / Rational(m[r][col]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][col] == 0) continue;
            Rational f = m[i][col];
            m[i] -= f * m[r];
        }
        pivots.push_back(col);
        ++r;
    }
    ClassVector x(dim);
    for (std::size_t i = 0; i < pivots.size(); ++i) x += w[i] * m[i];
    return x;
}

// Zero-padding of a functional on pivot coordinates; agrees with it on the span.
ClassVector lift_from(const ClassVector& v, const std::vector<std::size_t>& idx, std::size_t dim) {
    ClassVector out(dim);
    for (std::size_t i = 0; i < idx.size(); ++i) out[idx[i]] = v[i];
    return out;
}

// True once `target` independent vectors are found; stops early.
bool rank_reaches(const std::vector<ClassVector>& vs, std::size_t dim, std::size_t target) {
    if (target == 0) return true;
    std::vector<ClassVector> echelon;
    std::vector<std::size_t> pivots;
    for (const auto& v0 : vs) {
        ClassVector v = v0;
        for (std::size_t k = 0; k < echelon.size(); ++k)
            if (v[pivots[k]] != 0) v -= v[pivots[k]] * echelon[k];
        std::size_t piv = 0;
        while (piv < dim && v[piv] == 0) ++piv;
        if (piv == dim) continue;
        v *= 1 / Rational(v[piv]);
        echelon.push_back(std::move(v));
        pivots.push_back(piv);
        if (echelon.size() >= target) return true;
    }
    return false;
}

std::vector<ClassVector> canonical_list(std::vector<ClassVector> vs) {
    for (auto& v : vs) v = v.primitive();
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

}  // namespace

PolyCone cone_from_rays(std::size_t dim, std::span<const ClassVector> rays, const Budget& budget) {
    check_lengths(dim, rays, "cone_from_rays");
    const auto start = std::chrono::steady_clock::now();
    std::vector<ClassVector> gens;
    for (const auto& r : rays)
        if (!r.is_zero()) gens.push_back(r);
    gens = canonical_list(std::move(gens));
    if (gens.empty()) return PolyCone(dim, {}, 0, dim == 0 ? std::optional<std::vector<ClassVector>>(std::vector<ClassVector>{}) : std::nullopt);

    // Work in coordinates of the linear span, where the dual is pointed.
    auto pivots = span_pivots(gens, dim);
    const std::size_t k = pivots.size();
    std::vector<detail::IntVector> rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) rows.push_back(detail::to_primitive_ints(restrict_to(g, pivots)));
    auto facet_rays = detail::extreme_rays(k, rows, budget);

    std::vector<ClassVector> facets;
    for (const auto& f : facet_rays) facets.push_back(detail::to_class_vector(f));
    if (!rank_reaches(facets, k, k)) {
        auto ker = detail::kernel_basis(facets, k);
        // A kernel direction of the facets that lies in the span is in the lineality space.
        throw LinealityError("generated cone is not pointed", span_element(gens, dim, ker.front()).primitive());
    }

    std::vector<ClassVector> extremal;
    for (const auto& g : gens) {
        if (budget.max_seconds &&
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > *budget.max_seconds)
            throw BudgetExceeded("extremal ray test exceeded time budget");
        ClassVector gk = restrict_to(g, pivots);
        std::vector<ClassVector> tight;
        for (const auto& f : facets)
            if (dot(f, gk) == 0) tight.push_back(f);
        if (k == 0 || rank_reaches(tight, k, k - 1)) extremal.push_back(g);
    }

    std::optional<std::vector<ClassVector>> full_facets;
    if (k == dim) full_facets = canonical_list(facets);
    return PolyCone(dim, std::move(extremal), k, std::move(full_facets));
}

PolyCone dual(const PolyCone& cone, const Budget& budget) {
    const std::size_t n = cone.dim();
    if (!cone.full_dimensional()) {
        auto ker = detail::kernel_basis(cone.rays(), n);
        throw LinealityError("dual of a cone that is not full-dimensional contains a line", ker.front());
    }
    std::vector<ClassVector> result;
    if (cone.facets()) {
        result = *cone.facets();
    } else {
        std::vector<detail::IntVector> rows;
        for (const auto& g : cone.rays()) rows.push_back(detail::to_primitive_ints(g));
        for (const auto& r : detail::extreme_rays(n, rows, budget)) result.push_back(detail::to_class_vector(r));
    }
    // The dual of a full-dimensional pointed cone is again full-dimensional and
    // pointed, with the original extremal rays as its facet normals.
    std::size_t rank = rank_reaches(result, n, n) ? n : rank_of(result, n);
    return PolyCone(n, std::move(result), rank, rank == n ? std::optional(cone.rays()) : std::nullopt);
}

HDescription h_description(const PolyCone& cone, const Budget& budget) {
    HDescription h;
    const std::size_t n = cone.dim();
    if (cone.full_dimensional()) {
        h.inequalities = dual(cone, budget).rays();
        return h;
    }
    h.equations = detail::kernel_basis(cone.rays(), n);
    if (cone.rays().empty()) return h;
    auto pivots = span_pivots(cone.rays(), n);
    std::vector<detail::IntVector> rows;
    for (const auto& g : cone.rays()) rows.push_back(detail::to_primitive_ints(restrict_to(g, pivots)));
    for (const auto& f : detail::extreme_rays(pivots.size(), rows, budget))
        h.inequalities.push_back(lift_from(detail::to_class_vector(f), pivots, n));
    return h;
}

EqualityVerdict cones_equal(const PolyCone& a, const PolyCone& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("cones_equal: ambient dimensions differ");
    EqualityVerdict v;
    // Pointed cones in canonical form are equal iff their extremal rays are.
    if (a.rays() == b.rays()) {
        v.equal = true;
        return v;
    }
    // With facets at hand a failing facet is already a separator.
    auto by_facets = [&](const PolyCone& from, const PolyCone& into, bool first) {
        for (const auto& g : from.rays())
            for (const auto& f : *into.facets())
                if (dot(f, g) < 0) {
                    v.witness = g;
                    v.witness_from_first = first;
                    v.separator = f;
                    return true;
                }
        return false;
    };
    if (b.facets() && by_facets(a, b, true)) return v;
    if (a.facets() && by_facets(b, a, false)) return v;
    for (const auto& g : a.rays()) {
        auto m = contains(b, g);
        if (!m.member) {
            v.witness = g;
            v.witness_from_first = true;
            v.separator = m.separator;
            return v;
        }
    }
    for (const auto& g : b.rays()) {
        auto m = contains(a, g);
        if (!m.member) {
            v.witness = g;
            v.witness_from_first = false;
            v.separator = m.separator;
            return v;
        }
    }
    v.equal = true;
    return v;
}

bool Membership::certificate_valid(const PolyCone& cone, const ClassVector& v) const {
    if (member) {
        if (combination.size() != cone.rays().size()) return false;
        ClassVector sum(cone.dim());
        for (std::size_t i = 0; i < combination.size(); ++i) {
            if (combination[i] < 0) return false;
            sum += combination[i] * cone.rays()[i];
        }
        return sum == v;
    }
    if (separator.size() != cone.dim()) return false;
    for (const auto& g : cone.rays())
        if (dot(separator, g) < 0) return false;
    return dot(separator, v) < 0;
}

}  // namespace moricone

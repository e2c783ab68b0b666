#include "double_description.hpp"

#include "moricone/errors.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>

namespace moricone::detail {

IntVector to_primitive_ints(const ClassVector& v) {
    ClassVector p = v.primitive();
    IntVector out;
    out.reserve(p.size());
    for (const auto& c : p) out.push_back(c.get_num());
    return out;
}

ClassVector to_class_vector(const IntVector& v) {
    ClassVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
    return out;
}

std::vector<ClassVector> kernel_basis(const std::vector<ClassVector>& rows, std::size_t n) {
    // Reduced row echelon form, then one kernel vector per free column.
    std::vector<ClassVector> m = rows;
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m.size(); ++col) {
        std::size_t p = r;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[r], m[p]);
        Rational inv = 1 / m[r][col];
        m[r] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][col] == 0) continue;
            Rational f = m[i][col];
            for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_cols.push_back(col);
        ++r;
    }
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    std::vector<ClassVector> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        ClassVector k(n);
        k[free] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) k[pivot_cols[i]] = -m[i][free];
        basis.push_back(k.primitive());
    }
    return basis;
}

namespace {

using Clock = std::chrono::steady_clock;

class ZeroSet {
public:
    explicit ZeroSet(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}
    void set(std::size_t i) { words_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    ZeroSet intersect(const ZeroSet& o) const {
        ZeroSet z;
        z.words_.resize(words_.size());
        for (std::size_t i = 0; i < words_.size(); ++i) z.words_[i] = words_[i] & o.words_[i];
        return z;
    }
    bool subset_of(const ZeroSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

private:
    std::vector<std::uint64_t> words_;
};

struct Ray {
    IntVector v;
    ZeroSet zeros;
    std::size_t zero_count = 0;
};

Integer int_dot(const IntVector& a, const IntVector& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    return s;
}

void make_primitive(IntVector& v) {
    Integer g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

class BudgetGuard {
public:
    explicit BudgetGuard(const Budget& b) : budget_(b), start_(Clock::now()) {}
    void check_rays(std::size_t count) const {
        if (budget_.max_rays && count > *budget_.max_rays)
            throw BudgetExceeded("double description exceeded ray budget of " + std::to_string(*budget_.max_rays));
    }
    void check_time() const {
        if (!budget_.max_seconds) return;
        std::chrono::duration<double> elapsed = Clock::now() - start_;
        if (elapsed.count() > *budget_.max_seconds)
            throw BudgetExceeded("double description exceeded time budget of " + std::to_string(*budget_.max_seconds) +
                                 " s");
    }

private:
    Budget budget_;
    Clock::time_point start_;
};

}  // namespace

std::vector<IntVector> extreme_rays(std::size_t n, std::vector<IntVector> rows, const Budget& budget) {
    BudgetGuard guard(budget);
    for (auto& r : rows) {
        if (r.size() != n) throw DimensionMismatch("inequality row of wrong length in dualization");
        make_primitive(r);
    }
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const IntVector& r) { return std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; }); }),
               rows.end());
    std::sort(rows.begin(), rows.end(), [](const IntVector& a, const IntVector& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            [](const Integer& x, const Integer& y) { return cmp(x, y) < 0; });
    });
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    const std::size_t m = rows.size();

    if (n == 0) return {};

    // Greedy lexicographic choice of n independent rows for the initial simplicial cone.
    std::vector<std::size_t> basis_rows;
    std::vector<ClassVector> echelon;  // reduced copies of chosen rows
    std::vector<std::size_t> echelon_pivots;
    for (std::size_t i = 0; i < m && basis_rows.size() < n; ++i) {
        ClassVector v = to_class_vector(rows[i]);
        for (std::size_t k = 0; k < echelon.size(); ++k) {
            const Rational& c = v[echelon_pivots[k]];
            if (c != 0) v -= c * echelon[k];
        }
        std::size_t piv = 0;
        while (piv < n && v[piv] == 0) ++piv;
        if (piv == n) continue;
        v *= 1 / Rational(v[piv]);
        for (std::size_t k = 0; k < echelon.size(); ++k) {
            Rational c = echelon[k][piv];
            if (c != 0) echelon[k] -= c * v;
        }
        echelon.push_back(std::move(v));
        echelon_pivots.push_back(piv);
        basis_rows.push_back(i);
    }
    if (basis_rows.size() < n) {
        std::vector<ClassVector> as_rational;
        for (const auto& r : rows) as_rational.push_back(to_class_vector(r));
        auto ker = kernel_basis(as_rational, n);
        throw LinealityError("inequality system does not span the space; the solution cone contains a line",
                             ker.empty() ? ClassVector(n) : ker.front());
    }

    // Initial rays: columns of the inverse of the basis matrix.
    std::vector<ClassVector> aug(n, ClassVector(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rational(rows[basis_rows[i]][j]);
        aug[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (aug[p][col] == 0) ++p;
        std::swap(aug[col], aug[p]);
        Rational inv = 1 / aug[col][col];
        aug[col] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || aug[i][col] == 0) continue;
            Rational f = aug[i][col];
            aug[i] -= f * aug[col];
        }
    }
    std::vector<Ray> rays;
    for (std::size_t j = 0; j < n; ++j) {
        ClassVector col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = aug[i][n + j];
        Ray r{to_primitive_ints(col), ZeroSet(m), 0};
        for (std::size_t k = 0; k < n; ++k)
            if (k != j) r.zeros.set(basis_rows[k]);
        r.zero_count = n - 1;
        rays.push_back(std::move(r));
    }

    std::vector<bool> in_basis(m, false);
    for (auto i : basis_rows) in_basis[i] = true;

    for (std::size_t row = 0; row < m; ++row) {
        if (in_basis[row]) continue;
        guard.check_time();
        const IntVector& a = rows[row];
        std::vector<Integer> s(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            s[k] = int_dot(a, rays[k].v);
            int sg = sgn(s[k]);
            if (sg > 0) pos.push_back(k);
            else if (sg < 0) neg.push_back(k);
        }
        if (neg.empty()) {
            for (std::size_t k = 0; k < rays.size(); ++k)
                if (sgn(s[k]) == 0) {
                    rays[k].zeros.set(row);
                    ++rays[k].zero_count;
                }
            continue;
        }

        std::vector<Ray> created;
        std::size_t pair_counter = 0;
        for (auto p : pos) {
            for (auto q : neg) {
                if ((++pair_counter & 0xff) == 0) guard.check_time();
                ZeroSet common = rays[p].zeros.intersect(rays[q].zeros);
                std::size_t cc = common.count();
                if (cc + 2 < n) continue;
                bool adjacent = true;
                for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
                    if (k == p || k == q || rays[k].zero_count < cc) continue;
                    if (common.subset_of(rays[k].zeros)) adjacent = false;
                }
                if (!adjacent) continue;
                IntVector v(n);
                Integer neg_s = -s[q];
                for (std::size_t i = 0; i < n; ++i) v[i] = s[p] * rays[q].v[i] + neg_s * rays[p].v[i];
                make_primitive(v);
                common.set(row);
                created.push_back(Ray{std::move(v), std::move(common), cc + 1});
                guard.check_rays(rays.size() - neg.size() + created.size());
            }
        }

        std::vector<Ray> next;
        next.reserve(rays.size() - neg.size() + created.size());
        for (std::size_t k = 0; k < rays.size(); ++k) {
            int sg = sgn(s[k]);
            if (sg < 0) continue;
            if (sg == 0) {
                rays[k].zeros.set(row);
                ++rays[k].zero_count;
            }
            next.push_back(std::move(rays[k]));
        }
        for (auto& r : created) next.push_back(std::move(r));
        rays = std::move(next);
        guard.check_rays(rays.size());
    }

    std::vector<IntVector> out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.v));
    std::sort(out.begin(), out.end(), [](const IntVector& a, const IntVector& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            [](const Integer& x, const Integer& y) { return cmp(x, y) < 0; });
    });
    return out;
}

}  // namespace moricone::detail

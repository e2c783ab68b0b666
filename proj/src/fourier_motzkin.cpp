#include "moricone/errors.hpp"
#include "moricone/ratcone.hpp"

#include <algorithm>
#include <optional>

namespace moricone {

std::string to_string(Relation r) {
    switch (r) {
        case Relation::GreaterEq: return ">=";
        case Relation::Greater: return ">";
        case Relation::Equal: return "=";
    }
    return "?";
}

void LinearProgram::validate() const {
    for (std::size_t i = 0; i < constraints.size(); ++i)
        if (constraints[i].functional.size() != variables)
            throw DimensionMismatch("constraint " + std::to_string(i) + " has " +
                                    std::to_string(constraints[i].functional.size()) + " coefficients, expected " +
                                    std::to_string(variables));
}

namespace {

// a.x >= b, or a.x > b when strict; `mult` expresses the row over the original constraints.
struct Row {
    ClassVector a;
    Rational b;
    bool strict = false;
    std::vector<Rational> mult;
};

// Positive rescaling so duplicate rows compare equal.
void normalize(Row& r) {
    auto it = std::find_if(r.a.begin(), r.a.end(), [](const Rational& q) { return q != 0; });
    if (it == r.a.end()) return;
    Rational s = abs(*it);
    if (s == 1) return;
    Rational inv = 1 / s;
    r.a *= inv;
    r.b *= inv;
    for (auto& m : r.mult) m *= inv;
}

std::vector<Row> dedupe(std::vector<Row> rows) {
    std::vector<Row> out;
    for (auto& r : rows) {
        normalize(r);
        bool dominated = false;
        for (auto& o : out) {
            if (o.a != r.a) continue;
            // Same functional: keep the tighter bound.
            if (o.b > r.b || (o.b == r.b && (o.strict || !r.strict))) {
                dominated = true;
                break;
            }
            if (r.b > o.b || (r.b == o.b && r.strict && !o.strict)) {
                o = r;
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(std::move(r));
    }
    return out;
}

struct Interval {
    std::optional<Rational> lo, hi;
    bool lo_strict = false, hi_strict = false;

    bool admits(const Rational& x) const {
        if (lo && (lo_strict ? !(x > *lo) : !(x >= *lo))) return false;
        if (hi && (hi_strict ? !(x < *hi) : !(x <= *hi))) return false;
        return true;
    }

    Rational pick() const {
        if (admits(Rational(0))) return 0;
        if (lo && !lo_strict) return *lo;
        if (hi && !hi_strict) return *hi;
        if (lo && hi) return (*lo + *hi) / 2;
        if (lo) return *lo + 1;
        return *hi - 1;
    }
};

}  // namespace

Feasibility lp_feasible(const LinearProgram& lp, std::size_t max_rows) {
    lp.validate();
    const std::size_t n = lp.variables;
    const std::size_t k = lp.constraints.size();

    std::vector<Row> rows;
    for (std::size_t i = 0; i < k; ++i) {
        const auto& c = lp.constraints[i];
        Row r{c.functional, c.bound, c.relation == Relation::Greater, std::vector<Rational>(k)};
        r.mult[i] = 1;
        if (c.relation == Relation::Equal) {
            Row neg{-c.functional, -c.bound, false, std::vector<Rational>(k)};
            neg.mult[i] = -1;
            rows.push_back(std::move(neg));
        }
        rows.push_back(std::move(r));
    }

    // systems[j] involves only x_0 .. x_{j-1}.
    std::vector<std::vector<Row>> systems(n + 1);
    systems[n] = dedupe(std::move(rows));
    for (std::size_t var = n; var-- > 0;) {
        const auto& cur = systems[var + 1];
        std::vector<Row> next, lower, upper;
        for (const auto& r : cur) {
            int s = sgn(r.a[var]);
            if (s > 0) lower.push_back(r);
            else if (s < 0) upper.push_back(r);
            else next.push_back(r);
        }
        for (const auto& p : lower)
            for (const auto& q : upper) {
                Rational wp = -q.a[var], wq = p.a[var];
                Row r{wp * p.a + wq * q.a, wp * p.b + wq * q.b, p.strict || q.strict, std::vector<Rational>(k)};
                for (std::size_t i = 0; i < k; ++i) r.mult[i] = wp * p.mult[i] + wq * q.mult[i];
                r.a[var] = 0;
                next.push_back(std::move(r));
                if (next.size() > max_rows)
                    throw BudgetExceeded("Fourier-Motzkin elimination exceeded " + std::to_string(max_rows) + " rows");
            }
        systems[var] = dedupe(std::move(next));
    }

    Feasibility out;
    for (const auto& r : systems[0]) {
        bool violated = r.strict ? !(r.b < 0) : r.b > 0;
        if (violated) {
            out.feasible = false;
            out.multipliers = r.mult;
            return out;
        }
    }

    out.feasible = true;
    out.point = ClassVector(n);
    for (std::size_t var = 0; var < n; ++var) {
        Interval iv;
        for (const auto& r : systems[var + 1]) {
            const Rational& c = r.a[var];
            if (c == 0) continue;
            Rational rest = 0;
            for (std::size_t j = 0; j < var; ++j) rest += r.a[j] * out.point[j];
            Rational bound = (r.b - rest) / c;
            if (c > 0) {
                if (!iv.lo || bound > *iv.lo || (bound == *iv.lo && r.strict)) {
                    iv.lo = bound;
                    iv.lo_strict = r.strict;
                }
            } else {
                if (!iv.hi || bound < *iv.hi || (bound == *iv.hi && r.strict)) {
                    iv.hi = bound;
                    iv.hi_strict = r.strict;
                }
            }
        }
        out.point[var] = iv.pick();
    }
    return out;
}

Feasibility::Expanded Feasibility::expand(const LinearProgram& lp) const {
    Expanded e{ClassVector(lp.variables), Rational(0), false};
    for (std::size_t i = 0; i < lp.constraints.size() && i < multipliers.size(); ++i) {
        const auto& c = lp.constraints[i];
        const Rational& m = multipliers[i];
        if (m == 0) continue;
        e.functional += m * c.functional;
        e.bound += m * c.bound;
        if (c.relation == Relation::Greater) e.strict = true;
    }
    return e;
}

bool Feasibility::certificate_valid(const LinearProgram& lp) const {
    if (feasible || multipliers.size() != lp.constraints.size()) return false;
    for (std::size_t i = 0; i < multipliers.size(); ++i)
        if (lp.constraints[i].relation != Relation::Equal && multipliers[i] < 0) return false;
    Expanded e = expand(lp);
    if (!e.functional.is_zero()) return false;
    return e.strict ? e.bound >= 0 : e.bound > 0;
}

bool Feasibility::point_valid(const LinearProgram& lp) const {
    if (!feasible || point.size() != lp.variables) return false;
    for (const auto& c : lp.constraints) {
        Rational lhs = dot(c.functional, point);
        bool ok = c.relation == Relation::GreaterEq ? lhs >= c.bound
                  : c.relation == Relation::Greater ? lhs > c.bound
                                                    : lhs == c.bound;
        if (!ok) return false;
    }
    return true;
}

}  // namespace moricone

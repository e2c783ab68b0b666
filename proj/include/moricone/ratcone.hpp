#pragma once

#include "moricone/rational.hpp"

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace moricone {

/// Limits for dualization. Exceeding either raises BudgetExceeded.
struct Budget {
    std::optional<std::size_t> max_rays;  // intermediate ray count in double description
    std::optional<double> max_seconds;

    static Budget unlimited() { return {}; }
};

/// Finitely generated rational polyhedral cone, always held in canonical form:
/// generators are exactly the extremal rays, each a primitive integer vector,
/// sorted lexicographically. Instances are only produced by cone_from_rays()
/// and dual(), and are immutable.
class PolyCone {
public:
    std::size_t dim() const noexcept { return dim_; }
    const std::vector<ClassVector>& rays() const noexcept { return rays_; }
    /// Dimension of the linear span of the cone.
    std::size_t span_rank() const noexcept { return span_rank_; }
    bool full_dimensional() const noexcept { return span_rank_ == dim_; }

    /// Facet normals u (with u.x >= 0 on the cone), canonical. Present when the
    /// cone is full-dimensional; see h_description() for the general case.
    const std::optional<std::vector<ClassVector>>& facets() const noexcept { return facets_; }

    friend bool operator==(const PolyCone& a, const PolyCone& b) { return a.dim_ == b.dim_ && a.rays_ == b.rays_; }

private:
    friend PolyCone cone_from_rays(std::size_t, std::span<const ClassVector>, const Budget&);
    friend PolyCone dual(const PolyCone&, const Budget&);
    PolyCone(std::size_t dim, std::vector<ClassVector> rays, std::size_t span_rank,
             std::optional<std::vector<ClassVector>> facets)
        : dim_(dim), rays_(std::move(rays)), span_rank_(span_rank), facets_(std::move(facets)) {}

    std::size_t dim_ = 0;
    std::vector<ClassVector> rays_;
    std::size_t span_rank_ = 0;
    std::optional<std::vector<ClassVector>> facets_;
};

/// Canonical cone generated by `rays`. Zero and redundant rays are dropped.
/// Throws DimensionMismatch if a ray has the wrong length and LinealityError if
/// the generated cone contains a line.
PolyCone cone_from_rays(std::size_t dim, std::span<const ClassVector> rays, const Budget& budget = {});

/// {u : <u, g> >= 0 for every generator g}, by double description with the
/// inequalities inserted in lexicographic order. Throws LinealityError when
/// the cone is not full-dimensional (its dual then contains a line) and
/// BudgetExceeded when the budget runs out.
PolyCone dual(const PolyCone& cone, const Budget& budget = {});

struct HDescription {
    std::vector<ClassVector> inequalities;  // u.x >= 0
    std::vector<ClassVector> equations;     // w.x == 0
};

/// Inequality/equation description of the cone, valid for lower-dimensional cones too.
HDescription h_description(const PolyCone& cone, const Budget& budget = {});

/// Result of a membership query. Exactly one of the certificates is meaningful:
/// a nonnegative combination of the generators equal to the query vector, or
/// a functional nonnegative on every generator and negative on the query.
struct Membership {
    bool member = false;
    std::vector<Rational> combination;  // one coefficient per cone.rays()
    ClassVector separator;

    /// Re-checks the certificate exactly against `cone` and `v`.
    bool certificate_valid(const PolyCone& cone, const ClassVector& v) const;
};

/// Exact membership by phase-one simplex with Bland's rule.
Membership contains(const PolyCone& cone, const ClassVector& v);

/// Same test against an arbitrary (not necessarily canonical) generator list.
Membership in_cone_generated_by(std::span<const ClassVector> generators, std::size_t dim, const ClassVector& v);

struct EqualityVerdict {
    bool equal = false;
    /// A generator of one cone lying outside the other, when unequal.
    std::optional<ClassVector> witness;
    /// True if the witness is a generator of the first cone.
    bool witness_from_first = false;
    std::optional<ClassVector> separator;
};

/// Mutual containment of all generators.
EqualityVerdict cones_equal(const PolyCone& a, const PolyCone& b);

// ---------------------------------------------------------------------------
// Linear feasibility with strict inequalities.

enum class Relation { GreaterEq, Greater, Equal };

std::string to_string(Relation r);

struct LinearConstraint {
    ClassVector functional;
    Relation relation = Relation::GreaterEq;
    Rational bound;
    std::string label;
};

/// A system of constraints  functional . x  (>=, >, =)  bound.
struct LinearProgram {
    std::size_t variables = 0;
    std::vector<LinearConstraint> constraints;

    /// Throws DimensionMismatch if a functional has the wrong length.
    void validate() const;
};

struct Feasibility {
    bool feasible = false;
    /// A point satisfying every constraint (when feasible).
    ClassVector point;
    /// Multipliers per original constraint (when infeasible). Nonnegative for
    /// inequalities, of any sign for equalities. The weighted sum has zero
    /// functional and reads either 0 >= b with b > 0, or 0 > b with b >= 0.
    std::vector<Rational> multipliers;

    struct Expanded {
        ClassVector functional;
        Rational bound;
        bool strict = false;
    };
    Expanded expand(const LinearProgram& lp) const;
    /// True iff the multipliers form a valid contradiction for `lp`.
    bool certificate_valid(const LinearProgram& lp) const;
    bool point_valid(const LinearProgram& lp) const;
};

/// Exact feasibility by Fourier-Motzkin elimination with strictness and
/// multiplier tracking. `max_rows` bounds the intermediate system size.
Feasibility lp_feasible(const LinearProgram& lp, std::size_t max_rows = 200000);

}  // namespace moricone

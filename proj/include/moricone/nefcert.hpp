#pragma once

#include "moricone/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace moricone::nefcert {

/// A subvariety seen only through its class lattice and a curve-list nef
/// oracle: a class D is nef iff D.c >= 0 for every oracle curve c.
struct Stratum {
    std::string id;
    std::size_t rank = 0;
    std::vector<ClassVector> oracle;

    /// Throws CertificateShapeError on malformed data.
    void validate() const;
};

/// One stratum in a chain together with the map restricting classes from the
/// previous stratum (or from the root lattice, for the first step).
struct ChainStep {
    Stratum stratum;
    RationalMatrix restriction;
    /// The next stratum as a divisor on this one; absent on a final step.
    std::optional<ClassVector> next_class;
};

struct ChainCertificate {
    std::size_t root_rank = 0;
    std::vector<ChainStep> steps;
    ClassVector divisor;

    void validate() const;
};

/// Grid stratum Z_{c+u, c+v}. Exactly one incoming map is primary: from the
/// last outer stratum for cell (0,0), otherwise from the previous cell along
/// the first axis when u > 0 and along the second axis when v > 0. When both
/// previous cells exist the two composite maps must agree.
struct GridCell {
    Stratum stratum;
    std::optional<RationalMatrix> from_outer;
    std::optional<RationalMatrix> from_prev_a;
    std::optional<RationalMatrix> from_prev_b;
    ClassVector next_a;  // Z_{i+1,j} on Z_{i,j}
    ClassVector next_b;  // Z_{i,j+1} on Z_{i,j}
};

/// Outer chain X_0 .. X_{c-1} (every step carries next_class) followed by the
/// (a-c) x (b-c) grid of strata on which the two-divisor condition is checked.
struct GridCertificate {
    std::size_t root_rank = 0;
    ClassVector divisor;
    std::vector<ChainStep> outer;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<GridCell> cells;  // row-major

    const GridCell& cell(std::size_t u, std::size_t v) const { return cells[u * cols + v]; }
    void validate() const;
};

struct StepReport {
    std::string label;
    std::string stratum;
    ClassVector tested;
    std::vector<Rational> pairings;
    bool passed = false;
    std::optional<std::size_t> witness_index;
    std::optional<ClassVector> witness_curve;
};

struct Verdict {
    bool passed = false;
    std::vector<StepReport> steps;
    std::optional<std::size_t> first_failure;
    /// Recorded conclusion on success, empty otherwise.
    std::string conclusion;
};

/// Full chain criterion: differences on every non-final step, then the
/// restriction itself on the final step.
Verdict verify_chain(const ChainCertificate& cert);

/// Hypotheses for pi^*H' - E: every step carries a next class and only the
/// differences are checked.
Verdict verify_HE_hypotheses(const ChainCertificate& cert);

/// Hypotheses for phi^*H'' - E - F.
Verdict verify_HEF_hypotheses(const GridCertificate& cert);

// ---------------------------------------------------------------------------
// Product builders.

/// A chain X_i = X_{i,0} > ... > X_{i,m} = A_i on one factor, with divisor
/// H_i on the factor lattice. steps[j] carries next_class for j < m.
struct FactorChain {
    ClassVector divisor;
    std::vector<ChainStep> steps;
};

/// Chains X_{i,0} > ... > X_{i,c} on one factor and the full grid of strata
/// Z_{i,p,q} for c <= p <= a, c <= q <= b (row-major, (a-c+1) x (b-c+1)).
/// The node at (c,c) is X_{i,c}. Node (p,q) has from_prev_a when p > c and
/// from_prev_b when q > c; next_a when p < a and next_b when q < b.
struct FactorNode {
    Stratum stratum;
    std::optional<RationalMatrix> from_prev_a;
    std::optional<RationalMatrix> from_prev_b;
    std::optional<ClassVector> next_a;
    std::optional<ClassVector> next_b;
};

struct FactorGrid {
    ClassVector divisor;
    std::vector<ChainStep> outer;  // c + 1 entries; the last is X_{i,c}
    int a = 0;
    int b = 0;
    int c = 0;
    std::vector<FactorNode> nodes;

    const FactorNode& node(int p, int q) const;
    void validate() const;
};

/// Which of the product lemma's alternatives the caller admits. Index k holds
/// alternative (k+1): (1) H_1 nef, (2) H_2 nef, (3)/(4) the A-steps on factor
/// 1/2, (5)/(6) the B-steps on factor 1/2.
struct CaseSelector {
    std::array<bool, 6> allowed{true, true, true, true, true, true};
};

struct ProductChain {
    ChainCertificate certificate;
    int outer_case = 0;  // 1 or 2
};

struct ProductGrid {
    GridCertificate certificate;
    std::array<int, 3> cases{};  // outer (1|2), A-order (5|6), B-order (3|4)
};

/// Interleaved chain for H_1 + H_2 - E on X_1 x X_2.
ProductChain build_product_HE(const FactorChain& f1, const FactorChain& f2, const CaseSelector& sel = {});

/// Interleaved chain and grid for H_1 + H_2 - E - F on X_1 x X_2.
ProductGrid build_product_HEF(const FactorGrid& f1, const FactorGrid& f2, const CaseSelector& sel = {});

/// The inclusion variant A_1 < B_1, A_2 > B_2. f1 runs X_1 = B_1 > ... > A_1
/// (a1 steps after the root), f2 runs X_2 > ... > A_2 = B_{2,a2} > ... > B_2,
/// with the index of A_2 given by a2.
ProductGrid build_product_HEF_simple(const FactorChain& f1, const FactorChain& f2, int a2,
                                     const CaseSelector& sel = {});

/// Product stratum with block-diagonal lattice and union oracle.
Stratum product_stratum(const Stratum& s1, const Stratum& s2);

// ---------------------------------------------------------------------------
// Fixtures.

/// P^m with the hyperplane class; a point for m = 0.
Stratum projective_space(int m);

/// The worked example on P^{n1} x P^{n2} with A_2 a degree-d hypersurface:
/// certificates for H_1 + dH_2 - E (chain) and H_1 + dH_2 - E - F (grid).
struct TsukiokaCertificates {
    ChainCertificate he;
    GridCertificate hef;
};
TsukiokaCertificates tsukioka_example(int n1, int n2, int d);

}  // namespace moricone::nefcert

#pragma once

#include "moricone/delpezzo.hpp"
#include "moricone/nefcert.hpp"
#include "moricone/ratcone.hpp"

#include <optional>
#include <string>
#include <vector>

namespace moricone::scenario {

struct NamedCurve {
    std::string name;
    ClassVector vector;  // intersection vector against the divisor basis
    /// For curves lifted from the second factor: the factor class (dH - sum m_j E_j).
    std::optional<ClassVector> factor_class;
};

struct NamedDivisor {
    std::string name;
    ClassVector coefficients;
};

/// Two-step blowup of X_1 x X_2 for del Pezzo factors with r1 and r2 points.
/// Divisor basis (H1, E1,1..E1,r1, H2, E2,1..E2,r2, E, F).
class Scenario {
public:
    Scenario(int r1, int r2);

    int r1() const noexcept { return r1_; }
    int r2() const noexcept { return r2_; }
    std::size_t rank() const noexcept { return static_cast<std::size_t>(4 + r1_ + r2_); }
    std::vector<std::string> basis_names() const;

    std::size_t h1() const { return 0; }
    std::size_t e1(int j) const;
    std::size_t h2() const { return static_cast<std::size_t>(1 + r1_); }
    std::size_t e2(int j) const;
    std::size_t exc_e() const { return static_cast<std::size_t>(2 + r1_ + r2_); }
    std::size_t exc_f() const { return static_cast<std::size_t>(3 + r1_ + r2_); }

    const delpezzo::Lattice& factor1() const noexcept { return x1_; }
    const delpezzo::Lattice& factor2() const noexcept { return x2_; }

    /// e, f, then S_1, then S_2.
    const std::vector<NamedCurve>& curves() const noexcept { return curves_; }
    const NamedCurve& curve(const std::string& name) const;

    /// Pullbacks of factor divisor classes.
    ClassVector pullback1(const ClassVector& d) const;
    ClassVector pullback2(const ClassVector& d) const;
    /// Intersection vector of the lift a_1 x c for a curve class c on X_2.
    ClassVector lift2(const ClassVector& factor_class) const;

    /// l_i and l_{i,j}, available whether or not they belong to the catalog.
    ClassVector line(int i) const;
    ClassVector line_minus(int i, int j) const;

private:
    int r1_, r2_;
    delpezzo::Lattice x1_, x2_;
    std::vector<NamedCurve> curves_;
};

/// Throws InputError unless 0 <= r1 <= 3 and 0 <= r2 <= 8.
Scenario build_scenario(int r1, int r2);

std::vector<ClassVector> ne_vectors(const Scenario& s);
PolyCone ne_generators(const Scenario& s);

/// T_1 on the first factor lattice.
std::vector<NamedDivisor> t1_classes(const Scenario& s);
/// T on the scenario lattice.
std::vector<NamedDivisor> t_divisors(const Scenario& s);

/// Pullbacks of the factor nef cone generators plus T. The second factor's
/// nef cone is dualized under `budget`.
std::vector<NamedDivisor> nef_generators_list(const Scenario& s, const Budget& budget = {});
PolyCone nef_generators_claimed(const Scenario& s, const Budget& budget = {});

enum class EqualityStatus { Equal, Unequal, BudgetExceeded };
std::string to_string(EqualityStatus st);

struct TheoremVerdict {
    bool containment = false;
    /// How containment was established: "pairings" or "factor blocks".
    std::string containment_method;
    std::optional<std::string> containment_witness;
    EqualityStatus equality = EqualityStatus::BudgetExceeded;
    std::optional<ClassVector> equality_witness;
    bool witness_in_dual_of_ne = false;  // else it is a claimed generator outside dual(NE)
    std::optional<std::string> budget_message;
    std::size_t dual_ray_count = 0;
    std::size_t claimed_ray_count = 0;

    bool verified() const { return containment && equality == EqualityStatus::Equal; }
    bool refuted() const { return !containment || equality == EqualityStatus::Unequal; }
};

/// Containment is always checked exactly. Equality by dualization is done
/// without limits for r2 <= 6 and under `budget` for r2 in {7, 8}.
TheoremVerdict verify_theorem(const Scenario& s, const Budget& budget = {});

/// Same, against an explicit claimed generator list.
TheoremVerdict verify_theorem_against(const Scenario& s, const std::vector<ClassVector>& claimed,
                                      const Budget& budget = {});

ClassVector anticanonical(const Scenario& s);
/// (1/3)(H1 - E + H2 - E - F).
ClassVector delta(const Scenario& s);

struct CurvePairing {
    std::string curve;
    Rational value;
};

struct ClassificationResult {
    int r1 = 0;
    int r2 = 0;
    bool fano = false;
    bool weak_fano = false;
    bool fano_type = false;
    std::vector<CurvePairing> minus_k;            // -K.c for every NE generator
    std::vector<CurvePairing> delta_certificate;  // -(K+Delta).c, when -K is nef
    bool delta_passes = false;
    std::optional<CurvePairing> not_fano_witness;
    std::optional<CurvePairing> not_weak_fano_witness;
    std::optional<Feasibility> not_fano_type_certificate;
    std::vector<std::string> notes;
};

/// `scale` multiplies -K and -(K+Delta) before the sign tests.
ClassificationResult classify(const Scenario& s, const Rational& scale = 1);

struct Refutation {
    LinearProgram system;
    Feasibility verdict;
    LinearProgram relaxed;
    Feasibility relaxed_verdict;
};

/// Throws InputError when r2 < 2.
Refutation not_fano_type_refutation(const Scenario& s);

/// Rows r1 = 0..3, columns r2 = 0..8.
std::vector<std::vector<ClassificationResult>> classify_all();

struct IdentityCheck {
    std::string statement;
    bool holds = false;
};

struct IdentityVerdict {
    bool holds = true;
    std::vector<IdentityCheck> checks;
};

/// l_i = l_{i,1} + e_{i,1} when r_i >= 1, and l_{2,j2} = e(E_j1) + e(H - E_j1 - E_j2)
/// when r2 >= 2.
IdentityVerdict curve_identities(const Scenario& s, int j1 = 1, int j2 = 2);

struct TCertificates {
    NamedDivisor he_divisor;   // N1 + H2 - E
    NamedDivisor hef_divisor;  // N1 + H2 - E - F
    nefcert::ChainCertificate he;
    nefcert::GridCertificate hef;
};

/// Product certificates for every divisor in T.
std::vector<TCertificates> t_certificates(const Scenario& s);

}  // namespace moricone::scenario

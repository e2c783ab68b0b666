#include "moricone/scenario.hpp"

#include "moricone/errors.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace moricone::scenario {

namespace {

void check_ranges(int r1, int r2) {
    if (r1 < 0 || r1 > 3) throw InputError("r1 must lie in 0..3, got " + std::to_string(r1));
    if (r2 < 0 || r2 > 8) throw InputError("r2 must lie in 0..8, got " + std::to_string(r2));
}

std::string class_name(const ClassVector& d) {
    // dH - sum m_j E_j, written out.
    std::ostringstream os;
    bool first = true;
    auto term = [&](const Rational& c, const std::string& sym) {
        if (c == 0) return;
        if (c < 0) os << (first ? "-" : "-");
        else if (!first) os << "+";
        Rational a = abs(c);
        if (a != 1) os << moricone::to_string(a);
        os << sym;
        first = false;
    };
    term(d[0], "H");
    for (std::size_t j = 1; j < d.size(); ++j) term(d[j], "E" + std::to_string(j));
    if (first) os << "0";
    return os.str();
}

}  // namespace

Scenario::Scenario(int r1, int r2)
    : r1_((check_ranges(r1, r2), r1)), r2_(r2), x1_(r1), x2_(r2) {
    const std::size_t n = rank();
    auto vec = [&](std::initializer_list<std::pair<std::size_t, long>> entries) {
        ClassVector v(n);
        for (auto [i, x] : entries) v[i] = x;
        return v;
    };
    curves_.push_back({"e", vec({{exc_e(), -1}, {exc_f(), 1}}), std::nullopt});
    curves_.push_back({"f", vec({{exc_f(), -1}}), std::nullopt});

    if (r1_ == 0) {
        curves_.push_back({"l1", line(1), std::nullopt});
    } else {
        for (int j = 1; j <= r1_; ++j) {
            curves_.push_back({"l1," + std::to_string(j), line_minus(1, j), std::nullopt});
            curves_.push_back({"e1," + std::to_string(j), vec({{e1(j), -1}}), std::nullopt});
            if (r1_ == 1) break;
        }
        if (r1_ >= 2)
            for (int j1 = 1; j1 <= r1_; ++j1)
                for (int j2 = j1 + 1; j2 <= r1_; ++j2)
                    curves_.push_back({"e1," + std::to_string(j1) + "," + std::to_string(j2),
                                       vec({{h1(), 1}, {e1(j1), 1}, {e1(j2), 1}}), std::nullopt});
    }

    if (r2_ == 0) {
        curves_.push_back({"l2", line(2), x2_.hyperplane()});
    } else if (r2_ == 1) {
        ClassVector l = x2_.hyperplane() - x2_.exceptional(1);
        curves_.push_back({"l2,1", lift2(l), l});
        curves_.push_back({"e2,1", lift2(x2_.exceptional(1)), x2_.exceptional(1)});
    } else {
        auto classes = delpezzo::minus_one_classes(x2_);
        for (std::size_t k = 0; k < classes.size(); ++k)
            curves_.push_back({"e2," + std::to_string(k + 1) + " [" + class_name(classes[k]) + "]", lift2(classes[k]),
                               classes[k]});
    }
}

Scenario build_scenario(int r1, int r2) { return Scenario(r1, r2); }

std::vector<std::string> Scenario::basis_names() const {
    std::vector<std::string> names{"H1"};
    for (int j = 1; j <= r1_; ++j) names.push_back("E1," + std::to_string(j));
    names.push_back("H2");
    for (int j = 1; j <= r2_; ++j) names.push_back("E2," + std::to_string(j));
    names.push_back("E");
    names.push_back("F");
    return names;
}

std::size_t Scenario::e1(int j) const {
    if (j < 1 || j > r1_) throw InputError("E1 index out of range");
    return static_cast<std::size_t>(j);
}

std::size_t Scenario::e2(int j) const {
    if (j < 1 || j > r2_) throw InputError("E2 index out of range");
    return static_cast<std::size_t>(1 + r1_ + j);
}

const NamedCurve& Scenario::curve(const std::string& name) const {
    for (const auto& c : curves_)
        if (c.name == name) return c;
    throw InputError("no curve named '" + name + "' in scenario (" + std::to_string(r1_) + "," + std::to_string(r2_) + ")");
}

ClassVector Scenario::pullback1(const ClassVector& d) const {
    if (d.size() != x1_.rank()) throw DimensionMismatch("first-factor class has wrong length");
    ClassVector v(rank());
    for (std::size_t i = 0; i < d.size(); ++i) v[i] = d[i];
    return v;
}

ClassVector Scenario::pullback2(const ClassVector& d) const {
    if (d.size() != x2_.rank()) throw DimensionMismatch("second-factor class has wrong length");
    ClassVector v(rank());
    for (std::size_t i = 0; i < d.size(); ++i) v[h2() + i] = d[i];
    return v;
}

ClassVector Scenario::lift2(const ClassVector& c) const {
    // H2 and E pair with the lift as H pairs with c; E2,j as E_j pairs with c.
    ClassVector iv = x2_.curve_vector(c);
    ClassVector v(rank());
    for (std::size_t i = 0; i < iv.size(); ++i) v[h2() + i] = iv[i];
    v[exc_e()] = iv[0];
    return v;
}

ClassVector Scenario::line(int i) const {
    ClassVector v(rank());
    v[i == 1 ? h1() : h2()] = 1;
    v[exc_e()] = 1;
    return v;
}

ClassVector Scenario::line_minus(int i, int j) const {
    ClassVector v = line(i);
    v[i == 1 ? e1(j) : e2(j)] = 1;
    return v;
}

std::vector<ClassVector> ne_vectors(const Scenario& s) {
    std::vector<ClassVector> out;
    for (const auto& c : s.curves()) out.push_back(c.vector);
    return out;
}

PolyCone ne_generators(const Scenario& s) { return cone_from_rays(s.rank(), ne_vectors(s)); }

std::vector<NamedDivisor> t1_classes(const Scenario& s) {
    const auto& x = s.factor1();
    std::vector<NamedDivisor> out{{"H1", x.hyperplane()}};
    if (s.r1() == 2) {
        out.push_back({"2H1-E1,1-E1,2", 2 * x.hyperplane() - x.exceptional(1) - x.exceptional(2)});
    } else if (s.r1() == 3) {
        for (int j1 = 1; j1 <= 3; ++j1)
            for (int j2 = j1 + 1; j2 <= 3; ++j2)
                out.push_back({"2H1-E1," + std::to_string(j1) + "-E1," + std::to_string(j2),
                               2 * x.hyperplane() - x.exceptional(j1) - x.exceptional(j2)});
        out.push_back({"2H1-E1,1-E1,2-E1,3",
                       2 * x.hyperplane() - x.exceptional(1) - x.exceptional(2) - x.exceptional(3)});
    }
    return out;
}

std::vector<NamedDivisor> t_divisors(const Scenario& s) {
    std::vector<NamedDivisor> out;
    for (const auto& n : t1_classes(s)) {
        ClassVector d = s.pullback1(n.coefficients);
        d[s.h2()] += 1;
        d[s.exc_e()] -= 1;
        out.push_back({n.name + "+H2-E", d});
        d[s.exc_f()] -= 1;
        out.push_back({n.name + "+H2-E-F", d});
    }
    return out;
}

std::vector<NamedDivisor> nef_generators_list(const Scenario& s, const Budget& budget) {
    std::vector<NamedDivisor> out;
    const PolyCone nef1 = delpezzo::nef_cone(s.factor1());
    const PolyCone nef2 = delpezzo::nef_cone(s.factor2(), budget);
    for (const auto& g : nef1.rays()) out.push_back({"X1:" + class_name(g), s.pullback1(g)});
    for (const auto& g : nef2.rays())
        out.push_back({"X2:" + class_name(g), s.pullback2(g)});
    for (auto& t : t_divisors(s)) out.push_back(std::move(t));
    return out;
}

PolyCone nef_generators_claimed(const Scenario& s, const Budget& budget) {
    std::vector<ClassVector> gens;
    for (const auto& d : nef_generators_list(s, budget)) gens.push_back(d.coefficients);
    return cone_from_rays(s.rank(), gens);
}

std::string to_string(EqualityStatus st) {
    switch (st) {
        case EqualityStatus::Equal: return "equal";
        case EqualityStatus::Unequal: return "unequal";
        case EqualityStatus::BudgetExceeded: return "budget exceeded, containment only";
    }
    return "?";
}

namespace {

std::optional<std::string> pairing_failure(const Scenario& s, const std::vector<ClassVector>& divisors) {
    for (const auto& d : divisors)
        for (const auto& c : s.curves()) {
            Rational p = dot(d, c.vector);
            if (p < 0) {
                std::ostringstream os;
                os << "divisor " << d << " pairs to " << moricone::to_string(p) << " with curve " << c.name;
                return os.str();
            }
        }
    return std::nullopt;
}

// One time limit shared by every dualization of a verification run.
class Deadline {
public:
    Deadline(const Budget& budget, bool active)
        : budget_(active ? budget : Budget{}), start_(std::chrono::steady_clock::now()) {}

    Budget remaining() const {
        Budget b = budget_;
        if (b.max_seconds) {
            std::chrono::duration<double> used = std::chrono::steady_clock::now() - start_;
            const double left = *b.max_seconds - used.count();
            if (left <= 0)
                throw BudgetExceeded("time budget of " + std::to_string(*b.max_seconds) + " s used up");
            b.max_seconds = left;
        }
        return b;
    }

private:
    Budget budget_;
    std::chrono::steady_clock::time_point start_;
};

void check_equality(const Scenario& s, const std::vector<ClassVector>& claimed, const Deadline& deadline,
                    TheoremVerdict& v) {
    try {
        PolyCone ne = cone_from_rays(s.rank(), ne_vectors(s), deadline.remaining());
        PolyCone dual_ne = dual(ne, deadline.remaining());
        PolyCone claim = cone_from_rays(s.rank(), claimed, deadline.remaining());
        v.dual_ray_count = dual_ne.rays().size();
        v.claimed_ray_count = claim.rays().size();
        auto eq = cones_equal(dual_ne, claim);
        v.equality = eq.equal ? EqualityStatus::Equal : EqualityStatus::Unequal;
        v.equality_witness = eq.witness;
        v.witness_in_dual_of_ne = eq.witness && eq.witness_from_first;
    } catch (const BudgetExceeded& e) {
        v.equality = EqualityStatus::BudgetExceeded;
        v.budget_message = e.what();
    }
}

TheoremVerdict verify_against(const Scenario& s, const std::vector<ClassVector>& claimed, const Deadline& deadline) {
    TheoremVerdict v;
    v.containment_method = "pairings";
    v.containment_witness = pairing_failure(s, claimed);
    v.containment = !v.containment_witness;
    check_equality(s, claimed, deadline, v);
    return v;
}

}  // namespace

TheoremVerdict verify_theorem_against(const Scenario& s, const std::vector<ClassVector>& claimed, const Budget& budget) {
    return verify_against(s, claimed, Deadline(budget, s.r2() > 6));
}

TheoremVerdict verify_theorem(const Scenario& s, const Budget& budget) {
    const Deadline deadline(budget, s.r2() > 6);
    try {
        std::vector<ClassVector> claimed;
        for (const auto& d : nef_generators_list(s, deadline.remaining())) claimed.push_back(d.coefficients);
        return verify_against(s, claimed, deadline);
    } catch (const BudgetExceeded& e) {
        // Without the generators of Nef(X2), every pullback of a nef class on X2
        // is still nonnegative on a curve whose X2 block lies in NE(X2).
        TheoremVerdict v;
        v.containment_method = "factor blocks";
        v.equality = EqualityStatus::BudgetExceeded;
        v.budget_message = e.what();
        std::vector<ClassVector> direct;
        const PolyCone nef1 = delpezzo::nef_cone(s.factor1());
        for (const auto& g : nef1.rays()) direct.push_back(s.pullback1(g));
        for (const auto& t : t_divisors(s)) direct.push_back(t.coefficients);
        v.containment_witness = pairing_failure(s, direct);
        auto factor_curves = delpezzo::ne_curve_vectors(s.factor2());
        for (const auto& c : s.curves()) {
            if (v.containment_witness) break;
            ClassVector block(s.factor2().rank());
            for (std::size_t i = 0; i < block.size(); ++i) block[i] = c.vector[s.h2() + i];
            if (block.is_zero() || std::find(factor_curves.begin(), factor_curves.end(), block) != factor_curves.end())
                continue;
            if (!in_cone_generated_by(factor_curves, block.size(), block).member)
                v.containment_witness = "X2 block of curve " + c.name + " lies outside NE(X2)";
        }
        v.containment = !v.containment_witness;
        return v;
    }
}

ClassVector anticanonical(const Scenario& s) {
    ClassVector k(s.rank());
    k[s.h1()] = 3;
    for (int j = 1; j <= s.r1(); ++j) k[s.e1(j)] = -1;
    k[s.h2()] = 3;
    for (int j = 1; j <= s.r2(); ++j) k[s.e2(j)] = -1;
    k[s.exc_e()] = -2;
    k[s.exc_f()] = -1;
    return k;
}

ClassVector delta(const Scenario& s) {
    ClassVector d(s.rank());
    d[s.h1()] = 1;
    d[s.h2()] = 1;
    d[s.exc_e()] = -2;
    d[s.exc_f()] = -1;
    return Rational(1, 3) * d;
}

ClassificationResult classify(const Scenario& s, const Rational& scale) {
    if (scale <= 0) throw InputError("scale must be positive");
    ClassificationResult r;
    r.r1 = s.r1();
    r.r2 = s.r2();
    const ClassVector mk = scale * anticanonical(s);
    const ClassVector mkd = scale * (anticanonical(s) - delta(s));
    bool positive = true, nonnegative = true;
    for (const auto& c : s.curves()) {
        Rational p = dot(mk, c.vector);
        r.minus_k.push_back({c.name, p});
        if (p <= 0 && positive) {
            positive = false;
            r.not_fano_witness = CurvePairing{c.name, p};
        }
        if (p < 0 && nonnegative) {
            nonnegative = false;
            r.not_weak_fano_witness = CurvePairing{c.name, p};
        }
    }
    r.fano = positive;
    if (nonnegative) {
        r.delta_passes = true;
        for (const auto& c : s.curves()) {
            Rational p = dot(mkd, c.vector);
            r.delta_certificate.push_back({c.name, p});
            if (p <= 0 && r.delta_passes) {
                r.delta_passes = false;
                r.not_weak_fano_witness = CurvePairing{c.name, p};
            }
        }
    }
    r.weak_fano = nonnegative && r.delta_passes;
    r.fano_type = r.weak_fano;
    if (s.r2() >= 2) r.not_fano_type_certificate = not_fano_type_refutation(s).verdict;
    if (s.r1() == 0 || s.r2() == 0) {
        for (const auto& c : s.curves())
            if (c.name == "l1" || c.name == "l2")
                r.notes.push_back("-K." + c.name + " = " + moricone::to_string(dot(anticanonical(s), c.vector)) +
                                  ": 3 from the hyperplane class, -2 from E");
    }
    return r;
}

Refutation not_fano_type_refutation(const Scenario& s) {
    if (s.r2() < 2) throw InputError("the Fano-type refutation needs r2 >= 2");
    // Variables (alpha2, beta2_j1, beta2_j2, gamma).
    Refutation out;
    out.system.variables = 4;
    out.system.constraints = {
        {ClassVector{1, 1, 0, 0}, Relation::GreaterEq, 0, "alpha2 + beta2,j1 >= 0"},
        {ClassVector{1, 0, 1, 0}, Relation::GreaterEq, 0, "alpha2 + beta2,j2 >= 0"},
        {ClassVector{0, 1, 0, 1}, Relation::Greater, -1, "1 + beta2,j1 + gamma > 0"},
        {ClassVector{-1, -1, -1, -1}, Relation::Greater, 1, "1 + alpha2 + beta2,j1 + beta2,j2 + gamma < 0"},
    };
    out.verdict = lp_feasible(out.system);
    out.relaxed = out.system;
    for (auto& c : out.relaxed.constraints)
        if (c.relation == Relation::Greater) c.relation = Relation::GreaterEq;
    out.relaxed.constraints[2].label = "1 + beta2,j1 + gamma >= 0";
    out.relaxed.constraints[3].label = "1 + alpha2 + beta2,j1 + beta2,j2 + gamma <= 0";
    out.relaxed_verdict = lp_feasible(out.relaxed);
    return out;
}

std::vector<std::vector<ClassificationResult>> classify_all() {
    std::vector<std::vector<ClassificationResult>> grid;
    for (int r1 = 0; r1 <= 3; ++r1) {
        std::vector<ClassificationResult> row;
        for (int r2 = 0; r2 <= 8; ++r2) row.push_back(classify(build_scenario(r1, r2)));
        grid.push_back(std::move(row));
    }
    return grid;
}

IdentityVerdict curve_identities(const Scenario& s, int j1, int j2) {
    IdentityVerdict v;
    auto add = [&](std::string statement, const ClassVector& lhs, const ClassVector& rhs) {
        bool ok = lhs == rhs;
        v.checks.push_back({std::move(statement), ok});
        v.holds = v.holds && ok;
    };
    if (s.r1() >= 1) {
        ClassVector e11(s.rank());
        e11[s.e1(1)] = -1;
        add("l1 = l1,1 + e1,1", s.line(1), s.line_minus(1, 1) + e11);
    }
    if (s.r2() >= 1) {
        const auto& x = s.factor2();
        add("l2 = l2,1 + e(E2,1)", s.line(2), s.line_minus(2, 1) + s.lift2(x.exceptional(1)));
    }
    if (s.r2() >= 2) {
        if (j1 == j2 || j1 < 1 || j2 < 1 || j1 > s.r2() || j2 > s.r2()) throw InputError("need distinct indices j1, j2");
        const auto& x = s.factor2();
        ClassVector conic_less = x.hyperplane() - x.exceptional(j1) - x.exceptional(j2);
        add("l2," + std::to_string(j2) + " = e(E2," + std::to_string(j1) + ") + e(H-E" + std::to_string(j1) + "-E" +
                std::to_string(j2) + ")",
            s.line_minus(2, j2), s.lift2(x.exceptional(j1)) + s.lift2(conic_less));
    }
    return v;
}

namespace {

RationalMatrix row_matrix(const ClassVector& row) { return RationalMatrix(row.size(), {row}); }

nefcert::Stratum curve_stratum(const std::string& id) { return nefcert::Stratum{id, 1, {ClassVector{1}}}; }

}  // namespace

std::vector<TCertificates> t_certificates(const Scenario& s) {
    using namespace nefcert;
    const auto& x1 = s.factor1();
    const auto& x2 = s.factor2();
    Stratum s1{"X1", x1.rank(), delpezzo::ne_curve_vectors(x1)};
    Stratum s2{"X2", x2.rank(), delpezzo::ne_curve_vectors(x2)};
    Stratum point{"pt", 0, {}};

    // X2 > A2 (a line, class H) > b2.
    FactorChain f2;
    f2.divisor = x2.hyperplane();
    f2.steps.push_back({s2, RationalMatrix::identity(x2.rank()), x2.hyperplane()});
    f2.steps.push_back({curve_stratum("A2"), row_matrix(x2.curve_vector(x2.hyperplane())), ClassVector{1}});
    f2.steps.push_back({point, RationalMatrix(0, 1), std::nullopt});
    FactorChain f2_he{f2.divisor, {f2.steps[0], f2.steps[1]}};
    f2_he.steps[1].next_class.reset();

    std::vector<TCertificates> out;
    auto t = t_divisors(s);
    auto t1 = t1_classes(s);
    for (std::size_t i = 0; i < t1.size(); ++i) {
        const ClassVector& n1 = t1[i].coefficients;
        // A smooth curve C through a1 with N1 - C nef and N1.C >= 1.
        ClassVector c = x1.hyperplane();
        std::string cname = "line";
        if (n1[0] == 2) {
            int missing = 0;
            for (int j = 1; j <= s.r1(); ++j)
                if (n1[static_cast<std::size_t>(j)] == 0) ++missing;
            if (s.r1() == 3 && missing == 0) {
                c = n1;
                cname = "conic";
            } else {
                int first = 1;
                while (n1[static_cast<std::size_t>(first)] == 0) ++first;
                c = x1.hyperplane() - x1.exceptional(first);
                cname = "line through E1," + std::to_string(first);
            }
        }
        FactorChain f1;
        f1.divisor = n1;
        f1.steps.push_back({s1, RationalMatrix::identity(x1.rank()), c});
        f1.steps.push_back({curve_stratum("C (" + cname + ")"), row_matrix(x1.curve_vector(c)), ClassVector{1}});
        f1.steps.push_back({point, RationalMatrix(0, 1), std::nullopt});

        TCertificates tc{t[2 * i], t[2 * i + 1], build_product_HE(f1, f2_he).certificate,
                         build_product_HEF_simple(f1, f2, 1).certificate};
        out.push_back(std::move(tc));
    }
    return out;
}

}  // namespace moricone::scenario

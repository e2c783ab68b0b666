#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "moricone/errors.hpp"
#include "moricone/scenario.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <set>

using namespace moricone;
using namespace moricone::scenario;

namespace {

const NamedCurve* lifted(const Scenario& s, const ClassVector& factor_class) {
    for (const auto& c : s.curves())
        if (c.factor_class && *c.factor_class == factor_class) return &c;
    return nullptr;
}

std::size_t s1_size(int r1) { return r1 == 0 ? 1 : r1 == 1 ? 2 : 2 * r1 + r1 * (r1 - 1) / 2; }
std::size_t s2_size(int r2) {
    static const std::size_t counts[] = {1, 2, 3, 6, 10, 16, 27, 56, 240};
    return counts[r2];
}

Rational third(long n) { return Rational(n, 3); }

}  // namespace

TEST_CASE("basis layout and ranges") {
    Scenario s(2, 3);
    CHECK(s.rank() == 9);
    CHECK(s.basis_names() == std::vector<std::string>{"H1", "E1,1", "E1,2", "H2", "E2,1", "E2,2", "E2,3", "E", "F"});
    CHECK(s.e1(2) == 2);
    CHECK(s.h2() == 3);
    CHECK(s.e2(1) == 4);
    CHECK(s.exc_e() == 7);
    CHECK(s.exc_f() == 8);
    CHECK_THROWS_AS(build_scenario(4, 0), InputError);
    CHECK_THROWS_AS(build_scenario(0, 9), InputError);
    CHECK_THROWS_AS(build_scenario(-1, 2), InputError);
    CHECK_THROWS_AS(s.curve("nope"), InputError);
}

TEST_CASE("golden intersection vectors for (1,2)") {
    // Basis H1, E1,1, H2, E2,1, E2,2, E, F.
    Scenario s(1, 2);
    CHECK(s.curve("e").vector == ClassVector{0, 0, 0, 0, 0, -1, 1});
    CHECK(s.curve("f").vector == ClassVector{0, 0, 0, 0, 0, 0, -1});
    CHECK(s.curve("l1,1").vector == ClassVector{1, 1, 0, 0, 0, 1, 0});
    CHECK(s.curve("e1,1").vector == ClassVector{0, -1, 0, 0, 0, 0, 0});
    const auto* ex = lifted(s, ClassVector{0, 1, 0});
    REQUIRE(ex);
    CHECK(ex->vector == ClassVector{0, 0, 0, -1, 0, 0, 0});
    const auto* conic = lifted(s, ClassVector{1, -1, -1});
    REQUIRE(conic);
    CHECK(conic->vector == ClassVector{0, 0, 1, 1, 1, 1, 0});
    CHECK(s.curves().size() == 2 + 2 + 3);
}

TEST_CASE("golden intersection vectors for (2,0) and (0,1)") {
    // Basis H1, E1,1, E1,2, H2, E, F.
    Scenario s(2, 0);
    CHECK(s.curve("l1,2").vector == ClassVector{1, 0, 1, 0, 1, 0});
    CHECK(s.curve("e1,1,2").vector == ClassVector{1, 1, 1, 0, 0, 0});
    CHECK(s.curve("l2").vector == ClassVector{0, 0, 0, 1, 1, 0});
    // Basis H1, H2, E2,1, E, F.
    Scenario t(0, 1);
    CHECK(t.curve("l1").vector == ClassVector{1, 0, 0, 1, 0});
    CHECK(t.curve("l2,1").vector == ClassVector{0, 1, 1, 1, 0});
    CHECK(t.curve("e2,1").vector == ClassVector{0, 0, -1, 0, 0});
}

TEST_CASE("catalog sizes") {
    for (int r1 = 0; r1 <= 3; ++r1)
        for (int r2 = 0; r2 <= 8; ++r2) {
            Scenario s(r1, r2);
            CHECK(s.curves().size() == 2 + s1_size(r1) + s2_size(r2));
            CHECK(t_divisors(s).size() == 2 * t1_classes(s).size());
        }
    CHECK(t1_classes(Scenario(3, 0)).size() == 5);
}

TEST_CASE("Nef equals the dual of NE for r2 <= 6") {
    for (int r1 = 0; r1 <= 3; ++r1)
        for (int r2 = 0; r2 <= 6; ++r2) {
            CAPTURE(r1);
            CAPTURE(r2);
            auto v = verify_theorem(Scenario(r1, r2));
            CHECK(v.containment);
            CHECK(v.equality == EqualityStatus::Equal);
            CHECK(v.verified());
            CHECK_FALSE(v.refuted());
            CHECK(v.dual_ray_count == v.claimed_ray_count);
        }
}

TEST_CASE("Nef agrees with a brute-force facet enumeration of NE") {
    for (auto [r1, r2] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 2}, {1, 1}, {2, 1}, {1, 3}, {2, 2}}) {
        CAPTURE(r1);
        CAPTURE(r2);
        Scenario s(r1, r2);
        auto facets = oracle::brute_facets(ne_vectors(s), s.rank());
        std::set<ClassVector> expected(facets.begin(), facets.end());
        PolyCone claimed = nef_generators_claimed(s);
        std::set<ClassVector> got(claimed.rays().begin(), claimed.rays().end());
        CHECK(got == expected);
    }
}

TEST_CASE("dropping or adding a generator is detected") {
    Scenario s(1, 1);
    std::vector<ClassVector> claimed;
    for (const auto& d : nef_generators_list(s)) claimed.push_back(d.coefficients);

    auto shorter = claimed;
    shorter.pop_back();  // the last T divisor is extremal
    auto v = verify_theorem_against(s, shorter);
    CHECK(v.containment);
    CHECK(v.equality == EqualityStatus::Unequal);
    CHECK(v.witness_in_dual_of_ne);
    CHECK(v.refuted());

    auto longer = claimed;
    ClassVector e(s.rank());
    e[s.exc_e()] = 1;
    longer.push_back(e);
    v = verify_theorem_against(s, longer);
    CHECK_FALSE(v.containment);
    REQUIRE(v.containment_witness);
    CHECK(v.refuted());
}

TEST_CASE("budget exhaustion is not a refutation") {
    Budget tiny;
    tiny.max_rays = 5;
    auto v = verify_theorem(Scenario(1, 7), tiny);
    CHECK(v.containment);
    CHECK(v.equality == EqualityStatus::BudgetExceeded);
    CHECK(v.budget_message);
    CHECK_FALSE(v.verified());
    CHECK_FALSE(v.refuted());
    CHECK(v.containment_method == "factor blocks");
}

TEST_CASE("containment holds for r2 in {7, 8}") {
    Budget quick;
    quick.max_seconds = 2;
    for (int r1 = 0; r1 <= 3; ++r1)
        for (int r2 = 7; r2 <= 8; ++r2) {
            auto v = verify_theorem(Scenario(r1, r2), quick);
            CHECK(v.containment);
            CHECK_FALSE(v.refuted());
        }
}

TEST_CASE("classification grid") {
    auto grid = classify_all();
    REQUIRE(grid.size() == 4);
    for (int r1 = 0; r1 <= 3; ++r1) {
        REQUIRE(grid[r1].size() == 9);
        for (int r2 = 0; r2 <= 8; ++r2) {
            CAPTURE(r1);
            CAPTURE(r2);
            const auto& c = grid[r1][r2];
            CHECK(c.fano == (r1 == 0 && r2 == 0));
            CHECK(c.weak_fano == (r2 <= 1));
            CHECK(c.fano_type == c.weak_fano);
            if (!c.fano) {
                REQUIRE(c.not_fano_witness);
                CHECK(c.not_fano_witness->value <= 0);
            }
            if (!c.weak_fano) {
                REQUIRE(c.not_weak_fano_witness);
                CHECK(c.not_weak_fano_witness->value < 0);
                REQUIRE(c.not_fano_type_certificate);
                CHECK_FALSE(c.not_fano_type_certificate->feasible);
            }
            CHECK(c.minus_k.size() == Scenario(r1, r2).curves().size());
        }
    }
}

TEST_CASE("anticanonical pairings") {
    for (int r1 = 0; r1 <= 3; ++r1)
        for (int r2 = 0; r2 <= 2; ++r2) {
            Scenario s(r1, r2);
            ClassVector mk = anticanonical(s);
            CHECK(dot(mk, s.curve("e").vector) == 1);
            CHECK(dot(mk, s.curve("f").vector) == 1);
            for (int j = 1; j <= r1; ++j) {
                CHECK(dot(mk, s.line_minus(1, j)) == 0);
                CHECK(dot(mk, s.line(1)) == 1);
            }
        }
    Scenario s(0, 2);
    const auto* conic = lifted(s, ClassVector{1, -1, -1});
    REQUIRE(conic);
    CHECK(dot(anticanonical(s), conic->vector) == -1);
}

TEST_CASE("delta certificate values") {
    for (int r1 = 0; r1 <= 3; ++r1)
        for (int r2 = 0; r2 <= 1; ++r2) {
            CAPTURE(r1);
            CAPTURE(r2);
            Scenario s(r1, r2);
            auto c = classify(s);
            REQUIRE(c.delta_passes);
            auto value = [&](const std::string& name) {
                for (const auto& p : c.delta_certificate)
                    if (p.curve == name) return p.value;
                FAIL("missing curve " << name);
                return Rational(0);
            };
            CHECK(value("e") == third(2));
            CHECK(value("f") == third(2));
            if (r1 == 0) CHECK(value("l1") == third(4));
            for (int j = 1; j <= r1 && r1 >= 1; ++j) {
                if (r1 == 1 && j > 1) break;
                CHECK(value("l1," + std::to_string(j)) == third(1));
                CHECK(value("e1," + std::to_string(j)) == 1);
            }
            if (r1 >= 2) CHECK(value("e1,1,2") == third(2));
            if (r2 == 0) CHECK(value("l2") == third(4));
            if (r2 == 1) {
                CHECK(value("l2,1") == third(1));
                CHECK(value("e2,1") == 1);
            }
        }
}

TEST_CASE("scaling does not change the classification") {
    for (int r2 : {0, 1, 3}) {
        Scenario s(1, r2);
        auto a = classify(s), b = classify(s, Rational(7, 2));
        CHECK(a.fano == b.fano);
        CHECK(a.weak_fano == b.weak_fano);
        CHECK(a.delta_passes == b.delta_passes);
    }
    CHECK_THROWS_AS(classify(Scenario(0, 0), 0), InputError);
}

TEST_CASE("notes flag the line pairing") {
    auto c = classify(Scenario(0, 0));
    CHECK_FALSE(c.notes.empty());
}

TEST_CASE("Fano type refutation") {
    for (int r2 = 2; r2 <= 8; ++r2) {
        Scenario s(0, r2);
        auto r = not_fano_type_refutation(s);
        CHECK_FALSE(r.verdict.feasible);
        CHECK(r.verdict.certificate_valid(r.system));
        auto ex = r.verdict.expand(r.system);
        CHECK(ex.functional.is_zero());
        CHECK(((ex.strict && ex.bound >= 0) || (!ex.strict && ex.bound > 0)));
        CHECK(r.relaxed_verdict.feasible);
        CHECK(r.relaxed_verdict.point_valid(r.relaxed));
    }
    CHECK_THROWS_AS(not_fano_type_refutation(Scenario(0, 1)), InputError);
}

TEST_CASE("curve identities") {
    for (int r1 = 0; r1 <= 3; ++r1)
        for (int r2 = 0; r2 <= 8; ++r2) {
            Scenario s(r1, r2);
            CHECK(curve_identities(s).holds);
            for (int j1 = 1; j1 <= r2 && r2 >= 2; ++j1)
                for (int j2 = 1; j2 <= r2; ++j2)
                    if (j1 != j2) CHECK(curve_identities(s, j1, j2).holds);
        }
    CHECK_THROWS_AS(curve_identities(Scenario(0, 3), 2, 2), InputError);
    // The identity fails if the wrong line is used on the left.
    Scenario s(0, 3);
    const auto& x = s.factor2();
    CHECK(s.line_minus(2, 1) != s.lift2(x.exceptional(1)) + s.lift2(x.hyperplane() - x.exceptional(1) - x.exceptional(2)));
}

TEST_CASE("T divisors: cone membership agrees with product certificates") {
    for (int r1 = 0; r1 <= 3; ++r1)
        for (int r2 = 0; r2 <= 6; ++r2) {
            CAPTURE(r1);
            CAPTURE(r2);
            Scenario s(r1, r2);
            PolyCone dual_ne = dual(ne_generators(s));
            auto certs = t_certificates(s);
            REQUIRE(certs.size() == t1_classes(s).size());
            for (const auto& tc : certs) {
                bool he_member = contains(dual_ne, tc.he_divisor.coefficients).member;
                bool hef_member = contains(dual_ne, tc.hef_divisor.coefficients).member;
                CHECK(he_member == nefcert::verify_HE_hypotheses(tc.he).passed);
                CHECK(hef_member == nefcert::verify_HEF_hypotheses(tc.hef).passed);
                CHECK(he_member);
                CHECK(hef_member);
            }
        }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "moricone/blowup.hpp"
#include "moricone/errors.hpp"

#include <algorithm>
#include <functional>

using namespace moricone;
using namespace moricone::blowup;

namespace {

// All admissible c-multisets for (a, b): nondecreasing lists of length 1..3
// with entries in 1..min(a,b) and no entry equal to a.
std::vector<std::vector<int>> multisets(int a, int b) {
    std::vector<std::vector<int>> out;
    const int top = std::min(a, b);
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int from) {
        if (!cur.empty()) out.push_back(cur);
        if (cur.size() == 3) return;
        for (int c = from; c <= top; ++c) {
            if (c == a) continue;
            cur.push_back(c);
            rec(c);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

ConstructionParams params(int a, int b, std::vector<int> cs) {
    ConstructionParams p;
    p.a = a;
    p.b = b;
    p.components = std::move(cs);
    p.a_subset_b = std::find(p.components.begin(), p.components.end(), b) != p.components.end();
    return p;
}

}  // namespace

TEST_CASE("pairing table") {
    RationalMatrix m = relative_pairing();
    CHECK(m(0, 0) == -1);  // E.e
    CHECK(m(0, 1) == 0);   // E.f
    CHECK(m(1, 0) == 1);   // F.e
    CHECK(m(1, 1) == -1);  // F.f
    const ClassVector minus_ef{-1, -1};
    CHECK(dot(minus_ef, curve_e()) == 0);
    CHECK(dot(minus_ef, curve_f()) == 1);
    CHECK(dot(ClassVector{-1, 0}, curve_f()) == 0);
}

TEST_CASE("relative cones are mutually dual") {
    RelativeCones rc = relative_cones();
    CHECK(rc.verified());
    CHECK(cones_equal(rc.nef, cone_from_rays(2, std::vector<ClassVector>{{-1, 0}, {-1, -1}})).equal);
    CHECK(cones_equal(dual(rc.ne), rc.nef).equal);
    CHECK(cones_equal(dual(rc.nef), rc.ne).equal);
    for (const auto& g : rc.nef.rays()) {
        CHECK(dot(g, curve_e()) >= 0);
        CHECK(dot(g, curve_f()) >= 0);
    }
}

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(params(3, 2, {1}).validate());
    CHECK_THROWS_AS(params(1, 2, {1}).validate(), InputError);
    CHECK_THROWS_AS(params(2, 2, {}).validate(), InputError);
    CHECK_THROWS_AS(params(2, 3, {3}).validate(), InputError);  // c > min(a, b)
    CHECK_THROWS_AS(params(3, 3, {3}).validate(), InputError);  // c = a
    auto p = params(3, 2, {1});
    p.b_subset_a = true;
    CHECK_THROWS_AS(p.validate(), InputError);
    p = params(3, 2, {2});
    p.a_subset_b = false;
    CHECK_THROWS_AS(p.validate(), InputError);
    p = params(3, 2, {1});
    p.a_subset_b = true;
    CHECK_THROWS_AS(p.validate(), InputError);
    CHECK_THROWS_AS(classify(params(2, 3, {0})), InputError);
}

TEST_CASE("named construction examples") {
    auto r = classify(params(3, 2, {1}));
    CHECK(r.is_small);
    CHECK(r.is_K_extremal);
    CHECK(r.birational_modification == Modification::Flip);
    CHECK(r.contraction_type() == "small");

    r = classify(params(2, 2, {1}));
    CHECK(r.is_small);
    CHECK_FALSE(r.is_K_extremal);
    CHECK(r.birational_modification == Modification::Flop);

    r = classify(params(3, 2, {2}));
    CHECK_FALSE(r.is_small);
    CHECK(r.contraction_type() == "divisorial");
    CHECK(r.exceptional_component_codims == std::vector<int>{1});
    CHECK(r.birational_modification == Modification::None);

    CHECK(k_degree(params(3, 2, {1})) == std::pair{-1, -1});
    CHECK(k_degree(params(2, 3, {1})).first == 1);
    CHECK(k_degree(params(4, 4, {2})).first == 0);
}

TEST_CASE("contraction grid") {
    for (int a = 2; a <= 6; ++a)
        for (int b = 2; b <= 6; ++b)
            for (const auto& cs : multisets(a, b)) {
                CAPTURE(a);
                CAPTURE(b);
                auto r = classify(params(a, b, cs));
                const int maxc = *std::max_element(cs.begin(), cs.end());
                CHECK(r.is_small == (maxc < b));
                CHECK(r.is_K_extremal == (a > b));
                CHECK(r.K_dot_e == b - a);
                CHECK(r.K_dot_f == -(b - 1));
                Modification want = !r.is_small ? Modification::None
                                    : a > b      ? Modification::Flip
                                    : a == b     ? Modification::Flop
                                                 : Modification::None;
                CHECK(r.birational_modification == want);
                REQUIRE(r.exceptional_component_codims.size() == cs.size());
                for (std::size_t i = 0; i < cs.size(); ++i) CHECK(r.exceptional_component_codims[i] == b - cs[i] + 1);

                // Order of the multiset never matters.
                auto rev = cs;
                std::reverse(rev.begin(), rev.end());
                auto r2 = classify(params(a, b, rev));
                CHECK(r2.is_small == r.is_small);
                CHECK(r2.birational_modification == r.birational_modification);
            }
}

TEST_CASE("conormal calculators") {
    CHECK(conormal_linear(4, 0).empty());
    CHECK(conormal_linear(4, 1) == DegreeMultiset{{-1, 1}});
    CHECK(conormal_linear(4, 3) == DegreeMultiset{{-1, 3}});
    CHECK_THROWS_AS(conormal_linear(2, 3), InputError);
    CHECK(conormal_fiber(0) == DegreeMultiset{{1, 1}});
    CHECK(conormal_fiber(1) == DegreeMultiset{{1, 1}, {0, 1}});
    CHECK(conormal_fiber(4) == DegreeMultiset{{1, 1}, {0, 4}});
    CHECK(conormal_restricted(2, 2, 1) == DegreeMultiset{{0, 1}, {-1, 1}});
    CHECK(conormal_restricted(4, 3, 2) == DegreeMultiset{{0, 1}, {-1, 2}});
    CHECK(conormal_restricted(4, 3, 3) == DegreeMultiset{{-1, 3}});
    CHECK_THROWS_AS(conormal_restricted(2, 3, 3), InputError);
}

TEST_CASE("conormal multiplicities match bundle ranks") {
    for (int n = 0; n <= 8; ++n)
        for (int c = 0; c <= n; ++c) {
            auto m = conormal_linear(n, c);
            CHECK(total_multiplicity(m) == c);
            for (auto [deg, mult] : m) CHECK(mult > 0);
        }
    for (int d = 0; d <= 8; ++d) CHECK(total_multiplicity(conormal_fiber(d)) == d + 1);
    for (int a = 2; a <= 8; ++a)
        for (int b = 2; b <= 8; ++b)
            for (int c = 1; c <= std::min(a, b); ++c) {
                auto m = conormal_restricted(a, b, c);
                CHECK(total_multiplicity(m) == b);
                for (auto [deg, mult] : m) CHECK(mult > 0);
            }
}

TEST_CASE("fiber structure") {
    auto fs = fiber_structure(3, 2, 1);
    CHECK(fs.component_count == 2);
    CHECK(fs.w_ambient_dim == 2);
    CHECK(fs.w_center_codim == 1);
    CHECK(fs.f_fiber_dim == 1);
    CHECK(fs.f_base_dim == 1);
    CHECK(fs.w_description().find("P^2") != std::string::npos);
    CHECK(fs.f_description().find("P^1") != std::string::npos);
    CHECK(fiber_structure(3, 2, 2).component_count == 1);
    CHECK_THROWS_AS(fiber_structure(2, 2, 2), InputError);

    auto nef = minus_EF_nef_on_fiber(4, 3, 2);
    CHECK(nef.nef);
    CHECK(nef.twisted == DegreeMultiset{{1, 1}, {0, 2}});
}

TEST_CASE("-E-F is nef on every admissible fiber") {
    for (int a = 2; a <= 8; ++a)
        for (int b = 2; b <= 8; ++b)
            for (int c = 1; c <= std::min(a, b); ++c) {
                if (c == a) continue;
                auto r = minus_EF_nef_on_fiber(a, b, c);
                CHECK(r.nef);
                CHECK(total_multiplicity(r.twisted) == b);
            }
}

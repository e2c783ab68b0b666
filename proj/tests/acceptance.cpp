// Acceptance gate: one PASS/FAIL line per criterion.

#include "moricone/blowup.hpp"
#include "moricone/certificate_io.hpp"
#include "moricone/delpezzo.hpp"
#include "moricone/errors.hpp"
#include "moricone/scenario.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <tuple>
#include <functional>
#include <iostream>
#include <sstream>

using namespace moricone;

namespace {

struct Result {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

bool report(int n, const std::string& title, double limit_seconds, const std::function<Result()>& body) {
    const auto t0 = Clock::now();
    Result r;
    try {
        r = body();
    } catch (const std::exception& e) {
        r = {false, std::string("exception: ") + e.what()};
    }
    const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    bool pass = r.pass && dt <= limit_seconds;
    std::ostringstream os;
    os.precision(3);
    os << std::fixed << dt;
    std::cout << "CRITERION " << n << ": " << (pass ? "PASS" : "FAIL") << " [" << title << "] " << os.str() << " s";
    if (dt > limit_seconds) std::cout << " (over the " << limit_seconds << " s limit)";
    if (!r.detail.empty()) std::cout << "; " << r.detail;
    std::cout << std::endl;
    return pass;
}

std::vector<std::vector<int>> multisets(int a, int b) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int from) {
        if (!cur.empty()) out.push_back(cur);
        if (cur.size() == 3) return;
        for (int c = from; c <= std::min(a, b); ++c) {
            if (c == a) continue;
            cur.push_back(c);
            rec(c);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

Result relative_cones() {
    auto rc = blowup::relative_cones();
    auto expected = cone_from_rays(2, std::vector<ClassVector>{{-1, 0}, {-1, -1}});
    bool ok = rc.verified() && cones_equal(dual(rc.ne), expected).equal && cones_equal(dual(expected), rc.ne).equal;
    return {ok, ""};
}

Result contraction_grid() {
    std::size_t cases = 0;
    for (int a = 2; a <= 6; ++a)
        for (int b = 2; b <= 6; ++b)
            for (const auto& cs : multisets(a, b)) {
                blowup::ConstructionParams p;
                p.a = a;
                p.b = b;
                p.components = cs;
                p.a_subset_b = std::find(cs.begin(), cs.end(), b) != cs.end();
                auto r = blowup::classify(p);
                const int maxc = *std::max_element(cs.begin(), cs.end());
                const bool small = maxc < b;
                auto want = !small ? blowup::Modification::None
                            : a > b ? blowup::Modification::Flip
                            : a == b ? blowup::Modification::Flop
                                     : blowup::Modification::None;
                if (r.is_small != small || r.is_K_extremal != (a > b) || r.K_dot_e != b - a ||
                    r.birational_modification != want)
                    return {false, "mismatch at a=" + std::to_string(a) + " b=" + std::to_string(b)};
                ++cases;
            }
    return {true, std::to_string(cases) + " parameter sets"};
}

Result nef_theorem() {
    std::ostringstream os;
    bool ok = true;
    for (int r1 = 0; r1 <= 3; ++r1)
        for (int r2 = 0; r2 <= 6; ++r2) {
            auto v = scenario::verify_theorem(scenario::build_scenario(r1, r2));
            if (!v.verified()) {
                ok = false;
                os << "(" << r1 << "," << r2 << ") not verified; ";
            }
        }
    os << "r2<=6 equal in all 28 cells";
    Budget budget;
    budget.max_seconds = 15;
    int equal = 0, over = 0;
    for (int r1 = 0; r1 <= 3; ++r1)
        for (int r2 = 7; r2 <= 8; ++r2) {
            auto v = scenario::verify_theorem(scenario::build_scenario(r1, r2), budget);
            if (!v.containment || v.refuted()) {
                ok = false;
                os << "; (" << r1 << "," << r2 << ") containment failed";
            }
            if (v.equality == scenario::EqualityStatus::Equal) ++equal;
            if (v.equality == scenario::EqualityStatus::BudgetExceeded) ++over;
        }
    os << "; r2 in {7,8}: containment in all 8 cells, equality in " << equal << ", budget exceeded in " << over;
    return {ok, os.str()};
}

Result classification_grid() {
    auto grid = scenario::classify_all();
    for (int r1 = 0; r1 <= 3; ++r1)
        for (int r2 = 0; r2 <= 8; ++r2) {
            const auto& c = grid[r1][r2];
            bool ok = c.fano == (r1 == 0 && r2 == 0) && c.weak_fano == (r2 <= 1) && c.fano_type == c.weak_fano;
            if (!c.fano) ok = ok && c.not_fano_witness && c.not_fano_witness->value <= 0;
            if (!c.weak_fano)
                ok = ok && c.not_weak_fano_witness && c.not_weak_fano_witness->value < 0 && c.not_fano_type_certificate &&
                     !c.not_fano_type_certificate->feasible;
            if (!ok) return {false, "cell (" + std::to_string(r1) + "," + std::to_string(r2) + ")"};
        }
    return {true, "36 cells"};
}

Result delta_values() {
    const Rational third(1, 3), two_thirds(2, 3);
    for (int r1 = 0; r1 <= 3; ++r1)
        for (int r2 = 0; r2 <= 1; ++r2) {
            auto s = scenario::build_scenario(r1, r2);
            const ClassVector mk = scenario::anticanonical(s);
            const ClassVector mkd = mk - scenario::delta(s);
            auto v = [&](const std::string& name) { return dot(mkd, s.curve(name).vector); };
            bool ok = v("e") == two_thirds && v("f") == two_thirds;
            for (int j = 1; j <= std::min(r1, 3); ++j) {
                if (r1 == 1 && j > 1) break;
                const std::string lj = "l1," + std::to_string(j);
                ok = ok && v(lj) == third && dot(mk, s.curve(lj).vector) == 0 && v("e1," + std::to_string(j)) == 1;
            }
            if (r2 == 1) ok = ok && v("l2,1") == third && dot(mk, s.curve("l2,1").vector) == 0 && v("e2,1") == 1;
            if (!ok) return {false, "values differ at (" + std::to_string(r1) + "," + std::to_string(r2) + ")"};
        }
    return {true, "8 scenarios"};
}

Result refutation_lp() {
    for (int r2 = 2; r2 <= 8; ++r2) {
        auto r = scenario::not_fano_type_refutation(scenario::build_scenario(0, r2));
        if (r.verdict.feasible || !r.verdict.certificate_valid(r.system)) return {false, "system not refuted"};
        if (!r.relaxed_verdict.feasible || !r.relaxed_verdict.point_valid(r.relaxed)) return {false, "relaxation infeasible"};
    }
    return {true, "r2 = 2..8"};
}

Result minus_one_classes() {
    const std::size_t expected[] = {0, 1, 3, 6, 10, 16, 27, 56, 240};
    for (int r = 1; r <= 8; ++r) {
        delpezzo::Lattice x(r);
        auto classes = delpezzo::minus_one_classes(x);
        if (classes.size() != expected[r]) return {false, "count differs at r=" + std::to_string(r)};
        std::set<std::vector<long>> mine;
        for (const auto& c : classes) {
            if (x.intersect(c, c) != -1 || x.intersect(c, x.canonical()) != -1) return {false, "numerical condition"};
            std::vector<long> v;
            for (std::size_t i = 0; i < c.size(); ++i) v.push_back(c[i].get_num().get_si());
            mine.insert(v);
        }
        if (mine != oracle::brute_minus_one(r)) return {false, "enumerations disagree at r=" + std::to_string(r)};
        for (const auto& v : mine)
            for (std::size_t i = 1; i + 1 < v.size(); ++i) {
                auto w = v;
                std::swap(w[i], w[i + 1]);
                if (!mine.count(w)) return {false, "not closed under permutations"};
            }
    }
    return {true, "1, 3, 6, 10, 16, 27, 56, 240"};
}

Result shipped_certificates() {
    for (auto [n1, n2, d] : std::vector<std::tuple<int, int, int>>{{2, 2, 2}, {3, 2, 2}, {2, 3, 3}}) {
        const std::string stem = std::string(MORICONE_SOURCE_DIR) + "/certificates/example_" + std::to_string(n1) + "_" +
                                 std::to_string(n2) + "_" + std::to_string(d);
        auto he = nefcert::verify(nefcert::load_certificate(stem + "_he.json"));
        auto hef = nefcert::verify(nefcert::load_certificate(stem + "_hef.json"));
        bool curve_check = false;
        for (const auto& s : hef.steps)
            for (const auto& p : s.pairings) curve_check = curve_check || p == d * d - 1;
        if (!he.passed || !hef.passed || !curve_check) return {false, stem};
    }
    return {true, "6 files"};
}

Result t_cross_validation() {
    std::size_t checked = 0;
    for (int r1 = 0; r1 <= 3; ++r1)
        for (int r2 = 0; r2 <= 6; ++r2) {
            auto s = scenario::build_scenario(r1, r2);
            PolyCone dual_ne = dual(scenario::ne_generators(s));
            for (const auto& tc : scenario::t_certificates(s)) {
                bool a = contains(dual_ne, tc.he_divisor.coefficients).member;
                bool b = nefcert::verify_HE_hypotheses(tc.he).passed;
                bool c = contains(dual_ne, tc.hef_divisor.coefficients).member;
                bool d = nefcert::verify_HEF_hypotheses(tc.hef).passed;
                if (a != b || c != d) return {false, tc.hef_divisor.name};
                checked += 2;
            }
        }
    return {true, std::to_string(checked) + " divisors"};
}

Result property_suites() {
    std::mt19937 rng(2024);
    int cones = 0;
    for (std::size_t n = 2; n <= 6; ++n)
        for (int k = 0; k < 48; ++k) {
            auto gens = oracle::random_pointed_cone(rng, n, n + 1 + static_cast<std::size_t>(k % 5));
            PolyCone c = cone_from_rays(n, gens);
            PolyCone d = dual(c);
            // Re-run double description on the dual generators rather than the cache.
            PolyCone back = dual(cone_from_rays(n, d.rays()));
            if (d.rays() != oracle::brute_facets(gens, n)) return {false, "facets differ from brute force"};
            if (!(back == c)) return {false, "double dual differs"};
            ++cones;
        }
    for (int a = 2; a <= 8; ++a)
        for (int b = 2; b <= 8; ++b)
            for (int c = 1; c <= std::min(a, b); ++c) {
                if (blowup::total_multiplicity(blowup::conormal_restricted(a, b, c)) != b) return {false, "conormal total"};
                if (c == a) continue;
                if (!blowup::minus_EF_nef_on_fiber(a, b, c).nef) return {false, "fiber nefness"};
            }
    return {true, std::to_string(cones) + " random cones"};
}

}  // namespace

int main() {
    bool all = true;
    all &= report(1, "relative cones", 1, relative_cones);
    all &= report(2, "contraction grid", 1, contraction_grid);
    all &= report(3, "Nef = dual(NE)", 600, nef_theorem);
    all &= report(4, "classification grid", 5, classification_grid);
    all &= report(5, "Delta certificate", 1e9, delta_values);
    all &= report(6, "Fano type LP", 1, refutation_lp);
    all &= report(7, "(-1)-classes", 10, minus_one_classes);
    all &= report(8, "shipped certificates", 1, shipped_certificates);
    all &= report(9, "T cross-validation", 1e9, t_cross_validation);
    all &= report(10, "property suites", 30, property_suites);
    return all ? 0 : 1;
}

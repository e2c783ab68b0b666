#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "moricone/delpezzo.hpp"
#include "moricone/errors.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace moricone;
using namespace moricone::delpezzo;

namespace {

std::vector<long> as_longs(const ClassVector& v) {
    std::vector<long> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        REQUIRE(v[i].get_den() == 1);
        out.push_back(v[i].get_num().get_si());
    }
    return out;
}

}  // namespace

TEST_CASE("lattice basics") {
    Lattice x(3);
    CHECK(x.rank() == 4);
    CHECK(x.basis_names() == std::vector<std::string>{"H", "E1", "E2", "E3"});
    CHECK(x.intersect(x.hyperplane(), x.hyperplane()) == 1);
    CHECK(x.intersect(x.exceptional(2), x.exceptional(2)) == -1);
    CHECK(x.intersect(x.canonical(), x.canonical()) == 9 - 3);
    CHECK(x.canonical() == ClassVector{-3, 1, 1, 1});
    CHECK_THROWS_AS(Lattice(9), InputError);
    CHECK_THROWS_AS(Lattice(-1), InputError);
    CHECK_THROWS_AS(build(12), InputError);
}

TEST_CASE("curve vector turns the intersection form into a dot product") {
    Lattice x(4);
    const ClassVector a{2, 1, 0, 1, 1}, b{1, 0, 1, -1, 0};
    CHECK(dot(a, x.curve_vector(b)) == x.intersect(a, b));
    CHECK(dot(b, x.curve_vector(a)) == x.intersect(a, b));
}

TEST_CASE("(-1)-class counts") {
    const std::vector<std::size_t> expected{0, 1, 3, 6, 10, 16, 27, 56, 240};
    for (int r = 1; r <= 8; ++r) {
        CAPTURE(r);
        CHECK(minus_one_classes(Lattice(r)).size() == expected[static_cast<std::size_t>(r)]);
    }
}

TEST_CASE("(-1)-classes agree with an unpruned enumeration") {
    for (int r = 1; r <= 8; ++r) {
        CAPTURE(r);
        std::set<std::vector<long>> mine;
        for (const auto& c : minus_one_classes(Lattice(r))) mine.insert(as_longs(c));
        CHECK(mine == oracle::brute_minus_one(r));
    }
}

TEST_CASE("(-1)-classes satisfy the numerical conditions and are permutation closed") {
    for (int r = 1; r <= 8; ++r) {
        Lattice x(r);
        auto classes = minus_one_classes(x);
        std::set<std::vector<long>> all;
        for (const auto& c : classes) all.insert(as_longs(c));
        for (const auto& c : classes) {
            CHECK(x.intersect(c, c) == -1);
            CHECK(x.intersect(c, x.canonical()) == -1);
            auto v = as_longs(c);
            std::vector<long> tail(v.begin() + 1, v.end());
            std::sort(tail.begin(), tail.end());
            do {
                std::vector<long> w{v[0]};
                w.insert(w.end(), tail.begin(), tail.end());
                CHECK(all.count(w) == 1);
            } while (std::next_permutation(tail.begin(), tail.end()) && r <= 5);
        }
    }
}

TEST_CASE("-K is ample and nef cone is dual to NE") {
    for (int r = 0; r <= 6; ++r) {
        CAPTURE(r);
        Lattice x(r);
        ClassVector mk = -1 * x.canonical();
        CHECK(is_ample(x, mk));
        CHECK(is_nef(x, x.hyperplane()));
        if (r >= 1) CHECK_FALSE(is_nef(x, x.exceptional(1)));
        PolyCone nef = nef_cone(x);
        for (const auto& ray : nef.rays()) CHECK(is_nef(x, ray));
        PolyCone ne = cone_from_rays(x.rank(), ne_curve_vectors(x));
        CHECK(cones_equal(dual(nef), ne).equal);
    }
}

TEST_CASE("small cases of NE") {
    CHECK(ne_generators(Lattice(0)) == std::vector<ClassVector>{ClassVector{1}});
    auto g1 = ne_generators(Lattice(1));
    CHECK(g1.size() == 2);
    CHECK(std::find(g1.begin(), g1.end(), ClassVector{0, 1}) != g1.end());
    CHECK(std::find(g1.begin(), g1.end(), ClassVector{1, -1}) != g1.end());
    CHECK(nef_cone(Lattice(2)).rays().size() == 3);
}

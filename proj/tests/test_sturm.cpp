#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "trace_atlas/sturm.hpp"

using namespace trace_atlas;

namespace {

IntPoly poly(std::initializer_list<long> cs) {
    std::vector<mpz_class> c;
    for (long v : cs) c.emplace_back(v);
    return IntPoly{std::move(c)};
}

// product of (x - r_i) over integer roots
IntPoly from_roots(const std::vector<long>& roots) {
    IntPoly f = IntPoly::constant(1);
    for (long r : roots) f = f * poly({-r, 1});
    return f;
}

}  // namespace

TEST_CASE("count_roots_in examples") {
    CHECK(count_roots_in(poly({1, -3, 1}), Bound::at(0), Bound::pos_inf()) == 2);
    CHECK(count_roots_in(poly({1, 0, 1}), Bound::neg_inf(), Bound::pos_inf()) == 0);
    CHECK(count_roots_in(poly({-2, 0, 1}), Bound::at(0), Bound::pos_inf()) == 1);
    CHECK(count_roots_in(poly({-2, 0, 1}), Bound::neg_inf(), Bound::pos_inf()) == 2);
}

TEST_CASE("half-open interval convention counts the right endpoint") {
    // roots 1 and 2
    const IntPoly f = from_roots({1, 2});
    CHECK(count_roots_in(f, Bound::at(0), Bound::at(1)) == 1);
    CHECK(count_roots_in(f, Bound::at(1), Bound::at(2)) == 1);
    CHECK(count_roots_in(f, Bound::at(2), Bound::pos_inf()) == 0);
}

TEST_CASE("repeated roots raise NonSquarefree") {
    const IntPoly f = from_roots({3, 3});
    CHECK_THROWS_AS(count_roots_in(f, Bound::neg_inf(), Bound::pos_inf()), NonSquarefree);
}

TEST_CASE("random products of distinct linear factors") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> deg(1, 10);
    std::uniform_int_distribution<long> root(-50, 50);
    for (int it = 0; it < 60; ++it) {
        const int d = deg(rng);
        std::vector<long> roots;
        while (static_cast<int>(roots.size()) < d) {
            const long r = root(rng);
            if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        }
        const IntPoly f = from_roots(roots);
        const int expect_pos = static_cast<int>(std::count_if(roots.begin(), roots.end(), [](long r) { return r > 0; }));
        CHECK(count_roots_in(f, Bound::at(0), Bound::pos_inf()) == expect_pos);
        CHECK(count_roots_in(f, Bound::neg_inf(), Bound::pos_inf()) == d);
    }
}

TEST_CASE("is_totally_positive") {
    CHECK(is_totally_positive(poly({1, -3, 1})));
    CHECK_FALSE(is_totally_positive(poly({-2, 0, 1})));
    CHECK(is_totally_positive(poly({-1, 1})));
    // non-monic
    CHECK_FALSE(is_totally_positive(poly({-1, 2})));
    // repeated root absorbed as false with diagnostic
    const auto rep = check_totally_positive(from_roots({2, 2}));
    CHECK_FALSE(rep.totally_positive);
    CHECK_FALSE(rep.squarefree);
    CHECK(rep.monic);
}

TEST_CASE("root isolation and refinement") {
    const IntPoly f = poly({1, -3, 1});  // roots (3 +- sqrt5)/2
    auto ivs = isolate_real_roots(f, Bound::at(0), Bound::pos_inf());
    REQUIRE(ivs.size() == 2);
    const double r0 = refine_root(f, ivs[0].first, ivs[0].second, 1e-15);
    const double r1 = refine_root(f, ivs[1].first, ivs[1].second, 1e-15);
    CHECK(r0 == doctest::Approx((3 - std::sqrt(5.0)) / 2).epsilon(1e-13));
    CHECK(r1 == doctest::Approx((3 + std::sqrt(5.0)) / 2).epsilon(1e-13));
}

TEST_CASE("refinement handles exact rational roots") {
    const IntPoly f = from_roots({1, 4});
    auto ivs = isolate_real_roots(f, Bound::at(0), Bound::pos_inf());
    REQUIRE(ivs.size() == 2);
    CHECK(refine_root(f, ivs[0].first, ivs[0].second, 1e-15) == doctest::Approx(1.0));
    CHECK(refine_root(f, ivs[1].first, ivs[1].second, 1e-15) == doctest::Approx(4.0));
}

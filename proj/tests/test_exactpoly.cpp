#include <random>

#include "doctest.h"
#include "trace_atlas/intpoly.hpp"

using namespace trace_atlas;

namespace {

// Pascal-triangle oracle, independent of the multiplicative route in binomial().
mpz_class pascal(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::vector<mpz_class> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<mpz_class> next(static_cast<std::size_t>(i) + 1, mpz_class(0));
        for (int j = 0; j < i; ++j) {
            next[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j)];
            next[static_cast<std::size_t>(j) + 1] += row[static_cast<std::size_t>(j)];
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

IntPoly random_poly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg_dist(0, max_deg);
    std::uniform_int_distribution<int> digit(0, 9);
    std::uniform_int_distribution<int> len(1, 21);  // up to ~10^20
    const int d = deg_dist(rng);
    std::vector<mpz_class> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) {
        std::string s;
        const int l = len(rng);
        for (int i = 0; i < l; ++i) s += static_cast<char>('0' + digit(rng));
        x = mpz_class(s, 10);
        if (digit(rng) % 2) x = -x;
    }
    if (c.back() == 0) c.back() = 1;
    return IntPoly{std::move(c)};
}

IntPoly poly(std::initializer_list<long> cs) {
    std::vector<mpz_class> c;
    for (long v : cs) c.emplace_back(v);
    return IntPoly{std::move(c)};
}

}  // namespace

TEST_CASE("binomial basics and vanishing convention") {
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, 4) == 1);
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(7, -1) == 0);
    CHECK(binomial(7, 8) == 0);
}

TEST_CASE("binomial matches Pascal triangle") {
    for (int n = 0; n <= 40; ++n)
        for (int k = 0; k <= n; ++k) CHECK(binomial(static_cast<unsigned long>(n), k) == pascal(n, k));
}

TEST_CASE("chebyshev_U_half small cases") {
    CHECK(chebyshev_U_half(0) == IntPoly::constant(1));
    CHECK(chebyshev_U_half(1) == IntPoly::x());
    CHECK(chebyshev_U_half(3) == poly({0, -2, 0, 1}));
}

TEST_CASE("chebyshev_U_half summation equals recurrence up to m = 200") {
    for (unsigned m = 0; m <= 200; ++m) CHECK(chebyshev_U_half(m) == chebyshev_U_half_recurrence(m));
}

TEST_CASE("compose_shift examples") {
    CHECK(compose_shift(poly({0, 0, 1}), -2) == poly({4, -4, 1}));
    CHECK(compose_shift(poly({-1, 1}), 1) == IntPoly::x());
    CHECK(compose_shift(poly({0, -2, 0, 1}), -2) == poly({-4, 10, -6, 1}));
}

TEST_CASE("compose_shift round trips on random polynomials") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> shift(-100, 100);
    for (int it = 0; it < 50; ++it) {
        const IntPoly f = random_poly(rng, 50);
        const mpz_class s = shift(rng);
        CHECK(compose_shift(compose_shift(f, s), -s) == f);
    }
}

TEST_CASE("parse and serialize") {
    CHECK(parse_poly("1 -3 1") == poly({1, -3, 1}));
    CHECK(parse_poly("0 1") == IntPoly::x());
    CHECK(serialize_poly(poly({-1, 6, -5, 1})) == "-1 6 -5 1");
    CHECK_THROWS_AS(parse_poly("1 2x 3"), ParseError);
    CHECK_THROWS_AS(parse_poly("   "), ParseError);
    try {
        parse_poly("12 ab");
    } catch (const ParseError& e) {
        CHECK(e.offset == 3);
    }
}

TEST_CASE("parse/serialize round trip on random polynomials") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 100; ++it) {
        const IntPoly f = random_poly(rng, 30);
        CHECK(parse_poly(serialize_poly(f)) == f);
    }
}

TEST_CASE("viete accessor sign convention") {
    // x^2 - 3x + 1: a_1 = 3, a_0 = 1
    const IntPoly f = poly({1, -3, 1});
    CHECK(f.viete_a(1) == 3);
    CHECK(f.viete_a(0) == 1);
    CHECK(f.viete_positive());
    const IntPoly g = poly({-2, 0, 1});  // x^2 - 2
    CHECK_FALSE(g.viete_positive());
}

TEST_CASE("log_mpz accuracy") {
    mpz_class big = 1;
    for (int i = 1; i <= 200; ++i) big *= i;  // 200!
    double expect = 0;
    for (int i = 1; i <= 200; ++i) expect += std::log(static_cast<double>(i));
    CHECK(log_mpz(big) == doctest::Approx(expect).epsilon(1e-13));
    CHECK(log_mpz(mpz_class(1)) == doctest::Approx(0.0));
}

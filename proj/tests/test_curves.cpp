#include <cmath>

#include <mpfr.h>

#include "doctest.h"
#include "trace_atlas/curves.hpp"

using namespace trace_atlas;

namespace {

constexpr mpfr_prec_t kOraclePrec = 256;

// exp(sum of c_i * ln(x_i)) at 256 bits; the slow independent route for curve values
double oracle_exp_log_combo(const std::vector<std::pair<double, double>>& terms, double divisor) {
    mpfr_t acc, t, l;
    mpfr_inits2(kOraclePrec, acc, t, l, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(acc, 1);
    for (const auto& [coef, x] : terms) {
        mpfr_set_d(l, x, MPFR_RNDN);
        mpfr_log(l, l, MPFR_RNDN);
        mpfr_mul_d(l, l, coef, MPFR_RNDN);
        mpfr_add(acc, acc, l, MPFR_RNDN);
    }
    mpfr_div_d(acc, acc, divisor, MPFR_RNDN);
    mpfr_exp(acc, acc, MPFR_RNDN);
    const double r = mpfr_get_d(acc, MPFR_RNDN);
    mpfr_clears(acc, t, l, static_cast<mpfr_ptr>(nullptr));
    return r;
}

}  // namespace

TEST_CASE("entropy_h conventions and domain") {
    CHECK(entropy_h(1, 1) == doctest::Approx(0.0));
    CHECK(entropy_h(1, 0) == doctest::Approx(0.0));
    CHECK(entropy_h(2, 1) == doctest::Approx(2 * std::log(2.0)));
    CHECK_THROWS_AS(entropy_h(1, -0.1), DomainError);
    CHECK_THROWS_AS(entropy_h(1, 1.1), DomainError);
    CHECK_THROWS_AS(entropy_h(0, 0), DomainError);
}

TEST_CASE("limit curve L endpoints") {
    CHECK(limit_curve_L(1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(limit_curve_L(0) == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("L(1/2) against the high-precision oracle") {
    // exp(2 (h(3/2,1) - h(1,1/2))) = exp((3 ln(3/2) - (-ln 2 / 2 - ln 2 / 2) ... )
    // spelled out as a log-linear combination:
    // h(3/2, 1) = (3/2)ln(3/2) - 0 - (1/2)ln(1/2); h(1, 1/2) = -(1/2)ln(1/2) - (1/2)ln(1/2)
    const double expect = oracle_exp_log_combo(
        {{1.5, 1.5}, {-0.5, 0.5}, {0.5, 0.5}, {0.5, 0.5}}, 0.5);
    CHECK(limit_curve_L(0.5) == doctest::Approx(expect).epsilon(1e-13));
}

TEST_CASE("theta solution") {
    const auto& sol = solve_theta();
    CHECK(sol.theta == doctest::Approx(0.3144808).epsilon(1e-6));
    CHECK(sol.theta > 0.31);
    CHECK(sol.theta < 0.32);
    CHECK(std::fabs(sol.residual) <= 1e-12);
    CHECK(theta_equation(1.0) == doctest::Approx(4 * std::log(2.0) - 2));
    CHECK(theta_equation(1.0) > 0);
    CHECK(theta_equation(0.1) < 0);
}

TEST_CASE("theta equation is strictly increasing on [0.1, 10]") {
    double prev = theta_equation(0.1);
    for (int i = 1; i < 1000; ++i) {
        const double v = 0.1 + (10.0 - 0.1) * i / 999;
        const double g = theta_equation(v);
        CHECK(g > prev);
        prev = g;
    }
}

TEST_CASE("K_v basics") {
    for (double v : {0.2, 0.5, 1.0, 3.0}) CHECK(K_v(0.0, v) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK_THROWS_AS(K_v(0.5, 0.0), DomainError);
    CHECK_THROWS_AS(K_v(0.5, -1.0), DomainError);
    CHECK_THROWS_AS(K_v(1.0, 1.0), DomainError);
}

TEST_CASE("K_1(1/2) against the high-precision oracle") {
    // exponent = ((1/2) 2 ln 2 + (1/2) 1 ln 1 - (3/2) ln(3/2)) / (1/2)
    const double expect = oracle_exp_log_combo({{1.0, 2.0}, {-1.5, 1.5}}, 0.5);
    CHECK(K_v(0.5, 1.0) == doctest::Approx(expect).epsilon(1e-13));
}

TEST_CASE("ell endpoints and reparametrization") {
    CHECK(lower_curve_ell(1) == doctest::Approx(1.0).epsilon(1e-12));
    const double e0 = lower_curve_ell(0);
    CHECK(e0 == doctest::Approx(1.7336).epsilon(5e-4));
    CHECK(e0 > std::exp(11.0 / 20.0));
    const double theta = solve_theta().theta;
    for (int i = 1; i <= 9; ++i) {
        const double c = i / 10.0;
        CHECK(lower_curve_ell(c) == doctest::Approx(K_v(1 - c, theta)).epsilon(1e-12));
    }
}

TEST_CASE("curve ordering and monotonicity on a fine grid") {
    double prev_L = HUGE_VAL, prev_e = HUGE_VAL;
    for (int i = 0; i <= 10000; ++i) {
        const double c = i / 10000.0;
        const double L = limit_curve_L(c);
        const double e = lower_curve_ell(c);
        CHECK(L >= e);
        CHECK(e >= 1.0 - 1e-12);
        CHECK(L <= prev_L + 1e-10);
        CHECK(e <= prev_e + 1e-10);
        prev_L = L;
        prev_e = e;
    }
}

TEST_CASE("area_between basics") {
    const CurveFn one = [](double) { return 1.0; };
    CHECK(area_between(one, one, 0, 1, 1e-8) == doctest::Approx(0.0));
    // integral of x^2 over [0,1]
    const CurveFn sq = [](double x) { return x * x; };
    const CurveFn zero = [](double) { return 0.0; };
    CHECK(area_between(sq, zero, 0, 1, 1e-10) == doctest::Approx(1.0 / 3).epsilon(1e-9));
    CHECK_THROWS_AS(area_between(zero, one, 0, 1, 1e-8), OrderingViolation);
}

TEST_CASE("quadrature self-consistency under tolerance halving") {
    const CurveFn one = [](double) { return 1.0; };
    for (double tol : {1e-5, 1e-6, 1e-7}) {
        const double a = area_between(limit_curve_L, one, 0, 1, tol);
        const double b = area_between(limit_curve_L, one, 0, 1, tol / 2);
        CHECK(std::fabs(a - b) < tol);
    }
}

TEST_CASE("paper area values") {
    const CurveFn one = [](double) { return 1.0; };
    CHECK(area_between(limit_curve_L, one, 0, 1, 1e-7) == doctest::Approx(0.63917).epsilon(8e-5));
    CHECK(area_between(lower_curve_ell, one, 0, 1, 1e-7) == doctest::Approx(0.38323).epsilon(2e-4));
    CHECK(coverage_ratio() == doctest::Approx(0.5995).epsilon(9e-4));
}

TEST_CASE("sample_curve") {
    CHECK_THROWS_AS(sample_curve("L", 1), DomainError);
    const auto tab = sample_curve("L", 2);
    REQUIRE(tab.samples.size() == 2);
    CHECK(tab.samples[0].first == doctest::Approx(0.0));
    CHECK(tab.samples[0].second == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(tab.samples[1].second == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS(sample_curve("bogus", 10), DomainError);
}

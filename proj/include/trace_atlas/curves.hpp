#ifndef TRACE_ATLAS_CURVES_HPP
#define TRACE_ATLAS_CURVES_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trace_atlas {

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct BracketFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OrderingViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// h(a,b) = a ln a - b ln b - (a-b) ln(a-b), with 0 ln 0 := 0.
/// Requires 0 <= b <= a, a > 0.
double entropy_h(double a, double b);

/// Conjectured limit curve L(c) = exp((h(2-c,2-2c) - h(1,c))/c) on [0,1];
/// L(0) is the cached continuity limit.
double limit_curve_L(double c);

/// g(v) = (1+v)^2 ln(1+1/v) + ln v - v - 1, whose positive root is theta.
double theta_equation(double v);

struct ThetaSolution {
    double theta;
    double residual;
    double bracket_lo;
    double bracket_hi;
};

/// Solved once (bisection bracket on [0.1, 1] plus safeguarded Newton) and cached.
const ThetaSolution& solve_theta();

/// K_v(c) = exp((c(v+1)ln(v+1) + (1-c)v ln v - (c+v)ln(v+c))/(1-c)), c in [0,1), v > 0.
double K_v(double c, double v);

/// Proven lower-bound curve: ell(c) = K_theta(1-c); ell(0) by continuity.
double lower_curve_ell(double c);

using CurveFn = std::function<double(double)>;

/// Adaptive-Simpson integral of (upper - lower) over [lo, hi] with absolute
/// tolerance tol.  Throws OrderingViolation if lower exceeds upper by more
/// than 1e-9 at an evaluated node.
double area_between(const CurveFn& upper, const CurveFn& lower, double lo, double hi, double tol);

/// area(ell vs 1) / area(L vs 1) on [0,1].
double coverage_ratio(double tol = 1e-7);

struct CurveTable {
    std::string kind;  // "L", "ell", "K_v", "constant"
    double v = 0.0;
    std::vector<std::pair<double, double>> samples;
};

CurveTable sample_curve(const std::string& kind, int grid, double v = 0.0);

}  // namespace trace_atlas

#endif

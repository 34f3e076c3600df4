#include "trace_atlas/curves.hpp"

#include <cmath>

namespace trace_atlas {

namespace {

long double xlogx(long double x) { return x > 0 ? x * std::log(x) : 0.0L; }

long double h_impl(long double a, long double b) { return xlogx(a) - xlogx(b) - xlogx(a - b); }

long double log_L_exponent(long double c) {
    return (h_impl(2 - c, 2 - 2 * c) - h_impl(1, c)) / c;
}

// Limit of fn(c) as c -> 0+ by Richardson extrapolation on c = 2^-k, k = 10..30.
double richardson_limit(const std::function<long double(long double)>& fn) {
    constexpr int k_lo = 10, k_hi = 30;
    constexpr int m = k_hi - k_lo + 1;
    long double t[m][m];
    for (int i = 0; i < m; ++i) t[i][0] = fn(std::ldexp(1.0L, -(k_lo + i)));
    for (int j = 1; j < m; ++j) {
        const long double w = std::ldexp(1.0L, j) - 1.0L;
        for (int i = j; i < m; ++i) t[i][j] = t[i][j - 1] + (t[i][j - 1] - t[i - 1][j - 1]) / w;
    }
    // stop where the diagonal settles; rounding noise eventually dominates
    long double best = t[0][0];
    long double best_diff = HUGE_VALL;
    for (int i = 1; i < m; ++i) {
        const long double diff = std::fabs(t[i][i] - t[i - 1][i - 1]);
        if (diff < best_diff) {
            best_diff = diff;
            best = t[i][i];
        }
    }
    return static_cast<double>(best);
}

}  // namespace

double entropy_h(double a, double b) {
    if (!(a > 0) || b < 0 || b > a) throw DomainError("entropy_h: need 0 <= b <= a, a > 0");
    return static_cast<double>(h_impl(a, b));
}

double limit_curve_L(double c) {
    if (c < 0 || c > 1) throw DomainError("limit_curve_L: c must be in [0,1]");
    if (c == 0) {
        static const double l0 =
            richardson_limit([](long double t) { return static_cast<long double>(std::exp(log_L_exponent(t))); });
        return l0;
    }
    return std::exp(static_cast<double>(log_L_exponent(c)));
}

double theta_equation(double v) {
    const long double lv = v;
    return static_cast<double>((1 + lv) * (1 + lv) * std::log(1 + 1 / lv) + std::log(lv) - lv - 1);
}

const ThetaSolution& solve_theta() {
    static const ThetaSolution sol = [] {
        double lo = 0.1, hi = 1.0;
        double flo = theta_equation(lo), fhi = theta_equation(hi);
        if (!(flo < 0 && fhi > 0))
            throw BracketFailure("solve_theta: sign condition on [0.1, 1] failed");
        for (int i = 0; i < 50; ++i) {
            const double mid = 0.5 * (lo + hi);
            if (theta_equation(mid) < 0)
                lo = mid;
            else
                hi = mid;
        }
        // g'(v) = 2(1+v) ln(1+1/v) - 2
        double t = 0.5 * (lo + hi);
        for (int i = 0; i < 8; ++i) {
            const double g = theta_equation(t);
            const double gp = 2 * (1 + t) * std::log(1 + 1 / t) - 2;
            const double step = g / gp;
            double next = t - step;
            if (next <= lo || next >= hi) next = 0.5 * (lo + hi);
            t = next;
            if (theta_equation(t) < 0)
                lo = t;
            else
                hi = t;
        }
        return ThetaSolution{t, theta_equation(t), 0.1, 1.0};
    }();
    return sol;
}

namespace {

long double log_K_exponent(long double c, long double v) {
    return (c * (v + 1) * std::log(v + 1) + (1 - c) * v * std::log(v) - (c + v) * std::log(v + c)) / (1 - c);
}

long double log_ell_exponent(long double c, long double v) {
    return ((1 - c) * (v + 1) * std::log(v + 1) + c * v * std::log(v) + (c - 1 - v) * std::log(v + 1 - c)) / c;
}

}  // namespace

double K_v(double c, double v) {
    if (!(v > 0)) throw DomainError("K_v: v must be positive");
    if (c < 0 || c >= 1) throw DomainError("K_v: c must be in [0,1)");
    return std::exp(static_cast<double>(log_K_exponent(c, v)));
}

double lower_curve_ell(double c) {
    if (c < 0 || c > 1) throw DomainError("lower_curve_ell: c must be in [0,1]");
    const double v = solve_theta().theta;
    if (c == 0) {
        static const double e0 = richardson_limit([](long double t) {
            const long double th = solve_theta().theta;
            return static_cast<long double>(std::exp(log_ell_exponent(t, th)));
        });
        return e0;
    }
    return std::exp(static_cast<double>(log_ell_exponent(c, v)));
}

namespace {

struct Quad {
    const CurveFn& upper;
    const CurveFn& lower;

    double gap(double x) const {
        const double u = upper(x), l = lower(x);
        if (u < l - 1e-9) throw OrderingViolation("area_between: lower curve exceeds upper at c=" + std::to_string(x));
        return u - l;
    }

    double simpson(double a, double fa, double b, double fb, double fm) const {
        return (b - a) / 6.0 * (fa + 4 * fm + fb);
    }

    double recurse(double a, double fa, double b, double fb, double fm, double whole, double tol, int depth) const {
        const double m = 0.5 * (a + b);
        const double fl = gap(0.5 * (a + m));
        const double fr = gap(0.5 * (m + b));
        const double left = simpson(a, fa, m, fm, fl);
        const double right = simpson(m, fm, b, fb, fr);
        const double delta = left + right - whole;
        if (depth >= 40 || std::fabs(delta) <= 15 * tol) return left + right + delta / 15.0;
        return recurse(a, fa, m, fm, fl, left, tol / 2, depth + 1) +
               recurse(m, fm, b, fb, fr, right, tol / 2, depth + 1);
    }
};

}  // namespace

double area_between(const CurveFn& upper, const CurveFn& lower, double lo, double hi, double tol) {
    if (!(tol > 0)) throw DomainError("area_between: tol must be positive");
    Quad q{upper, lower};
    const double fa = q.gap(lo), fb = q.gap(hi), fm = q.gap(0.5 * (lo + hi));
    const double whole = q.simpson(lo, fa, hi, fb, fm);
    return q.recurse(lo, fa, hi, fb, fm, whole, tol, 0);
}

double coverage_ratio(double tol) {
    const CurveFn one = [](double) { return 1.0; };
    const double a_l = area_between(limit_curve_L, one, 0.0, 1.0, tol);
    const double a_e = area_between(lower_curve_ell, one, 0.0, 1.0, tol);
    return a_e / a_l;
}

CurveTable sample_curve(const std::string& kind, int grid, double v) {
    if (grid < 2) throw DomainError("sample_curve: grid must be >= 2");
    CurveTable tab;
    tab.kind = kind;
    tab.v = v;
    tab.samples.reserve(static_cast<std::size_t>(grid));
    for (int i = 0; i < grid; ++i) {
        const double c = static_cast<double>(i) / (grid - 1);
        double y;
        if (kind == "L") {
            y = limit_curve_L(c);
        } else if (kind == "ell") {
            y = lower_curve_ell(c);
        } else if (kind == "K_v") {
            y = c < 1.0 ? K_v(c, v) : richardson_limit([v](long double t) {
                return static_cast<long double>(std::exp(log_K_exponent(1 - t, v)));
            });
        } else if (kind == "constant") {
            y = v;
        } else {
            throw DomainError("sample_curve: unknown kind " + kind);
        }
        tab.samples.emplace_back(c, y);
    }
    return tab;
}

}  // namespace trace_atlas

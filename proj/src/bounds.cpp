#include "trace_atlas/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace trace_atlas {

double log_P(double t, int n) {
    if (!(t > 0)) throw DegenerateInput("log_P: t must be positive");
    if (n < 2) throw DegenerateInput("log_P: n must be >= 2");
    long double s = -std::lgamma(static_cast<long double>(n) + 1);
    for (int j = 0; j <= n - 2; ++j)
        s += (n - j - 1) * (std::log(static_cast<long double>(t) + j) - std::log(static_cast<long double>(n - j)));
    return static_cast<double>(s);
}

double log_P_deriv(double t, int n) {
    long double s = 0;
    for (int j = 0; j <= n - 2; ++j) s += static_cast<long double>(n - j - 1) / (static_cast<long double>(t) + j);
    return static_cast<double>(s);
}

double log_Q(int k, double t, int n) {
    if (!(t > 0)) throw DegenerateInput("log_Q: t must be positive");
    if (k < 0 || k > n - 1) throw DegenerateInput("log_Q: k out of range");
    long double s = 0;
    for (int j = k; j <= n - 1; ++j) s += k * std::log(static_cast<long double>(t) + j);
    for (int j = 0; j <= k - 1; ++j) s -= (n - k) * std::log(static_cast<long double>(t) + j);
    return static_cast<double>(s);
}

double solve_mu0_log(int n, double target_log) {
    double lo = 1.0, hi = 1.0;
    while (log_P(lo, n) > target_log) lo /= 2;
    while (log_P(hi, n) < target_log) hi *= 2;
    for (int i = 0; i < 100 && hi - lo > 1e-15 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (log_P(mid, n) < target_log)
            lo = mid;
        else
            hi = mid;
    }
    double t = 0.5 * (lo + hi);
    const double tol = 1e-12 * std::max(1.0, std::fabs(target_log));
    for (int i = 0; i < 6; ++i) {
        const double r = log_P(t, n) - target_log;
        if (std::fabs(r) <= tol) break;
        double next = t - r / log_P_deriv(t, n);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        t = next;
    }
    return t;
}

double solve_mu0(int n, double a0, double delta) {
    if (!(a0 > 0) || !(delta > 0)) throw DegenerateInput("solve_mu0: a0 and delta must be positive");
    return solve_mu0_log(n, (n - 1) * std::log(a0) - std::log(delta));
}

double log_binomial(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

TupleInstance TupleInstance::from_roots(std::span<const double> xs) {
    const int n = static_cast<int>(xs.size());
    if (n < 2) throw DegenerateInput("need at least two values");
    double mx = 0;
    for (double x : xs) {
        if (!(x > 0)) throw DegenerateInput("all values must be positive");
        mx = std::max(mx, x);
    }
    double min_gap = HUGE_VAL;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) min_gap = std::min(min_gap, std::fabs(xs[i] - xs[j]));
    if (min_gap < 1e-12 * mx) throw DegenerateInput("values not sufficiently distinct");

    // e[j] = j-th elementary symmetric value
    std::vector<long double> e(static_cast<std::size_t>(n) + 1, 0.0L);
    e[0] = 1.0L;
    for (int i = 0; i < n; ++i)
        for (int j = std::min(i + 1, n); j >= 1; --j) e[static_cast<std::size_t>(j)] += xs[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(j - 1)];

    TupleInstance inst;
    inst.xs.assign(xs.begin(), xs.end());
    inst.n = n;
    inst.log_a.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) inst.log_a[static_cast<std::size_t>(k)] = static_cast<double>(std::log(e[static_cast<std::size_t>(n - k)]));
    inst.log_delta = log_discriminant_from_roots(xs);
    return inst;
}

bool Theorem2Report::all_nonnegative(double slack) const {
    return std::all_of(rows.begin(), rows.end(), [slack](const Theorem2Row& r) { return r.margin >= -slack; });
}

Theorem2Report verify_theorem2(std::span<const double> xs) {
    const TupleInstance inst = TupleInstance::from_roots(xs);
    const int n = inst.n;
    const double mu0 = solve_mu0_log(n, (n - 1) * inst.log_a[0] - inst.log_delta);
    Theorem2Report rep{n, mu0, {}};
    rep.rows.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double lhs = n * (inst.log_a[static_cast<std::size_t>(k)] - log_binomial(n, k));
        const double rhs = log_Q(k, mu0, n) + (n - k) * inst.log_a[0];
        rep.rows.push_back(Theorem2Row{k, lhs, rhs, lhs - rhs});
    }
    return rep;
}

std::vector<Theorem2Row> improved_newton_check(std::span<const double> xs) {
    const TupleInstance inst = TupleInstance::from_roots(xs);
    const int n = inst.n;
    const double mu0 = solve_mu0_log(n, (n - 1) * inst.log_a[0] - inst.log_delta);
    // log S_k, k = 0..n, with S_0 = 1 and S_k = a_{n-k}/C(n,k)
    std::vector<double> log_S(static_cast<std::size_t>(n) + 1, 0.0);
    for (int k = 1; k <= n; ++k)
        log_S[static_cast<std::size_t>(k)] = inst.log_a[static_cast<std::size_t>(n - k)] - log_binomial(n, k);
    std::vector<Theorem2Row> rows;
    rows.reserve(static_cast<std::size_t>(n - 1));
    for (int k = 1; k <= n - 1; ++k) {
        const double lhs = 2 * log_S[static_cast<std::size_t>(k)];
        const double rhs = log_S[static_cast<std::size_t>(k - 1)] + log_S[static_cast<std::size_t>(k + 1)] +
                           std::log1p(1.0 / (mu0 + k - 1));
        rows.push_back(Theorem2Row{k, lhs, rhs, lhs - rhs});
    }
    return rows;
}

double lemma5_log_deriv(int n, int k, double t) {
    long double s = 0;
    for (int j = k; j <= n - 1; ++j) s += static_cast<long double>(k) * (n - 1) / (static_cast<long double>(t) + j);
    for (int j = 0; j <= k - 1; ++j) s -= static_cast<long double>(n - 1) * (n - k) / (static_cast<long double>(t) + j);
    for (int j = 0; j <= n - 2; ++j) s += static_cast<long double>(n - k) * (n - j - 1) / (static_cast<long double>(t) + j);
    return static_cast<double>(s);
}

bool lemma5_monotonicity_check(int n, int k, std::span<const double> grid) {
    double prev = -HUGE_VAL;
    for (double t : grid) {
        if (lemma5_log_deriv(n, k, t) <= 0) return false;
        const double val = (n - 1) * log_Q(k, t, n) + (n - k) * log_P(t, n);
        if (val <= prev) return false;
        prev = val;
    }
    return true;
}

AsymptoticResult asymptotic_log_Q(double c, double v, int n) {
    if (!(c > 0 && c < 1) || !(v > 0) || n < 10) throw DegenerateInput("asymptotic_log_Q: bad arguments");
    const int k = static_cast<int>(std::floor(c * n));
    const double exact = log_Q(k, v * n, n);
    const long double lc = c, lv = v;
    const long double a =
        lc * (1 + lv) * std::log(1 + lv) - lc * lv * std::log(lv) + lv * std::log(lv) - (lc + lv) * std::log(lc + lv);
    const double asym = static_cast<double>(a * n * n);
    return AsymptoticResult{exact, asym, std::fabs(exact - asym) / (static_cast<double>(n) * n)};
}

double log_discriminant_from_roots(std::span<const double> xs) {
    const int n = static_cast<int>(xs.size());
    long double s = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const long double d = std::fabs(static_cast<long double>(xs[static_cast<std::size_t>(i)]) - xs[static_cast<std::size_t>(j)]);
            if (d == 0) return -HUGE_VAL;
            s += 2 * std::log(d);
        }
    return static_cast<double>(s);
}

double discriminant_from_roots(std::span<const double> xs) {
    const int n = static_cast<int>(xs.size());
    long double p = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const long double d = static_cast<long double>(xs[static_cast<std::size_t>(i)]) - xs[static_cast<std::size_t>(j)];
            p *= d * d;
        }
    return static_cast<double>(p);
}

}  // namespace trace_atlas

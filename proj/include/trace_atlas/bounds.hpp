#ifndef TRACE_ATLAS_BOUNDS_HPP
#define TRACE_ATLAS_BOUNDS_HPP

#include <span>
#include <stdexcept>
#include <vector>

namespace trace_atlas {

struct DegenerateInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// log P(t) with P(t) = (1/n!) prod_{j=0}^{n-2} ((t+j)/(n-j))^{n-j-1}.
double log_P(double t, int n);
double log_P_deriv(double t, int n);

/// log Q_k(t) with Q_k(t) = prod_{j=k}^{n-1}(t+j)^k / prod_{j=0}^{k-1}(t+j)^{n-k}; Q_0 = 1.
double log_Q(int k, double t, int n);

/// Unique positive root of P(t) = a0^{n-1} / delta, via doubling bracket,
/// bisection and a Newton polish on log P.
double solve_mu0(int n, double a0, double delta);
double solve_mu0_log(int n, double target_log);

/// Distinct positive reals with their elementary-symmetric data.
struct TupleInstance {
    std::vector<double> xs;
    int n;
    std::vector<double> log_a;  // log a_k = log e_{n-k}(xs), k = 0..n-1
    double log_delta;

    static TupleInstance from_roots(std::span<const double> xs);
};

struct Theorem2Row {
    int k;
    double log_lhs;  // n * log(a_k / C(n,k))
    double log_rhs;  // log Q_k(mu0) + (n-k) log a0
    double margin;
};

struct Theorem2Report {
    int n;
    double mu0;
    std::vector<Theorem2Row> rows;
    bool all_nonnegative(double slack = 1e-9) const;
};

Theorem2Report verify_theorem2(std::span<const double> xs);

/// Rows of 2 log S_k - log S_{k-1} - log S_{k+1} - log(1 + 1/(mu0+k-1)) for k = 1..n-1,
/// with S_k = a_{n-k}/C(n,k), S_0 = 1.
std::vector<Theorem2Row> improved_newton_check(std::span<const double> xs);

/// Explicit derivative of log(Q_k^{n-1} P^{n-k}) at t.
double lemma5_log_deriv(int n, int k, double t);

/// True iff (n-1) log Q_k + (n-k) log P is strictly increasing along the grid
/// and the analytic derivative is positive at every grid point.
bool lemma5_monotonicity_check(int n, int k, std::span<const double> grid);

struct AsymptoticResult {
    double exact;
    double asymptotic;  // n^2 (c(1+v)ln(1+v) - cv ln v + v ln v - (c+v)ln(c+v))
    double relerr;      // |exact - asymptotic| / n^2
};

AsymptoticResult asymptotic_log_Q(double c, double v, int n);

double discriminant_from_roots(std::span<const double> xs);
double log_discriminant_from_roots(std::span<const double> xs);

double log_binomial(int n, int k);

}  // namespace trace_atlas

#endif

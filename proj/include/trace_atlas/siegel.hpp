#ifndef TRACE_ATLAS_SIEGEL_HPP
#define TRACE_ATLAS_SIEGEL_HPP

#include <vector>

#include "trace_atlas/intpoly.hpp"

namespace trace_atlas {

struct NotOddPrime : std::runtime_error {
    explicit NotOddPrime(unsigned long p)
        : std::runtime_error("not an odd prime <= cap: " + std::to_string(p)) {}
};

struct NegativeCoefficient : std::runtime_error {
    explicit NegativeCoefficient(int k)
        : std::runtime_error("coefficient a_" + std::to_string(k) + " is not positive") {}
};

inline constexpr unsigned long kDefaultPrimeCap = 10007;

bool is_odd_prime(unsigned long p);

/// Minimal polynomial of zeta + zeta^{-1} + 2 for a primitive p-th root of unity zeta.
struct SiegelPoly {
    unsigned long p;
    unsigned long n;  // (p-1)/2
    IntPoly poly;
};

/// Built as U_n(x/2) + U_{n-1}(x/2) shifted by -2.
SiegelPoly siegel_poly_constructive(unsigned long p, unsigned long cap = kDefaultPrimeCap);

/// Built coefficient-wise: coeff of x^d is (-1)^{n-d} C(n+d, 2d).
SiegelPoly siegel_poly_closed_form(unsigned long p, unsigned long cap = kDefaultPrimeCap);

/// Coefficient table of (1+u)/(1+2u-uv+u^2) expanded by its linear recurrence.
/// Entry [m][j] should equal (-1)^{m-j} C(m+j, 2j); kept as an oracle for the
/// closed-form construction.
std::vector<std::vector<mpz_class>> gmj_recurrence_table(int m_max, int j_max);

/// a_{n-1} / n as an exact rational (monic input required).
mpq_class absolute_trace(const IntPoly& f);

struct NormalizedPoint {
    long d;
    long n;
    mpq_class c_exact;  // d/n
    double c;
    double value;  // (a_{n-d} / C(n,d))^{1/d}
};

/// The points (d/n, (a_{n-d}/C(n,d))^{1/d}) for d = 1..n.
/// Throws NegativeCoefficient when the Viete coefficients are not all positive.
std::vector<NormalizedPoint> normalized_points(const IntPoly& f);

}  // namespace trace_atlas

#endif

#include "trace_atlas/siegel.hpp"

#include <cmath>

namespace trace_atlas {

bool is_odd_prime(unsigned long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (unsigned long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

namespace {
void require_odd_prime(unsigned long p, unsigned long cap) {
    if (!is_odd_prime(p) || p > cap) throw NotOddPrime(p);
}
}  // namespace

SiegelPoly siegel_poly_constructive(unsigned long p, unsigned long cap) {
    require_odd_prime(p, cap);
    const unsigned long n = (p - 1) / 2;
    IntPoly f = chebyshev_U_half(static_cast<unsigned>(n)) + chebyshev_U_half(static_cast<unsigned>(n - 1));
    return SiegelPoly{p, n, compose_shift(f, mpz_class(-2))};
}

SiegelPoly siegel_poly_closed_form(unsigned long p, unsigned long cap) {
    require_odd_prime(p, cap);
    const unsigned long n = (p - 1) / 2;
    std::vector<mpz_class> c(n + 1);
    for (unsigned long d = 0; d <= n; ++d) {
        mpz_class b = binomial(n + d, static_cast<long>(2 * d));
        if ((n - d) % 2 != 0) b = -b;
        c[d] = b;
    }
    return SiegelPoly{p, n, IntPoly{std::move(c)}};
}

std::vector<std::vector<mpz_class>> gmj_recurrence_table(int m_max, int j_max) {
    std::vector<std::vector<mpz_class>> g(static_cast<std::size_t>(m_max) + 1,
                                          std::vector<mpz_class>(static_cast<std::size_t>(j_max) + 1, mpz_class(0)));
    auto at = [&](int m, int j) -> mpz_class {
        if (m < 0 || j < 0) return 0;
        return g[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)];
    };
    for (int m = 0; m <= m_max; ++m) {
        for (int j = 0; j <= j_max; ++j) {
            mpz_class v = -2 * at(m - 1, j) + at(m - 1, j - 1) - at(m - 2, j);
            if (m == 0 && j == 0) v += 1;
            if (m == 1 && j == 0) v += 1;
            g[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] = v;
        }
    }
    return g;
}

mpq_class absolute_trace(const IntPoly& f) {
    const int n = f.degree();
    if (n < 1 || !f.is_monic()) throw std::domain_error("absolute_trace: monic polynomial of degree >= 1 required");
    mpq_class t(f.viete_a(n - 1), n);
    t.canonicalize();
    return t;
}

std::vector<NormalizedPoint> normalized_points(const IntPoly& f) {
    const int n = f.degree();
    if (n < 1 || !f.is_monic()) throw std::domain_error("normalized_points: monic polynomial of degree >= 1 required");
    for (int k = 0; k < n; ++k)
        if (f.viete_a(k) <= 0) throw NegativeCoefficient(k);
    std::vector<NormalizedPoint> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int d = 1; d <= n; ++d) {
        const mpz_class a = f.viete_a(n - d);
        const double log_val = (log_mpz(a) - log_mpz(binomial(static_cast<unsigned long>(n), d))) / d;
        mpq_class c(d, n);
        c.canonicalize();
        pts.push_back(NormalizedPoint{d, n, c, static_cast<double>(d) / n, std::exp(log_val)});
    }
    return pts;
}

}  // namespace trace_atlas

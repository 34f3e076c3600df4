#ifndef TRACE_ATLAS_INTPOLY_HPP
#define TRACE_ATLAS_INTPOLY_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace trace_atlas {

struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " (at offset " + std::to_string(off) + ")"), offset(off) {}
};

/// Dense integer polynomial, constant coefficient first.
/// The zero polynomial has an empty coefficient vector and degree -1.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static IntPoly constant(const mpz_class& c);
    static IntPoly x();

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of x^i; zero beyond the degree.
    const mpz_class& coeff(int i) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    bool is_monic() const;
    const mpz_class& leading() const;

    /// The unsigned Viete coefficient a_k with f = x^n - a_{n-1}x^{n-1} + ... + (-1)^n a_0,
    /// i.e. a_k = (-1)^{n-k} * coeff(k).  All sign bookkeeping lives here.
    mpz_class viete_a(int k) const;

    /// True iff monic and a_k > 0 for 0 <= k <= n-1.
    bool viete_positive() const;

    IntPoly derivative() const;
    mpq_class eval(const mpq_class& x) const;
    double eval_double(double x) const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

  private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

/// C(n, k); zero for k < 0 or k > n.
mpz_class binomial(unsigned long n, long k);

/// U_m(x/2) as an integer polynomial, from the explicit alternating-binomial sum.
IntPoly chebyshev_U_half(unsigned m);

/// Same polynomial from the three-term recurrence U_{m+1}(x/2) = x U_m(x/2) - U_{m-1}(x/2).
/// Kept separate as a cross-check route.
IntPoly chebyshev_U_half_recurrence(unsigned m);

/// Exact Taylor shift f(x + s).
IntPoly compose_shift(const IntPoly& f, const mpz_class& s);

/// Corpus line format: whitespace-separated decimal integers, constant first.
IntPoly parse_poly(const std::string& text);
std::string serialize_poly(const IntPoly& f);

/// Natural log of a positive big integer, good to roughly long-double precision.
double log_mpz(const mpz_class& z);

}  // namespace trace_atlas

#endif

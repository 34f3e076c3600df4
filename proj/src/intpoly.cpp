#include "trace_atlas/intpoly.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace trace_atlas {

namespace {
const mpz_class kZero = 0;
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(const mpz_class& c) {
    if (c == 0) return IntPoly{};
    return IntPoly{{c}};
}

IntPoly IntPoly::x() { return IntPoly{{mpz_class(0), mpz_class(1)}}; }

const mpz_class& IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
}

bool IntPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

const mpz_class& IntPoly::leading() const {
    if (coeffs_.empty()) return kZero;
    return coeffs_.back();
}

mpz_class IntPoly::viete_a(int k) const {
    const int n = degree();
    mpz_class c = coeff(k);
    if ((n - k) % 2 != 0) c = -c;
    return c;
}

bool IntPoly::viete_positive() const {
    if (!is_monic()) return false;
    for (int k = 0; k < degree(); ++k)
        if (viete_a(k) <= 0) return false;
    return true;
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return IntPoly{};
    std::vector<mpz_class> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPoly{std::move(d)};
}

mpq_class IntPoly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + mpq_class(*it);
    }
    acc.canonicalize();
    return acc;
}

double IntPoly::eval_double(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<mpz_class> r(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return IntPoly{std::move(r)};
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<mpz_class> r(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
    return IntPoly{std::move(r)};
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly{};
    std::vector<mpz_class> r(coeffs_.size() + o.coeffs_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPoly{std::move(r)};
}

IntPoly IntPoly::operator-() const {
    std::vector<mpz_class> r(coeffs_);
    for (auto& c : r) c = -c;
    return IntPoly{std::move(r)};
}

mpz_class binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

IntPoly chebyshev_U_half(unsigned m) {
    std::vector<mpz_class> c(m + 1, mpz_class(0));
    for (unsigned k = 0; k <= m / 2; ++k) {
        mpz_class term = binomial(m - k, static_cast<long>(k));
        if (k % 2 != 0) term = -term;
        c[m - 2 * k] = term;
    }
    return IntPoly{std::move(c)};
}

IntPoly chebyshev_U_half_recurrence(unsigned m) {
    IntPoly prev = IntPoly::constant(1);
    if (m == 0) return prev;
    IntPoly cur = IntPoly::x();
    const IntPoly x = IntPoly::x();
    for (unsigned i = 1; i < m; ++i) {
        IntPoly next = x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPoly compose_shift(const IntPoly& f, const mpz_class& s) {
    // Horner in x + s.
    IntPoly shift{{s, mpz_class(1)}};
    IntPoly acc;
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * shift + IntPoly::constant(f.coeff(i));
    }
    return acc;
}

IntPoly parse_poly(const std::string& text) {
    std::vector<mpz_class> coeffs;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= n) break;
        std::size_t start = i;
        if (text[i] == '+' || text[i] == '-') ++i;
        std::size_t digits = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            ++i;
            ++digits;
        }
        if (digits == 0) throw ParseError("expected integer", start);
        if (i < n && !std::isspace(static_cast<unsigned char>(text[i])))
            throw ParseError("unexpected character", i);
        coeffs.emplace_back(text.substr(start, i - start), 10);
    }
    if (coeffs.empty()) throw ParseError("empty polynomial", 0);
    return IntPoly{std::move(coeffs)};
}

std::string serialize_poly(const IntPoly& f) {
    std::ostringstream out;
    const int d = f.degree();
    if (d < 0) return "0";
    for (int i = 0; i <= d; ++i) {
        if (i) out << ' ';
        out << f.coeff(i);
    }
    return out.str();
}

double log_mpz(const mpz_class& z) {
    if (z <= 0) throw std::domain_error("log_mpz: nonpositive argument");
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    const long double ln2 = 0.693147180559945309417232121458L;
    return static_cast<double>(std::log(static_cast<long double>(mant)) + static_cast<long double>(exp2) * ln2);
}

}  // namespace trace_atlas

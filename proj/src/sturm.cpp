#include "trace_atlas/sturm.hpp"

#include <algorithm>
#include <cmath>

namespace trace_atlas {

bool Bound::operator<(const Bound& o) const {
    if (is_neg_inf()) return !o.is_neg_inf();
    if (is_pos_inf()) return false;
    if (o.is_neg_inf()) return false;
    if (o.is_pos_inf()) return true;
    return value_ < o.value_;
}

namespace {

mpz_class content(const IntPoly& f) {
    mpz_class g = 0;
    for (const auto& c : f.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPoly divide_exact(const IntPoly& f, const mpz_class& d) {
    std::vector<mpz_class> c(f.coeffs());
    for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    return IntPoly{std::move(c)};
}

// Pseudo-remainder r with m*a = q*b + r for some integer m > 0.
IntPoly positive_prem(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    const int db = b.degree();
    const mpz_class& lb = b.leading();
    int steps = a.degree() - db + 1;
    bool flipped = false;
    while (r.degree() >= db && steps-- > 0) {
        std::vector<mpz_class> t(static_cast<std::size_t>(r.degree() + 1));
        const mpz_class lr = r.leading();
        const int shift = r.degree() - db;
        // r <- lb*r - lr*x^shift*b
        for (int i = 0; i <= r.degree(); ++i) t[static_cast<std::size_t>(i)] = lb * r.coeff(i);
        for (int i = 0; i <= db; ++i) t[static_cast<std::size_t>(i + shift)] -= lr * b.coeff(i);
        r = IntPoly{std::move(t)};
        if (lb < 0) flipped = !flipped;
    }
    if (flipped) r = -r;
    return r;
}

// Sign of f(p/q), evaluated as the integer f(p/q) * q^deg.
int sign_at(const IntPoly& f, const mpq_class& x) {
    if (f.is_zero()) return 0;
    const mpz_class& p = x.get_num();
    const mpz_class& q = x.get_den();
    mpz_class acc = f.leading();
    mpz_class qpow = 1;
    for (int i = f.degree() - 1; i >= 0; --i) {
        qpow *= q;
        acc = acc * p + f.coeff(i) * qpow;
    }
    return sgn(acc);
}

}  // namespace

SturmChain::SturmChain(const IntPoly& f) {
    polys_.push_back(f);
    IntPoly d = f.derivative();
    if (d.is_zero()) return;
    polys_.push_back(d);
    while (true) {
        const IntPoly& a = polys_[polys_.size() - 2];
        const IntPoly& b = polys_.back();
        IntPoly r = positive_prem(a, b);
        if (r.is_zero()) break;
        mpz_class cont = content(r);
        r = divide_exact(r, cont);
        polys_.push_back(-r);
    }
}

bool SturmChain::squarefree() const { return !polys_.empty() && polys_.back().degree() == 0; }

int SturmChain::variations_at(const Bound& b) const {
    int var = 0;
    int prev = 0;
    for (const auto& p : polys_) {
        int s;
        if (b.is_finite()) {
            s = sign_at(p, b.value());
        } else {
            s = sgn(p.leading());
            if (b.is_neg_inf() && p.degree() % 2 != 0) s = -s;
        }
        if (s != 0) {
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
    }
    return var;
}

int SturmChain::count_roots_in(const Bound& lo, const Bound& hi) const {
    if (!squarefree()) {
        if (polys_.size() >= 2) throw NonSquarefree{};
        // degree <= 1 with zero derivative: constants have no roots
        return 0;
    }
    return variations_at(lo) - variations_at(hi);
}

int count_roots_in(const IntPoly& f, const Bound& lo, const Bound& hi) {
    return SturmChain(f).count_roots_in(lo, hi);
}

TotalPositivityReport check_totally_positive(const IntPoly& f) {
    TotalPositivityReport rep{false, f.is_monic(), false, -1};
    if (f.degree() < 1) return rep;
    SturmChain chain(f);
    rep.squarefree = chain.squarefree();
    if (!rep.squarefree) return rep;
    rep.positive_roots = chain.count_roots_in(Bound::at(0), Bound::pos_inf());
    rep.totally_positive = rep.monic && rep.positive_roots == f.degree();
    return rep;
}

bool is_totally_positive(const IntPoly& f) { return check_totally_positive(f).totally_positive; }

namespace {

// Cauchy bound: all real roots lie in (-B, B).
mpq_class cauchy_bound(const IntPoly& f) {
    mpz_class m = 0;
    for (int i = 0; i < f.degree(); ++i) {
        mpz_class a = abs(f.coeff(i));
        if (a > m) m = a;
    }
    mpq_class b(m, abs(f.leading()));
    b.canonicalize();
    return b + 1;
}

void isolate_rec(const SturmChain& chain, const mpq_class& lo, const mpq_class& hi,
                 std::vector<std::pair<mpq_class, mpq_class>>& out) {
    const int cnt = chain.count_roots_in(Bound::at(lo), Bound::at(hi));
    if (cnt == 0) return;
    if (cnt == 1) {
        out.emplace_back(lo, hi);
        return;
    }
    mpq_class mid = (lo + hi) / 2;
    mid.canonicalize();
    isolate_rec(chain, lo, mid, out);
    isolate_rec(chain, mid, hi, out);
}

}  // namespace

std::vector<std::pair<mpq_class, mpq_class>> isolate_real_roots(const IntPoly& f, const Bound& range_lo,
                                                                const Bound& range_hi) {
    SturmChain chain(f);
    if (!chain.squarefree()) throw NonSquarefree{};
    mpq_class b = cauchy_bound(f);
    mpq_class lo = range_lo.is_finite() ? range_lo.value() : mpq_class(-b);
    mpq_class hi = range_hi.is_finite() ? range_hi.value() : b;
    if (lo > -b) lo = std::max(lo, mpq_class(-b));
    std::vector<std::pair<mpq_class, mpq_class>> out;
    if (lo >= hi) return out;
    isolate_rec(chain, lo, hi, out);
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

double refine_root(const IntPoly& f, mpq_class lo, mpq_class hi, double rel_tol) {
    if (sign_at(f, hi) == 0) return hi.get_d();
    int slo = sign_at(f, lo);
    if (slo == 0) {
        // root is strictly inside; nudge the open endpoint
        mpq_class eps = (hi - lo) / 4096;
        lo += eps;
        slo = sign_at(f, lo);
    }
    while (true) {
        mpq_class mid = (lo + hi) / 2;
        mid.canonicalize();
        const double width = mpq_class(hi - lo).get_d();
        const double scale = std::max(1.0, std::abs(mid.get_d()));
        if (width <= rel_tol * scale) return mid.get_d();
        const int sm = sign_at(f, mid);
        if (sm == 0) return mid.get_d();
        if (sm == slo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

}  // namespace trace_atlas

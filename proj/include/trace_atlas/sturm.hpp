#ifndef TRACE_ATLAS_STURM_HPP
#define TRACE_ATLAS_STURM_HPP

#include <optional>
#include <utility>
#include <vector>

#include "trace_atlas/intpoly.hpp"

namespace trace_atlas {

struct NonSquarefree : std::runtime_error {
    NonSquarefree() : std::runtime_error("polynomial has a repeated root (gcd(f, f') nonconstant)") {}
};

/// Endpoint for root counting: -inf, a rational, or +inf.
class Bound {
  public:
    static Bound neg_inf() { return Bound(-1, 0); }
    static Bound pos_inf() { return Bound(+1, 0); }
    static Bound at(mpq_class v) {
        Bound b(0, std::move(v));
        b.value_.canonicalize();
        return b;
    }

    bool is_neg_inf() const { return kind_ < 0; }
    bool is_pos_inf() const { return kind_ > 0; }
    bool is_finite() const { return kind_ == 0; }
    const mpq_class& value() const { return value_; }

    bool operator<(const Bound& o) const;

  private:
    Bound(int kind, mpq_class v) : kind_(kind), value_(std::move(v)) {}
    int kind_;
    mpq_class value_;
};

/// Signed remainder sequence of (f, f').  Primitive pseudo-remainders with
/// positive multipliers keep the coefficients integral without disturbing the
/// sign-variation count.
class SturmChain {
  public:
    explicit SturmChain(const IntPoly& f);

    const std::vector<IntPoly>& polys() const { return polys_; }

    /// True iff gcd(f, f') is constant.
    bool squarefree() const;

    int variations_at(const Bound& b) const;

    /// Distinct real roots of f in (lo, hi].  Throws NonSquarefree.
    int count_roots_in(const Bound& lo, const Bound& hi) const;

  private:
    std::vector<IntPoly> polys_;
};

int count_roots_in(const IntPoly& f, const Bound& lo, const Bound& hi);

struct TotalPositivityReport {
    bool totally_positive;
    bool monic;
    bool squarefree;
    int positive_roots;  // -1 when not computed (non-squarefree input)
};

TotalPositivityReport check_totally_positive(const IntPoly& f);

/// Monic, squarefree, and all degree(f) roots real, distinct and positive.
bool is_totally_positive(const IntPoly& f);

/// Disjoint intervals (lo, hi], each containing exactly one real root of f,
/// restricted to (range_lo, range_hi].  Requires squarefree f.
std::vector<std::pair<mpq_class, mpq_class>> isolate_real_roots(const IntPoly& f, const Bound& range_lo,
                                                                const Bound& range_hi);

/// Bisection refinement of an isolated root to the given relative width.
double refine_root(const IntPoly& f, mpq_class lo, mpq_class hi, double rel_tol);

}  // namespace trace_atlas

#endif

#pragma once

#include <vector>

#include "racah/param_scalar.hpp"
#include "racah/point.hpp"
#include "racah/term.hpp"

namespace racah {

/// A phase-space variable: x_i or p_i, 1-based index.
struct Var {
    enum Kind { X, P } kind;
    int index;
};

/// Classical observable: exact sparse sum of monomials in x_i (Laurent),
/// p_i, r and the potential symbols, over Gaussian-rational coefficients
/// with formal-parameter powers. Lives in the quotient ring with the single
/// relation r^2 = sum x_i^2, reduced eagerly so every stored monomial has
/// er <= 1. Values are immutable after construction; all operations are
/// pure, so expressions can be shared across threads freely.
class PhaseExpr {
  public:
    PhaseExpr() = default;
    explicit PhaseExpr(RingDims dims) : dims_(dims) {}

    RingDims dims() const { return dims_; }
    int n() const { return dims_.n; }
    const std::vector<Term>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    /// Structurally empty. Mathematical zero testing is is_zero(), which
    /// also detects cancellations hidden behind negative r powers.
    bool empty() const { return terms_.empty(); }

    PhaseExpr operator-() const;
    friend PhaseExpr operator+(const PhaseExpr& a, const PhaseExpr& b);
    friend PhaseExpr operator-(const PhaseExpr& a, const PhaseExpr& b);
    friend PhaseExpr operator*(const PhaseExpr& a, const PhaseExpr& b);
    friend PhaseExpr operator*(const PhaseExpr& a, const ParamScalar& s);
    friend PhaseExpr operator*(const ParamScalar& s, const PhaseExpr& a) {
        return a * s;
    }

    PhaseExpr& operator+=(const PhaseExpr& o) { return *this = *this + o; }
    PhaseExpr& operator-=(const PhaseExpr& o) { return *this = *this - o; }

    /// Which x_i (resp. p_i) the expression can depend on, as bitmasks.
    /// An r or V factor depends on every x_i.
    uint32_t xmask() const;
    uint32_t pmask() const;

    class Builder;

  private:
    friend class PhaseRing;
    friend class WeylExpr;
    friend PhaseExpr classical_limit(const class WeylExpr&);
    friend PhaseExpr diff(const PhaseExpr&, Var);
    friend bool is_zero(const PhaseExpr&);
    friend PhaseExpr reflect_indices(const PhaseExpr&);
    friend PhaseExpr subst_param_zero(const PhaseExpr&, int);
    friend GRat eval(const PhaseExpr&, const RadialPoint&);

    RingDims dims_{};
    std::vector<Term> terms_;  // sorted by Mono order, no zero coefficients
};

/// Exact partial derivative. Chain rules: d r/d x_i = x_i/r and
/// d V^(k)/d x_i = V^(k+1) x_i / r; differentiating V^(kpot) throws
/// std::domain_error (tower exhausted).
PhaseExpr diff(const PhaseExpr& f, Var v);

/// Canonical Poisson bracket sum_i (d_x f d_p g - d_p f d_x g).
PhaseExpr poisson(const PhaseExpr& f, const PhaseExpr& g);

/// Decides equality with zero in the quotient ring: multiplies through by
/// r^(2d) to clear negative r powers (monomial-level reduction alone is not
/// canonical for those), re-reduces, and tests emptiness.
bool is_zero(const PhaseExpr& f);

/// Exact value at a radial point. Throws on r^2 != sum x^2 or zero x_i.
GRat eval(const PhaseExpr& f, const RadialPoint& pt);

/// The index-reflection automorphism i -> n+1-i applied to coordinates,
/// momenta and the a_i parameters.
PhaseExpr reflect_indices(const PhaseExpr& f);

/// Sets one formal parameter to zero (drops every term carrying it).
PhaseExpr subst_param_zero(const PhaseExpr& f, int param_slot);

/// Factory for expressions over a fixed ring shape.
class PhaseRing {
  public:
    explicit PhaseRing(int n, int kpot = 2);

    RingDims dims() const { return dims_; }
    int n() const { return dims_.n; }

    PhaseExpr zero() const { return PhaseExpr(dims_); }
    PhaseExpr one() const { return scalar(ParamScalar::rational(1)); }
    PhaseExpr scalar(const ParamScalar& s) const;
    PhaseExpr x(int i, int e = 1) const;   // 1-based, e may be negative
    PhaseExpr p(int i, int e = 1) const;   // 1-based, e >= 0
    PhaseExpr r(int e = 1) const;          // any integer power
    PhaseExpr v(int k) const;              // V^(k), 0 <= k <= kpot
    PhaseExpr mono(const Mono& m) const;   // monomial (er reduced if needed)
    /// Normalizes an arbitrary term list into an expression.
    PhaseExpr from_terms(const std::vector<Term>& ts) const;

  private:
    RingDims dims_;
};

}  // namespace racah

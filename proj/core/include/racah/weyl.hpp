#pragma once

#include "racah/phase.hpp"

namespace racah {

/// Quantum observable in normal-ordered form: every stored monomial is
/// (position part) * p^ep with the position part (Laurent x, r, V) on the
/// left. The product reorders momentum factors rightward through
/// p_i f(x, r, V) = f p_i + (-i hbar) df/dx_i, so [x_i, p_j] = i hbar d_ij
/// holds exactly. Immutable after construction; operations are pure.
class WeylExpr {
  public:
    WeylExpr() = default;
    explicit WeylExpr(RingDims dims) : dims_(dims) {}

    RingDims dims() const { return dims_; }
    int n() const { return dims_.n; }
    const std::vector<Term>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    WeylExpr operator-() const;
    friend WeylExpr operator+(const WeylExpr& a, const WeylExpr& b);
    friend WeylExpr operator-(const WeylExpr& a, const WeylExpr& b);
    /// Normal-ordered noncommutative product.
    friend WeylExpr operator*(const WeylExpr& a, const WeylExpr& b);
    friend WeylExpr operator*(const WeylExpr& a, const ParamScalar& s);
    friend WeylExpr operator*(const ParamScalar& s, const WeylExpr& a) {
        return a * s;
    }

    WeylExpr& operator+=(const WeylExpr& o) { return *this = *this + o; }
    WeylExpr& operator-=(const WeylExpr& o) { return *this = *this - o; }

  private:
    friend class WeylRing;
    friend bool wis_zero(const WeylExpr&);
    friend PhaseExpr classical_limit(const WeylExpr&);
    friend WeylExpr adjoint(const WeylExpr&);
    friend WeylExpr div_ihbar(const WeylExpr&);
    friend WeylExpr reflect_indices(const WeylExpr&);
    friend WeylExpr subst_param_zero(const WeylExpr&, int);

    RingDims dims_{};
    std::vector<Term> terms_;  // sorted, no zero coefficients, er <= 1
};

WeylExpr commutator(const WeylExpr& a, const WeylExpr& b);
WeylExpr anticommutator(const WeylExpr& a, const WeylExpr& b);
/// Symmetrizer {A,B,C}: the sum of all six orderings of the triple product.
WeylExpr symmetrize3(const WeylExpr& a, const WeylExpr& b, const WeylExpr& c);

/// Zero test in the quotient ring, applied to the normal-ordered canonical
/// form (clears negative r powers by left multiplication with r^(2d)).
bool wis_zero(const WeylExpr& a);

/// hbar -> 0: truncates every coefficient to its hbar-free part and reads
/// the normal-ordered monomial as the commutative phase-space monomial.
PhaseExpr classical_limit(const WeylExpr& a);

/// Formal adjoint under x^+ = x, p^+ = p, i^+ = -i, with factor reversal.
WeylExpr adjoint(const WeylExpr& a);

/// Exact division by i*hbar; throws std::domain_error if some term has no
/// hbar factor (commutators always do).
WeylExpr div_ihbar(const WeylExpr& a);

WeylExpr reflect_indices(const WeylExpr& a);
WeylExpr subst_param_zero(const WeylExpr& a, int param_slot);

class WeylRing {
  public:
    explicit WeylRing(int n, int kpot = 2) : phase_(n, kpot) {}

    RingDims dims() const { return phase_.dims(); }
    int n() const { return phase_.dims().n; }

    WeylExpr zero() const { return WeylExpr(dims()); }
    WeylExpr one() const { return scalar(ParamScalar::rational(1)); }
    WeylExpr scalar(const ParamScalar& s) const;
    WeylExpr x(int i, int e = 1) const;  // position factor, Laurent
    WeylExpr p(int i, int e = 1) const;  // momentum factor
    WeylExpr r(int e = 1) const;
    WeylExpr v(int k) const;
    /// Reinterprets a pure position expression (no p factors) as operator.
    WeylExpr position(const PhaseExpr& f) const;
    /// Normalizes a list of already normal-ordered terms.
    WeylExpr from_terms(const std::vector<Term>& ts) const;

  private:
    PhaseRing phase_;
};

}  // namespace racah

#pragma once

// Internal term accumulation and the r^2 -> sum x_i^2 reduction machinery
// shared by the classical and Weyl rings.

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "racah/term.hpp"

namespace racah::detail {

/// Expansion of (x_1^2 + ... + x_n^2)^t: exponent patterns with multinomial
/// coefficients. Cached per (n, t); thread-safe.
const std::vector<std::pair<std::array<int8_t, kMaxDim>, mpz_class>>&
rsq_power(int n, int t);

class Accum {
  public:
    explicit Accum(RingDims d) : dims_(d) {}

    void reserve(size_t k) { map_.reserve(k); }

    /// Adds a term whose er may be >= 2; reduces through r^2 = sum x_i^2.
    void add(const Mono& m, GRat c) {
        if (m.er < 2) {
            add_raw(m, std::move(c));
            return;
        }
        int t = m.er / 2;
        Mono base = m;
        base.er = static_cast<int8_t>(m.er - 2 * t);
        for (const auto& [pat, mult] : rsq_power(dims_.n, t)) {
            Mono e = base;
            for (int i = 0; i < dims_.n; ++i)
                e.ex[i] = chk_e(e.ex[i] + pat[i], "x");
            GRat cc = c;
            cc.re *= mult;
            cc.im *= mult;
            add_raw(e, std::move(cc));
        }
    }

    /// Adds a term already in canonical er <= 1 form.
    void add_raw(const Mono& m, GRat c) {
        if (c.is_zero()) return;
        auto [it, fresh] = map_.try_emplace(m, std::move(c));
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) map_.erase(it);
        }
    }

    std::vector<Term> finish() {
        std::vector<Term> out;
        out.reserve(map_.size());
        for (auto& kv : map_)
            out.emplace_back(kv.first, std::move(kv.second));
        map_.clear();
        std::sort(out.begin(), out.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
        return out;
    }

  private:
    RingDims dims_;
    std::unordered_map<Mono, GRat, MonoHash> map_;
};

/// Emits c * d(monomial)/dx_i (i zero-based) into `out`. Handles the x power
/// rule (Laurent included), the r chain rule and the V tower chain rule;
/// throws std::domain_error when the tower is exhausted. Momentum exponents
/// are untouched, so this also reorders Weyl position parts.
void emit_dx(const Mono& m, const GRat& c, int i, RingDims dims, Accum& out);

/// Emits c * d(monomial)/dp_i into `out`.
void emit_dp(const Mono& m, const GRat& c, int i, Accum& out);

/// True iff the term list is zero in the quotient ring: multiplies by the
/// minimal even r power clearing all negative er, re-reduces, tests empty.
bool zero_after_rclear(const std::vector<Term>& terms, RingDims dims);

/// Product of two monomials (no momentum reordering), reduced into `out`.
void emit_mono_product(const Mono& a, const Mono& b, const GRat& c,
                       RingDims dims, Accum& out);

}  // namespace racah::detail

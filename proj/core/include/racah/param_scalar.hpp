#pragma once

#include <algorithm>
#include <vector>

#include "racah/term.hpp"

namespace racah {

/// A coefficient: exact Gaussian-rational polynomial in the formal
/// parameters hbar, omega, mu, a_1..a_n. Parameter exponents are
/// nonnegative; nothing in the catalog ever divides by a parameter.
class ParamScalar {
  public:
    using Pow = std::array<uint8_t, kMaxPar>;

    ParamScalar() = default;

    static ParamScalar rational(long num, long den = 1) {
        return of(GRat(num, den));
    }
    static ParamScalar of(GRat c) {
        ParamScalar s;
        if (!c.is_zero()) s.terms_.push_back({Pow{}, std::move(c)});
        return s;
    }
    static ParamScalar unit_i() { return of(GRat::unit_i()); }
    /// c * param^e for one parameter slot.
    static ParamScalar param(int slot, int e = 1, GRat c = GRat(1)) {
        if (slot < 0 || slot >= kMaxPar)
            throw std::out_of_range("ParamScalar::param: bad slot");
        ParamScalar s = of(std::move(c));
        if (!s.terms_.empty()) s.terms_[0].first[slot] = chk_u(e, "parameter");
        return s;
    }
    static ParamScalar hbar(int e = 1, GRat c = GRat(1)) {
        return param(kParHbar, e, std::move(c));
    }
    static ParamScalar omega(int e = 1, GRat c = GRat(1)) {
        return param(kParOmega, e, std::move(c));
    }
    static ParamScalar mu(int e = 1, GRat c = GRat(1)) {
        return param(kParMu, e, std::move(c));
    }
    /// a_i (1-based coordinate index), times an optional rational.
    static ParamScalar a(int i, GRat c = GRat(1)) {
        return param(par_a(i), 1, std::move(c));
    }

    bool is_zero() const { return terms_.empty(); }
    const std::vector<std::pair<Pow, GRat>>& terms() const { return terms_; }

    ParamScalar operator-() const {
        ParamScalar s = *this;
        for (auto& t : s.terms_) t.second = -t.second;
        return s;
    }

    friend ParamScalar operator+(const ParamScalar& x, const ParamScalar& y) {
        ParamScalar s;
        auto a = x.terms_.begin(), b = y.terms_.begin();
        while (a != x.terms_.end() || b != y.terms_.end()) {
            if (b == y.terms_.end() ||
                (a != x.terms_.end() && a->first < b->first)) {
                s.terms_.push_back(*a++);
            } else if (a == x.terms_.end() || b->first < a->first) {
                s.terms_.push_back(*b++);
            } else {
                GRat c = a->second + b->second;
                if (!c.is_zero()) s.terms_.push_back({a->first, std::move(c)});
                ++a, ++b;
            }
        }
        return s;
    }
    friend ParamScalar operator-(const ParamScalar& x, const ParamScalar& y) {
        return x + (-y);
    }
    friend ParamScalar operator*(const ParamScalar& x, const ParamScalar& y) {
        ParamScalar s;
        for (const auto& a : x.terms_)
            for (const auto& b : y.terms_) {
                Pow p;
                for (int k = 0; k < kMaxPar; ++k)
                    p[k] = chk_u(a.first[k] + b.first[k], "parameter");
                GRat c = a.second * b.second;
                s.add_term(p, std::move(c));
            }
        return s;
    }
    friend bool operator==(const ParamScalar& x, const ParamScalar& y) {
        return (x - y).is_zero();
    }

    GRat eval(const std::vector<mpq_class>& values) const;

  private:
    void add_term(const Pow& p, GRat c) {
        if (c.is_zero()) return;
        auto it = std::lower_bound(
            terms_.begin(), terms_.end(), p,
            [](const auto& t, const Pow& q) { return t.first < q; });
        if (it != terms_.end() && it->first == p) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        } else {
            terms_.insert(it, {p, std::move(c)});
        }
    }

    // Sorted by Pow, no zero coefficients.
    std::vector<std::pair<Pow, GRat>> terms_;
};

}  // namespace racah

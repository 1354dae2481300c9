#include "racah/weyl.hpp"

#include <map>

#include "accum.hpp"

namespace racah {

using detail::Accum;

namespace {

std::vector<Term> merge_sorted(const std::vector<Term>& a,
                               const std::vector<Term>& b, bool negate_b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            out.push_back(*ia++);
        } else if (ia == a.end() || ib->first < ia->first) {
            out.emplace_back(ib->first, negate_b ? -ib->second : ib->second);
            ++ib;
        } else {
            GRat c = negate_b ? ia->second - ib->second : ia->second + ib->second;
            if (!c.is_zero()) out.emplace_back(ia->first, std::move(c));
            ++ia, ++ib;
        }
    }
    return out;
}

using EpVec = std::array<uint8_t, kMaxDim>;

/// p_i o E for a normal-ordered term list E:
///   p_i (pos p^m) = pos p^(m+e_i) + (-i hbar) (d pos/dx_i) p^m.
std::vector<Term> apply_p(int i, const std::vector<Term>& in, RingDims dims) {
    Accum acc(dims);
    acc.reserve(in.size() * 2);
    for (const auto& [m, c] : in) {
        Mono shifted = m;
        shifted.ep[i] = chk_u(shifted.ep[i] + 1, "p");
        acc.add_raw(shifted, c);

        Mono dm = m;
        dm.pp[kParHbar] = chk_u(dm.pp[kParHbar] + 1, "hbar");
        GRat dc = c * GRat(mpq_class(0), mpq_class(-1));  // -i hbar
        detail::emit_dx(dm, dc, i, dims, acc);
    }
    return acc.finish();
}

int graded_cmp(const EpVec& a, const EpVec& b) {
    int da = 0, db = 0;
    for (int i = 0; i < kMaxDim; ++i) da += a[i], db += b[i];
    if (da != db) return da < db ? -1 : 1;
    for (int i = 0; i < kMaxDim; ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

}  // namespace

WeylExpr WeylExpr::operator-() const {
    WeylExpr out(dims_);
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
}

WeylExpr operator+(const WeylExpr& a, const WeylExpr& b) {
    check_dims(a.dims_, b.dims_, "add");
    WeylExpr out(a.dims_);
    out.terms_ = merge_sorted(a.terms_, b.terms_, false);
    return out;
}

WeylExpr operator-(const WeylExpr& a, const WeylExpr& b) {
    check_dims(a.dims_, b.dims_, "sub");
    WeylExpr out(a.dims_);
    out.terms_ = merge_sorted(a.terms_, b.terms_, true);
    return out;
}

WeylExpr operator*(const WeylExpr& a, const WeylExpr& b) {
    check_dims(a.dims_, b.dims_, "mul");
    RingDims dims = a.dims_;

    // Momentum-application tables: table[m] = p^m o B, built incrementally
    // along predecessor chains m -> m - e_first, shared by all left terms
    // with the same momentum exponent.
    struct EpLess {
        bool operator()(const EpVec& x, const EpVec& y) const {
            return graded_cmp(x, y) < 0;
        }
    };
    std::map<EpVec, std::vector<Term>, EpLess> table;
    table[EpVec{}] = b.terms_;

    std::vector<EpVec> needed;
    for (const auto& t : a.terms_) needed.push_back(t.first.ep);
    std::sort(needed.begin(), needed.end(), EpLess{});
    needed.erase(std::unique(needed.begin(), needed.end()), needed.end());

    // Close the set under predecessors so each table entry derives from one
    // momentum application on an existing entry.
    std::vector<EpVec> stack = needed;
    std::vector<EpVec> closure;
    while (!stack.empty()) {
        EpVec m = stack.back();
        stack.pop_back();
        if (graded_cmp(m, EpVec{}) == 0) continue;
        closure.push_back(m);
        EpVec prev = m;
        for (int i = 0; i < kMaxDim; ++i)
            if (prev[i] != 0) {
                prev[i] -= 1;
                break;
            }
        stack.push_back(prev);
    }
    std::sort(closure.begin(), closure.end(), EpLess{});
    closure.erase(std::unique(closure.begin(), closure.end(), [](auto& x, auto& y) {
                      return graded_cmp(x, y) == 0;
                  }),
                  closure.end());

    for (const auto& m : closure) {
        int i = 0;
        while (m[i] == 0) ++i;
        EpVec prev = m;
        prev[i] -= 1;
        table[m] = apply_p(i, table.at(prev), dims);
    }

    Accum acc(dims);
    acc.reserve(a.terms_.size() * b.terms_.size() / 2 + 8);
    for (const auto& [ma, ca] : a.terms_) {
        Mono pos = ma;
        pos.ep = EpVec{};
        const auto& tb = table.at(ma.ep);
        for (const auto& [mb, cb] : tb)
            detail::emit_mono_product(pos, mb, ca * cb, dims, acc);
    }
    WeylExpr out(dims);
    out.terms_ = acc.finish();
    return out;
}

WeylExpr operator*(const WeylExpr& a, const ParamScalar& s) {
    Accum acc(a.dims_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [pw, cs] : s.terms()) {
            Mono m = ma;
            for (int k = 0; k < 3 + a.dims_.n; ++k)
                m.pp[k] = chk_u(m.pp[k] + pw[k], "parameter");
            acc.add_raw(m, ca * cs);
        }
    }
    WeylExpr out(a.dims_);
    out.terms_ = acc.finish();
    return out;
}

WeylExpr commutator(const WeylExpr& a, const WeylExpr& b) {
    return a * b - b * a;
}

WeylExpr anticommutator(const WeylExpr& a, const WeylExpr& b) {
    return a * b + b * a;
}

WeylExpr symmetrize3(const WeylExpr& a, const WeylExpr& b, const WeylExpr& c) {
    return a * anticommutator(b, c) + b * anticommutator(a, c) +
           c * anticommutator(a, b);
}

bool wis_zero(const WeylExpr& a) {
    return detail::zero_after_rclear(a.terms_, a.dims_);
}

PhaseExpr classical_limit(const WeylExpr& a) {
    PhaseExpr out(a.dims_);
    for (const auto& t : a.terms_)
        if (t.first.pp[kParHbar] == 0) out.terms_.push_back(t);
    return out;
}

WeylExpr adjoint(const WeylExpr& a) {
    // (pos p^m)^+ = p^m pos; reorder each reversed term back to normal form.
    WeylExpr out(a.dims_);
    for (const auto& [m, c] : a.terms_) {
        Mono pos = m;
        pos.ep = {};
        Mono mom;
        mom.ep = m.ep;
        WeylExpr pt(a.dims_);
        pt.terms_.emplace_back(mom, GRat(1));
        WeylExpr xt(a.dims_);
        xt.terms_.emplace_back(pos, c.conj());
        out += pt * xt;
    }
    return out;
}

WeylExpr div_ihbar(const WeylExpr& a) {
    WeylExpr out(a.dims_);
    out.terms_ = a.terms_;
    for (auto& [m, c] : out.terms_) {
        if (m.pp[kParHbar] == 0)
            throw std::domain_error("div_ihbar: term without hbar factor");
        m.pp[kParHbar] -= 1;
        c *= GRat(mpq_class(0), mpq_class(-1));  // 1/i = -i
    }
    std::sort(out.terms_.begin(), out.terms_.end(),
              [](const Term& x, const Term& y) { return x.first < y.first; });
    return out;
}

WeylExpr reflect_indices(const WeylExpr& a) {
    int n = a.dims_.n;
    Accum acc(a.dims_);
    for (const auto& [m, c] : a.terms_) {
        Mono r = m;
        for (int i = 0; i < n; ++i) {
            r.ex[i] = m.ex[n - 1 - i];
            r.ep[i] = m.ep[n - 1 - i];
            r.pp[3 + i] = m.pp[3 + (n - 1 - i)];
        }
        acc.add_raw(r, c);
    }
    WeylExpr out(a.dims_);
    out.terms_ = acc.finish();
    return out;
}

WeylExpr subst_param_zero(const WeylExpr& a, int param_slot) {
    WeylExpr out(a.dims_);
    for (const auto& t : a.terms_)
        if (t.first.pp[param_slot] == 0) out.terms_.push_back(t);
    return out;
}

WeylExpr WeylRing::scalar(const ParamScalar& s) const {
    WeylExpr out(dims());
    for (const auto& [pw, c] : s.terms()) {
        Mono m;
        m.pp = pw;
        out.terms_.emplace_back(m, c);
    }
    std::sort(out.terms_.begin(), out.terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    return out;
}

WeylExpr WeylRing::x(int i, int e) const { return position(phase_.x(i, e)); }

WeylExpr WeylRing::p(int i, int e) const {
    if (i < 1 || i > n()) throw std::out_of_range("p index out of range");
    Mono m;
    m.ep[i - 1] = chk_u(e, "p");
    WeylExpr out(dims());
    out.terms_.emplace_back(m, GRat(1));
    return out;
}

WeylExpr WeylRing::r(int e) const { return position(phase_.r(e)); }

WeylExpr WeylRing::v(int k) const { return position(phase_.v(k)); }

WeylExpr WeylRing::from_terms(const std::vector<Term>& ts) const {
    Accum acc(dims());
    for (const auto& [m, c] : ts) acc.add(m, c);
    WeylExpr out(dims());
    out.terms_ = acc.finish();
    return out;
}

WeylExpr WeylRing::position(const PhaseExpr& f) const {
    check_dims(f.dims(), dims(), "position");
    WeylExpr out(dims());
    for (const auto& [m, c] : f.terms()) {
        for (int i = 0; i < n(); ++i)
            if (m.ep[i] != 0)
                throw std::invalid_argument(
                    "position: expression contains momentum factors");
        out.terms_.emplace_back(m, c);
    }
    return out;
}

}  // namespace racah

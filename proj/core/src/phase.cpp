#include "racah/phase.hpp"

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

mpq_class pow_q(const mpq_class& base, int e) {
    if (e == 0) return 1;
    bool inv = e < 0;
    unsigned long k = inv ? -(long)e : e;
    if (inv && sgn(base) == 0)
        throw std::invalid_argument("eval: zero base with negative exponent");
    mpq_class out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), k);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), k);
    out.canonicalize();
    if (inv) out = 1 / out;
    return out;
}

}  // namespace

PhaseExpr PhaseExpr::operator-() const {
    PhaseExpr out(dims_);
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
}

PhaseExpr operator+(const PhaseExpr& a, const PhaseExpr& b) {
    check_dims(a.dims_, b.dims_, "add");
    PhaseExpr out(a.dims_);
    out.terms_ = merge_sorted(a.terms_, b.terms_, false);
    return out;
}

PhaseExpr operator-(const PhaseExpr& a, const PhaseExpr& b) {
    check_dims(a.dims_, b.dims_, "sub");
    PhaseExpr out(a.dims_);
    out.terms_ = merge_sorted(a.terms_, b.terms_, true);
    return out;
}

PhaseExpr operator*(const PhaseExpr& a, const PhaseExpr& b) {
    check_dims(a.dims_, b.dims_, "mul");
    Accum acc(a.dims_);
    acc.reserve(a.terms_.size() * b.terms_.size() / 2 + 8);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            detail::emit_mono_product(ma, mb, ca * cb, a.dims_, acc);
    PhaseExpr out(a.dims_);
    out.terms_ = acc.finish();
    return out;
}

PhaseExpr operator*(const PhaseExpr& a, const ParamScalar& s) {
    Accum acc(a.dims_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [pw, cs] : s.terms()) {
            Mono m = ma;
            for (int k = 0; k < 3 + a.dims_.n; ++k)
                m.pp[k] = chk_u(m.pp[k] + pw[k], "parameter");
            acc.add_raw(m, ca * cs);
        }
    }
    PhaseExpr out(a.dims_);
    out.terms_ = acc.finish();
    return out;
}

uint32_t PhaseExpr::xmask() const {
    uint32_t full = (1u << dims_.n) - 1;
    uint32_t m = 0;
    for (const auto& t : terms_) {
        if (t.first.er != 0) return full;
        for (int k = 0; k <= dims_.kpot; ++k)
            if (t.first.ev[k] != 0) return full;
        for (int i = 0; i < dims_.n; ++i)
            if (t.first.ex[i] != 0) m |= 1u << i;
    }
    return m;
}

uint32_t PhaseExpr::pmask() const {
    uint32_t m = 0;
    for (const auto& t : terms_)
        for (int i = 0; i < dims_.n; ++i)
            if (t.first.ep[i] != 0) m |= 1u << i;
    return m;
}

PhaseExpr diff(const PhaseExpr& f, Var v) {
    if (v.index < 1 || v.index > f.dims_.n)
        throw std::out_of_range("diff: variable index out of range");
    int i = v.index - 1;
    Accum acc(f.dims_);
    acc.reserve(f.terms_.size() * 2);
    for (const auto& [m, c] : f.terms_) {
        if (v.kind == Var::X)
            detail::emit_dx(m, c, i, f.dims_, acc);
        else
            detail::emit_dp(m, c, i, acc);
    }
    PhaseExpr out(f.dims_);
    out.terms_ = acc.finish();
    return out;
}

PhaseExpr poisson(const PhaseExpr& f, const PhaseExpr& g) {
    check_dims(f.dims(), g.dims(), "poisson");
    uint32_t fx = f.xmask(), fp = f.pmask(), gx = g.xmask(), gp = g.pmask();
    PhaseExpr out(f.dims());
    for (int i = 1; i <= f.dims().n; ++i) {
        uint32_t bit = 1u << (i - 1);
        if ((fx & bit) && (gp & bit))
            out += diff(f, {Var::X, i}) * diff(g, {Var::P, i});
        if ((fp & bit) && (gx & bit))
            out -= diff(f, {Var::P, i}) * diff(g, {Var::X, i});
    }
    return out;
}

bool is_zero(const PhaseExpr& f) {
    return detail::zero_after_rclear(f.terms_, f.dims_);
}

GRat eval(const PhaseExpr& f, const RadialPoint& pt) {
    pt.validate(f.dims_.n);
    GRat total;
    for (const auto& [m, c] : f.terms_) {
        mpq_class factor = 1;
        bool vanish = false;
        for (int i = 0; i < f.dims_.n && !vanish; ++i) {
            if (m.ex[i] != 0) factor *= pow_q(mpq_class(pt.x[i]), m.ex[i]);
            if (m.ep[i] != 0) {
                if (pt.p[i] == 0)
                    vanish = true;
                else
                    factor *= pow_q(mpq_class(pt.p[i]), m.ep[i]);
            }
        }
        if (vanish) continue;
        if (m.er != 0) factor *= pow_q(mpq_class(pt.r), m.er);
        for (int k = 0; k <= f.dims_.kpot; ++k)
            if (m.ev[k] != 0) factor *= pow_q(pt.vpot.at(k), m.ev[k]);
        for (int k = 0; k < 3 + f.dims_.n; ++k)
            if (m.pp[k] != 0) factor *= pow_q(pt.par.at(k), m.pp[k]);
        GRat term = c;
        term.re *= factor;
        term.im *= factor;
        total += term;
    }
    return total;
}

PhaseExpr reflect_indices(const PhaseExpr& f) {
    int n = f.dims_.n;
    Accum acc(f.dims_);
    for (const auto& [m, c] : f.terms_) {
        Mono r = m;
        for (int i = 0; i < n; ++i) {
            r.ex[i] = m.ex[n - 1 - i];
            r.ep[i] = m.ep[n - 1 - i];
            r.pp[3 + i] = m.pp[3 + (n - 1 - i)];
        }
        acc.add_raw(r, c);
    }
    PhaseExpr out(f.dims_);
    out.terms_ = acc.finish();
    return out;
}

PhaseExpr subst_param_zero(const PhaseExpr& f, int param_slot) {
    PhaseExpr out(f.dims_);
    for (const auto& t : f.terms_)
        if (t.first.pp[param_slot] == 0) out.terms_.push_back(t);
    return out;
}

void RadialPoint::validate(int n) const {
    if ((int)x.size() < n || (int)p.size() < n)
        throw std::invalid_argument("point: wrong dimension");
    long s = 0;
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0)
            throw std::invalid_argument("point: zero coordinate x" +
                                        std::to_string(i + 1));
        s += x[i] * x[i];
    }
    if (r <= 0 || r * r != s)
        throw std::invalid_argument("point: r^2 != sum x_i^2");
    if ((int)par.size() < 3 + n)
        throw std::invalid_argument("point: missing parameter values");
}

PhaseRing::PhaseRing(int n, int kpot) {
    if (n < 2 || n > kMaxDim)
        throw std::invalid_argument("ring dimension must be in [2, " +
                                    std::to_string(kMaxDim) + "]");
    if (kpot < 0 || kpot >= kMaxPot)
        throw std::invalid_argument("potential tower depth must be in [0, " +
                                    std::to_string(kMaxPot - 1) + "]");
    dims_ = {static_cast<uint8_t>(n), static_cast<uint8_t>(kpot)};
}

PhaseExpr PhaseRing::scalar(const ParamScalar& s) const {
    PhaseExpr out(dims_);
    for (const auto& [pw, c] : s.terms()) {
        Mono m;
        m.pp = pw;
        out.terms_.emplace_back(m, c);
    }
    std::sort(out.terms_.begin(), out.terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    return out;
}

PhaseExpr PhaseRing::mono(const Mono& m) const {
    Accum acc(dims_);
    acc.add(m, GRat(1));
    PhaseExpr out(dims_);
    out.terms_ = acc.finish();
    return out;
}

PhaseExpr PhaseRing::from_terms(const std::vector<Term>& ts) const {
    Accum acc(dims_);
    for (const auto& [m, c] : ts) acc.add(m, c);
    PhaseExpr out(dims_);
    out.terms_ = acc.finish();
    return out;
}

PhaseExpr PhaseRing::x(int i, int e) const {
    if (i < 1 || i > dims_.n) throw std::out_of_range("x index out of range");
    Mono m;
    m.ex[i - 1] = chk_e(e, "x");
    return mono(m);
}

PhaseExpr PhaseRing::p(int i, int e) const {
    if (i < 1 || i > dims_.n) throw std::out_of_range("p index out of range");
    Mono m;
    m.ep[i - 1] = chk_u(e, "p");
    return mono(m);
}

PhaseExpr PhaseRing::r(int e) const {
    Mono m;
    m.er = chk_e(e, "r");
    return mono(m);
}

PhaseExpr PhaseRing::v(int k) const {
    if (k < 0 || k > dims_.kpot)
        throw std::out_of_range("V index exceeds tower depth");
    Mono m;
    m.ev[k] = 1;
    return mono(m);
}

}  // namespace racah

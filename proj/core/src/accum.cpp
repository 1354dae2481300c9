#include "accum.hpp"

#include <map>
#include <mutex>

namespace racah::detail {

namespace {

using RsqTable = std::vector<std::pair<std::array<int8_t, kMaxDim>, mpz_class>>;

void build_rsq(int n, int t, int from, std::array<int8_t, kMaxDim>& pat,
               const mpz_class& mult, RsqTable& out) {
    if (t == 0) {
        out.emplace_back(pat, mult);
        return;
    }
    if (from == n - 1) {
        pat[from] = static_cast<int8_t>(pat[from] + 2 * t);
        out.emplace_back(pat, mult);
        pat[from] = static_cast<int8_t>(pat[from] - 2 * t);
        return;
    }
    mpz_class binom = 1;
    for (int k = 0; k <= t; ++k) {
        // binom = C(t, k); pattern gets x_from^(2k).
        pat[from] = static_cast<int8_t>(pat[from] + 2 * k);
        build_rsq(n, t - k, from + 1, pat, mult * binom, out);
        pat[from] = static_cast<int8_t>(pat[from] - 2 * k);
        binom = binom * (t - k) / (k + 1);
    }
}

}  // namespace

const RsqTable& rsq_power(int n, int t) {
    static std::map<std::pair<int, int>, RsqTable> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(n, t);
    auto it = cache.find(key);
    if (it == cache.end()) {
        RsqTable table;
        std::array<int8_t, kMaxDim> pat{};
        build_rsq(n, t, 0, pat, mpz_class(1), table);
        it = cache.emplace(key, std::move(table)).first;
    }
    return it->second;
}

void emit_dx(const Mono& m, const GRat& c, int i, RingDims dims, Accum& out) {
    if (m.ex[i] != 0) {
        Mono d = m;
        d.ex[i] = chk_e(d.ex[i] - 1, "x");
        GRat cc = c;
        cc.re *= m.ex[i];
        cc.im *= m.ex[i];
        out.add_raw(d, std::move(cc));
    }
    if (m.er != 0) {
        // d(r^s)/dx_i = s x_i r^(s-2)
        Mono d = m;
        d.ex[i] = chk_e(d.ex[i] + 1, "x");
        d.er = chk_e(d.er - 2, "r");
        GRat cc = c;
        cc.re *= m.er;
        cc.im *= m.er;
        out.add_raw(d, std::move(cc));
    }
    for (int k = 0; k <= dims.kpot; ++k) {
        if (m.ev[k] == 0) continue;
        if (k == dims.kpot)
            throw std::domain_error(
                "potential derivative tower exhausted: needs V^(" +
                std::to_string(k + 1) + "), ring has K=" +
                std::to_string(dims.kpot));
        // d(V^(k))/dx_i = V^(k+1) x_i / r
        Mono d = m;
        d.ev[k] = static_cast<uint8_t>(d.ev[k] - 1);
        d.ev[k + 1] = chk_u(d.ev[k + 1] + 1, "V");
        d.ex[i] = chk_e(d.ex[i] + 1, "x");
        d.er = chk_e(d.er - 1, "r");
        GRat cc = c;
        cc.re *= m.ev[k];
        cc.im *= m.ev[k];
        out.add_raw(d, std::move(cc));
    }
}

void emit_dp(const Mono& m, const GRat& c, int i, Accum& out) {
    if (m.ep[i] == 0) return;
    Mono d = m;
    d.ep[i] = static_cast<uint8_t>(d.ep[i] - 1);
    GRat cc = c;
    cc.re *= m.ep[i];
    cc.im *= m.ep[i];
    out.add_raw(d, std::move(cc));
}

bool zero_after_rclear(const std::vector<Term>& terms, RingDims dims) {
    if (terms.empty()) return true;
    int min_er = 0;
    for (const auto& t : terms) min_er = std::min<int>(min_er, t.first.er);
    int d = min_er < 0 ? (-min_er + 1) / 2 : 0;
    Accum acc(dims);
    acc.reserve(terms.size());
    for (const auto& t : terms) {
        Mono m = t.first;
        m.er = chk_e(m.er + 2 * d, "r");
        acc.add(m, t.second);
    }
    return acc.finish().empty();
}

void emit_mono_product(const Mono& a, const Mono& b, const GRat& c,
                       RingDims dims, Accum& out) {
    Mono m;
    for (int i = 0; i < dims.n; ++i) {
        m.ex[i] = chk_e(a.ex[i] + b.ex[i], "x");
        m.ep[i] = chk_u(a.ep[i] + b.ep[i], "p");
    }
    m.er = chk_e(a.er + b.er, "r");
    for (int k = 0; k <= dims.kpot; ++k)
        m.ev[k] = chk_u(a.ev[k] + b.ev[k], "V");
    for (int k = 0; k < 3 + dims.n; ++k)
        m.pp[k] = chk_u(a.pp[k] + b.pp[k], "parameter");
    out.add(m, c);
}

}  // namespace racah::detail

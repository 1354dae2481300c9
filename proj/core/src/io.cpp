#include "racah/io.hpp"

#include <cctype>
#include <sstream>

#include "accum.hpp"

namespace racah {

namespace {

std::string param_name(int slot) {
    switch (slot) {
        case kParHbar: return "hbar";
        case kParOmega: return "omega";
        case kParMu: return "mu";
        default: return "a" + std::to_string(slot - 2);
    }
}

void append_factor(std::string& out, const std::string& name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += " * ";
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
}

std::string term_to_string(const Mono& m, const GRat& c, RingDims dims,
                           bool momentum_last) {
    std::string factors;
    for (int k = 0; k < 3 + dims.n; ++k)
        append_factor(factors, param_name(k), m.pp[k]);
    if (!momentum_last)
        for (int i = 0; i < dims.n; ++i) {
            append_factor(factors, "x" + std::to_string(i + 1), m.ex[i]);
            append_factor(factors, "p" + std::to_string(i + 1), m.ep[i]);
        }
    else
        for (int i = 0; i < dims.n; ++i)
            append_factor(factors, "x" + std::to_string(i + 1), m.ex[i]);
    append_factor(factors, "r", m.er);
    for (int k = 0; k <= dims.kpot; ++k)
        append_factor(factors, "V" + std::to_string(k), m.ev[k]);
    if (momentum_last)
        for (int i = 0; i < dims.n; ++i)
            append_factor(factors, "p" + std::to_string(i + 1), m.ep[i]);

    if (factors.empty()) return to_string(c);
    if (c.re == 1 && sgn(c.im) == 0) return factors;
    return to_string(c) + " * " + factors;
}

std::string join_terms(const std::vector<Term>& terms, RingDims dims,
                       bool momentum_last) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms) {
        if (!out.empty()) out += " + ";
        out += term_to_string(m, c, dims, momentum_last);
    }
    return out;
}

// ---- parsing ----

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    explicit Lexer(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at offset " +
                                    std::to_string(pos) + ": " + what);
    }
    mpz_class integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit((unsigned char)s[start])))
            fail("expected integer");
        return mpz_class(s.substr(start, pos - start));
    }
    mpq_class rational() {
        mpq_class q(integer());
        if (eat('/')) {
            mpz_class d = integer();
            if (d == 0) fail("zero denominator");
            q /= mpq_class(d);
        }
        return q;
    }
    std::string name() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isalpha((unsigned char)s[pos])) ++pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start) fail("expected name");
        return s.substr(start, pos - start);
    }
    int exponent() {
        if (!eat('^')) return 1;
        mpz_class e = integer();
        if (e < -127 || e > 255) fail("exponent out of range");
        return (int)e.get_si();
    }
};

int slot_of(const std::string& nm, RingDims dims, Lexer& lx) {
    if (nm == "hbar") return kParHbar;
    if (nm == "omega") return kParOmega;
    if (nm == "mu") return kParMu;
    if (nm.size() >= 2 && nm[0] == 'a') {
        int i = std::stoi(nm.substr(1));
        if (i < 1 || i > dims.n) lx.fail("parameter index out of range: " + nm);
        return par_a(i);
    }
    return -1;
}

std::vector<Term> parse_terms(const std::string& s, RingDims dims) {
    Lexer lx(s);
    detail::Accum acc(dims);
    if (lx.peek() == '0') {
        lx.eat('0');
        if (lx.peek() == '\0') return {};
        lx.fail("unexpected trailing input after 0");
    }
    do {
        GRat coef(1);
        Mono m;
        bool first_factor = true;
        do {
            char c = lx.peek();
            if (c == '(') {
                lx.eat('(');
                mpq_class re = lx.rational();
                lx.skip_ws();
                char sign = lx.peek();
                if (sign != '+' && sign != '-') lx.fail("expected + or - in complex coefficient");
                lx.eat(sign);
                mpq_class im = lx.rational();
                if (sign == '-') im = -im;
                if (!lx.eat('*')) lx.fail("expected *i in complex coefficient");
                if (lx.name() != "i") lx.fail("expected i");
                if (!lx.eat(')')) lx.fail("expected )");
                if (lx.eat('/')) {
                    mpz_class d = lx.integer();
                    if (d == 0) lx.fail("zero denominator");
                    re /= mpq_class(d);
                    im /= mpq_class(d);
                }
                coef *= GRat(re, im);
            } else if (std::isdigit((unsigned char)c) ||
                       ((c == '-' || c == '+') && first_factor)) {
                coef *= GRat(lx.rational(), mpq_class(0));
            } else if (std::isalpha((unsigned char)c)) {
                std::string nm = lx.name();
                int e = lx.exponent();
                int slot = slot_of(nm, dims, lx);
                if (slot >= 0) {
                    if (e < 0) lx.fail("negative parameter exponent");
                    m.pp[slot] = chk_u(m.pp[slot] + e, "parameter");
                } else if (nm == "i") {
                    for (int k = 0; k < e; ++k) coef *= GRat::unit_i();
                } else if (nm == "r") {
                    m.er = chk_e(m.er + e, "r");
                } else if (nm[0] == 'x' && nm.size() > 1) {
                    int i = std::stoi(nm.substr(1));
                    if (i < 1 || i > dims.n) lx.fail("x index out of range");
                    m.ex[i - 1] = chk_e(m.ex[i - 1] + e, "x");
                } else if (nm[0] == 'p' && nm.size() > 1) {
                    int i = std::stoi(nm.substr(1));
                    if (i < 1 || i > dims.n) lx.fail("p index out of range");
                    if (e < 0) lx.fail("negative momentum exponent");
                    m.ep[i - 1] = chk_u(m.ep[i - 1] + e, "p");
                } else if (nm[0] == 'V' && nm.size() > 1) {
                    int k = std::stoi(nm.substr(1));
                    if (k < 0 || k > dims.kpot) lx.fail("V index out of range");
                    if (e < 0) lx.fail("negative V exponent");
                    m.ev[k] = chk_u(m.ev[k] + e, "V");
                } else {
                    lx.fail("unknown symbol: " + nm);
                }
            } else {
                lx.fail("unexpected character");
            }
            first_factor = false;
        } while (lx.eat('*'));
        acc.add(m, coef);
    } while (lx.eat('+'));
    if (lx.peek() != '\0') lx.fail("unexpected trailing input");
    return acc.finish();
}

}  // namespace

std::string to_string(const GRat& c) {
    if (sgn(c.im) == 0) {
        std::ostringstream os;
        os << c.re;
        return os.str();
    }
    mpz_class den = lcm(c.re.get_den(), c.im.get_den());
    mpz_class a = c.re.get_num() * (den / c.re.get_den());
    mpz_class b = c.im.get_num() * (den / c.im.get_den());
    std::ostringstream os;
    os << "(" << a << (b < 0 ? " - " : " + ") << abs(b) << "*i)";
    if (den != 1) os << "/" << den;
    return os.str();
}

std::string to_string(const ParamScalar& s) {
    if (s.is_zero()) return "0";
    std::string out;
    for (const auto& [pw, c] : s.terms()) {
        std::string factors;
        for (int k = 0; k < kMaxPar; ++k)
            append_factor(factors, param_name(k), pw[k]);
        if (!out.empty()) out += " + ";
        if (factors.empty())
            out += to_string(c);
        else if (c.re == 1 && sgn(c.im) == 0)
            out += factors;
        else
            out += to_string(c) + " * " + factors;
    }
    return out;
}

std::string to_string(const PhaseExpr& f) {
    return join_terms(f.terms(), f.dims(), false);
}

std::string to_string(const WeylExpr& f) {
    return join_terms(f.terms(), f.dims(), true);
}

PhaseExpr parse_phase(const std::string& s, const PhaseRing& ring) {
    return ring.from_terms(parse_terms(s, ring.dims()));
}

WeylExpr parse_weyl(const std::string& s, const WeylRing& ring) {
    // A parsed monomial is read as already normal-ordered: position factors
    // left, the collected p powers right.
    return ring.from_terms(parse_terms(s, ring.dims()));
}

}  // namespace racah

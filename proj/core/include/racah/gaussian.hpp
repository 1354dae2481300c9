#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

namespace racah {

/// Gaussian rational: re + im*i with exact rational components.
/// The imaginary unit lives at the coefficient level, so i*i = -1 needs no
/// rewrite rule anywhere else in the kernel.
struct GRat {
    mpq_class re;
    mpq_class im;

    GRat() : re(0), im(0) {}
    GRat(long n) : re(n), im(0) {}
    GRat(long num, long den) : re(num, den), im(0) { re.canonicalize(); }
    GRat(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    static GRat unit_i() { return GRat(mpq_class(0), mpq_class(1)); }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    GRat conj() const { return GRat(re, -im); }

    GRat operator-() const { return GRat(-re, -im); }

    GRat& operator+=(const GRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GRat& operator-=(const GRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GRat& operator*=(const GRat& o) {
        if (sgn(im) == 0 && sgn(o.im) == 0) {
            re *= o.re;
            return *this;
        }
        mpq_class nre = re * o.re - im * o.im;
        mpq_class nim = re * o.im + im * o.re;
        re = std::move(nre);
        im = std::move(nim);
        return *this;
    }

    friend GRat operator+(GRat a, const GRat& b) { return a += b; }
    friend GRat operator-(GRat a, const GRat& b) { return a -= b; }
    friend GRat operator*(GRat a, const GRat& b) { return a *= b; }

    /// Division; divisor must be nonzero.
    friend GRat operator/(const GRat& a, const GRat& b) {
        mpq_class n2 = b.re * b.re + b.im * b.im;
        GRat r(a.re * b.re + a.im * b.im, a.im * b.re - a.re * b.im);
        r.re /= n2;
        r.im /= n2;
        return r;
    }

    friend bool operator==(const GRat& a, const GRat& b) {
        return a.re == b.re && a.im == b.im;
    }
};

}  // namespace racah

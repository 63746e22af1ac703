#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace ptq {

using Rational = mpq_class;

// Builds num/den in canonical reduced form. den must be nonzero.
Rational make_rational(long num, long den = 1);

Rational abs_rational(const Rational& q);

// Gaussian rational: a complex number with exact rational real and imaginary
// parts. Both parts stay in reduced canonical form, so equality is exact and
// decidable. Closed under +, -, * and / (nonzero divisor).
class ExactComplex {
public:
    ExactComplex() : re_(0), im_(0) {}
    ExactComplex(long n) : re_(n), im_(0) {}
    ExactComplex(Rational re) : re_(std::move(re)), im_(0) {}
    ExactComplex(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static ExactComplex i() { return ExactComplex(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_imaginary() const { return sgn(re_) == 0 && sgn(im_) != 0; }

    ExactComplex conj() const { return ExactComplex(re_, -im_); }

    // max(|Re|, |Im|): exact, zero iff the value is zero.
    Rational linf() const;

    ExactComplex operator-() const { return ExactComplex(-re_, -im_); }

    ExactComplex& operator+=(const ExactComplex& o);
    ExactComplex& operator-=(const ExactComplex& o);
    ExactComplex& operator*=(const ExactComplex& o);

    // Throws std::domain_error on a zero divisor.
    ExactComplex& operator/=(const ExactComplex& o);

    friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
    friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
    friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
    friend ExactComplex operator/(ExactComplex a, const ExactComplex& b) { return a /= b; }

    friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
        return cmp(a.re_, b.re_) == 0 && cmp(a.im_, b.im_) == 0;
    }
    friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }

    std::complex<double> to_cfloat() const { return {re_.get_d(), im_.get_d()}; }

    // "0", "1", "-1/2", "i", "-i", "3/4i", "1/2+3/4i", "1/2-i", ...
    std::string str() const;

private:
    Rational re_, im_;
};

}  // namespace ptq

#include "exact.hpp"

#include <stdexcept>

namespace ptq {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational abs_rational(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

Rational ExactComplex::linf() const {
    Rational ar = abs_rational(re_);
    Rational ai = abs_rational(im_);
    return cmp(ar, ai) >= 0 ? ar : ai;
}

ExactComplex& ExactComplex::operator+=(const ExactComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

ExactComplex& ExactComplex::operator-=(const ExactComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

ExactComplex& ExactComplex::operator*=(const ExactComplex& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

ExactComplex& ExactComplex::operator/=(const ExactComplex& o) {
    Rational n = o.re_ * o.re_ + o.im_ * o.im_;
    if (sgn(n) == 0) throw std::domain_error("division by zero");
    Rational r = (re_ * o.re_ + im_ * o.im_) / n;
    Rational i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

std::string ExactComplex::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (sgn(re_) != 0) out += re_.get_str();
    if (sgn(im_) != 0) {
        Rational ai = abs_rational(im_);
        if (!out.empty())
            out += sgn(im_) > 0 ? "+" : "-";
        else if (sgn(im_) < 0)
            out += "-";
        if (cmp(ai, Rational(1)) != 0) out += ai.get_str();
        out += "i";
    }
    return out;
}

}  // namespace ptq

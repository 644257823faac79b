#include "korbit/scalar.hpp"

namespace korbit {

std::string rational_str(const Rational& r) {
    return r.get_str();
}

Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a == 0) return abs(b);
    if (b == 0) return abs(a);
    // gcd(p/q, r/s) = gcd(p*s, r*q) / (q*s)
    mpz_class num;
    mpz_gcd(num.get_mpz_t(),
            mpz_class(a.get_num() * b.get_den()).get_mpz_t(),
            mpz_class(b.get_num() * a.get_den()).get_mpz_t());
    Rational g(num, a.get_den() * b.get_den());
    g.canonicalize();
    return abs(g);
}

Scalar::Scalar(long num, long den) : re_(num, den), im_(0) {
    if (den == 0) throw Error(ErrorCode::DivisionByZeroExpression, "rational with zero denominator");
    re_.canonicalize();
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero())
        throw Error(ErrorCode::DivisionByZeroExpression, "scalar division by zero");
    Rational n = o.norm();
    Rational r = (re_ * o.re_ + im_ * o.im_) / n;
    Rational i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero())
        throw Error(ErrorCode::DivisionByZeroExpression, "inverse of zero scalar");
    Rational n = norm();
    return Scalar(re_ / n, -im_ / n);
}

int Scalar::cmp(const Scalar& a, const Scalar& b) {
    int c = ::cmp(a.re_, b.re_);
    if (c != 0) return c;
    return ::cmp(a.im_, b.im_);
}

std::string Scalar::str() const {
    if (im_ == 0) return rational_str(re_);
    std::string imag;
    if (im_ == 1)
        imag = "i";
    else if (im_ == -1)
        imag = "-i";
    else
        imag = rational_str(im_) + "*i";
    if (re_ == 0) return imag;
    std::string out = "(" + rational_str(re_);
    if (imag[0] == '-')
        out += "-" + imag.substr(1);
    else
        out += "+" + imag;
    out += ")";
    return out;
}

} // namespace korbit

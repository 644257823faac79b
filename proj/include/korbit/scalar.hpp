#pragma once

#include <gmpxx.h>

#include <string>

#include "korbit/error.hpp"

namespace korbit {

// Exact rational number. mpq_class keeps values canonical (reduced,
// positive denominator) through arithmetic.
using Rational = mpq_class;

std::string rational_str(const Rational& r);
Rational rational_gcd(const Rational& a, const Rational& b);

// Element of the Gaussian rationals Q(i). The scalar field of the whole
// kernel; no floating point anywhere.
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long n) : re_(n), im_(0) {}
    Scalar(long num, long den);
    Scalar(Rational re) : re_(std::move(re)), im_(0) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar conj() const { return Scalar(re_, -im_); }

    Scalar& operator+=(const Scalar& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const;

    // Total order for canonical sorting (not a numeric order on C).
    static int cmp(const Scalar& a, const Scalar& b);

    // Norm re^2 + im^2 (rational, >= 0).
    Rational norm() const { return re_ * re_ + im_ * im_; }

    // Canonical text: "3", "-1/2", "i", "-i", "2*i", "1/2*i", "(1+2*i)".
    std::string str() const;

private:
    Rational re_, im_;
};

} // namespace korbit

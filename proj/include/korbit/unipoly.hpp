#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "korbit/scalar.hpp"

namespace korbit {

// Dense univariate polynomial over the Gaussian rationals, coefficient of
// x^k at index k, trailing zeros trimmed.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(const Scalar& c) { return UniPoly({c}); }
    static UniPoly x() { return UniPoly({Scalar(0), Scalar(1)}); }
    // x - r
    static UniPoly linear_root(const Scalar& r) { return UniPoly({-r, Scalar(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Scalar& operator[](size_t k) const { return c_[k]; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    const Scalar& lead() const { return c_.back(); }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(const Scalar& s) const;
    UniPoly monic() const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    Scalar eval(const Scalar& x) const;
    UniPoly derivative() const;

    // Euclidean division (quotient, remainder); divisor nonzero.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
    static UniPoly gcd(const UniPoly& a, const UniPoly& b); // monic
    // g = gcd, and u with u*a = g (mod m); used for CRT inverses.
    static std::pair<UniPoly, UniPoly> half_ext_gcd(const UniPoly& a, const UniPoly& m);

    // All roots in Q(i) with multiplicities (deflation + Gaussian-divisor
    // candidates). remaining is the rootless cofactor (constant iff all roots
    // found).
    struct RootResult {
        std::vector<std::pair<Scalar, int>> roots;
        UniPoly remaining;
    };
    RootResult gaussian_roots() const;

    std::string str(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Scalar> c_;
};

} // namespace korbit

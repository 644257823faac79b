#include "korbit/unipoly.hpp"

#include <algorithm>
#include <set>

namespace korbit {

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Scalar> out(std::max(a.c_.size(), b.c_.size()));
    for (size_t k = 0; k < out.size(); ++k) {
        if (k < a.c_.size()) out[k] += a.c_[k];
        if (k < b.c_.size()) out[k] += b.c_[k];
    }
    return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    return a + b.scaled(Scalar(-1));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::scaled(const Scalar& s) const {
    if (s.is_zero()) return UniPoly();
    std::vector<Scalar> out = c_;
    for (auto& x : out) x *= s;
    return UniPoly(std::move(out));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(lead().inverse());
}

Scalar UniPoly::eval(const Scalar& x) const {
    Scalar acc;
    for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Scalar> out(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * Scalar(static_cast<long>(k));
    return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZeroExpression, "polynomial division by zero");
    std::vector<Scalar> rem = a.c_;
    std::vector<Scalar> quot;
    if (a.degree() >= b.degree()) quot.resize(static_cast<size_t>(a.degree() - b.degree()) + 1);
    Scalar inv = b.lead().inverse();
    for (int d = a.degree(); d >= b.degree(); --d) {
        Scalar q = rem[static_cast<size_t>(d)] * inv;
        if (!q.is_zero()) {
            size_t shift = static_cast<size_t>(d - b.degree());
            quot[shift] = q;
            for (size_t k = 0; k < b.c_.size(); ++k) rem[shift + k] -= q * b.c_[k];
        }
        rem.pop_back();
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly f = a, g = b;
    while (!g.is_zero()) {
        UniPoly r = divmod(f, g).second;
        f = std::move(g);
        g = std::move(r);
    }
    return f.monic();
}

std::pair<UniPoly, UniPoly> UniPoly::half_ext_gcd(const UniPoly& a, const UniPoly& m) {
    // Returns (g, u) with g = gcd(a, m) monic and u*a = g (mod m).
    UniPoly r0 = m, r1 = divmod(a, m).second;
    UniPoly u0 = UniPoly(), u1 = UniPoly::constant(Scalar(1));
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        UniPoly u2 = u0 - q * u1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.is_zero()) return {UniPoly(), UniPoly()};
    Scalar inv = r0.lead().inverse();
    return {r0.scaled(inv), divmod(u0.scaled(inv), m).second};
}

namespace {

// Positive integer divisors of |n| by trial division.
std::vector<mpz_class> integer_divisors(mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> divs;
    if (n == 0) return divs;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            mpz_class other = n / d;
            if (other != d) divs.push_back(other);
        }
    }
    return divs;
}

struct ScalarLess {
    bool operator()(const Scalar& a, const Scalar& b) const { return Scalar::cmp(a, b) < 0; }
};

// Gaussian integers g with N(g) = n (up to all unit multiples), n > 0.
std::vector<Scalar> gaussian_of_norm(const mpz_class& n) {
    std::vector<Scalar> out;
    for (mpz_class a = 0; a * a <= n; ++a) {
        mpz_class b2 = n - a * a;
        mpz_class b = sqrt(b2);
        if (b * b == b2) {
            Scalar g(Rational(a), Rational(b));
            out.push_back(g);
        }
    }
    return out;
}

} // namespace

UniPoly::RootResult UniPoly::gaussian_roots() const {
    RootResult res;
    if (is_zero() || degree() == 0) {
        res.remaining = *this;
        return res;
    }
    UniPoly f = monic();
    // Deflate roots at zero.
    int zero_mult = 0;
    while (!f.c_.empty() && f.c_.front().is_zero()) {
        f.c_.erase(f.c_.begin());
        ++zero_mult;
    }
    if (zero_mult > 0) res.roots.push_back({Scalar(0), zero_mult});

    while (f.degree() >= 1) {
        // Scale y = D*x so that g(y) is monic with Gaussian-integer
        // coefficients; roots of g in Q(i) are then Gaussian integers
        // dividing g(0).
        mpz_class D = 1;
        for (const auto& c : f.c_) {
            mpz_class l;
            mpz_lcm(l.get_mpz_t(), D.get_mpz_t(), c.re().get_den().get_mpz_t());
            mpz_lcm(D.get_mpz_t(), l.get_mpz_t(), c.im().get_den().get_mpz_t());
        }
        int n = f.degree();
        std::vector<Scalar> gc(static_cast<size_t>(n) + 1);
        mpz_class pw = 1;
        for (int k = n; k >= 0; --k) {
            gc[static_cast<size_t>(k)] = f.c_[static_cast<size_t>(k)] * Scalar(Rational(pw));
            if (k > 0) pw *= D;
        }
        UniPoly g(gc);
        // Norm of the constant term bounds candidate divisors.
        const Scalar& c0 = g[0];
        mpz_class norm_num = c0.re().get_num() * c0.re().get_num() +
                             c0.im().get_num() * c0.im().get_num();
        bool found = false;
        std::set<Scalar, ScalarLess> seen;
        for (const mpz_class& d : integer_divisors(norm_num)) {
            for (const Scalar& base : gaussian_of_norm(d)) {
                const Scalar units[4] = {Scalar(1), Scalar(-1), Scalar::i(), -Scalar::i()};
                for (const Scalar& u : units) {
                    for (const Scalar& cand0 : {base * u, base.conj() * u}) {
                        if (!seen.insert(cand0).second) continue;
                        if (g.eval(cand0).is_zero()) {
                            Scalar root = cand0 / Scalar(Rational(D));
                            int mult = 0;
                            UniPoly lin = UniPoly::linear_root(root);
                            while (true) {
                                auto [q, r] = divmod(f, lin);
                                if (!r.is_zero()) break;
                                f = q;
                                ++mult;
                            }
                            res.roots.push_back({root, mult});
                            found = true;
                        }
                        if (found) break;
                    }
                    if (found) break;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
    }
    res.remaining = f;
    return res;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        if (!first) out += " + ";
        out += c_[k].str();
        if (k >= 1) out += "*" + var;
        if (k >= 2) out += "^" + std::to_string(k);
        first = false;
    }
    return out;
}

} // namespace korbit

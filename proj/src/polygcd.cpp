#include "korbit/expression.hpp"

#include <limits>

namespace korbit {

std::optional<TermSum> TermSum::exact_divide(const TermSum& a, const TermSum& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return TermSum();
    if (b.has_exponentials()) return std::nullopt;
    if (b.is_scalar()) return a.scaled(b.scalar_value().inverse());

    const Term& blead = b.leading_term();
    const Scalar& bcoeff = b.leading_coeff();
    TermSum rem = a;
    TermSum quot;
    // Terminates: remainder expos stay within the dividend's finite expo set
    // (the divisor is exponential-free) and leading monomials strictly
    // decrease in an admissible well-order.
    while (true) {
        if (rem.is_zero()) return quot;
        const Term& rlead = rem.leading_term();
        Term qt;
        qt.expo = rlead.expo; // b is exponential-free
        bool divisible = true;
        Monomial qm = rlead.mono;
        for (const auto& [v, k] : blead.mono) {
            auto it = qm.find(v);
            if (it == qm.end() || it->second < k) {
                divisible = false;
                break;
            }
            it->second -= k;
            if (it->second == 0) qm.erase(it);
        }
        if (!divisible) return std::nullopt;
        qt.mono = std::move(qm);
        Scalar qc = rem.leading_coeff() / bcoeff;
        quot.add_term(qt, qc);
        rem = rem - b.mul_term(qt, qc);
    }
}

namespace {

// Smallest variable id occurring in any monomial.
std::optional<VarId> main_variable(const TermSum& a, const TermSum& b) {
    std::optional<VarId> best;
    auto scan = [&](const TermSum& s) {
        for (const auto& [t, c] : s.terms())
            for (const auto& [v, k] : t.mono)
                if (!best || v < *best) best = v;
    };
    scan(a);
    scan(b);
    return best;
}

// Univariate view in variable x: coefficient sums by degree (trimmed).
std::vector<TermSum> to_upoly(const TermSum& s, VarId x) {
    std::vector<TermSum> coeffs;
    for (const auto& [t, c] : s.terms()) {
        int d = 0;
        Term rest = t;
        auto it = rest.mono.find(x);
        if (it != rest.mono.end()) {
            d = it->second;
            rest.mono.erase(it);
        }
        if (static_cast<size_t>(d) >= coeffs.size()) coeffs.resize(static_cast<size_t>(d) + 1);
        coeffs[static_cast<size_t>(d)].add_term(rest, c);
    }
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    return coeffs;
}

TermSum from_upoly(const std::vector<TermSum>& coeffs, VarId x) {
    TermSum out;
    for (size_t d = 0; d < coeffs.size(); ++d) {
        if (coeffs[d].is_zero()) continue;
        Term xt;
        if (d > 0) xt.mono[x] = static_cast<int>(d);
        out = out + coeffs[d].mul_term(xt, Scalar(1));
    }
    return out;
}

TermSum upoly_content(const std::vector<TermSum>& coeffs) {
    TermSum g;
    for (const auto& c : coeffs) g = TermSum::poly_gcd(g, c);
    return g;
}

std::vector<TermSum> upoly_divide_content(const std::vector<TermSum>& coeffs, const TermSum& g) {
    if (g.is_scalar() && !g.is_zero() && g.scalar_value().is_one()) return coeffs;
    std::vector<TermSum> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        if (c.is_zero()) {
            out.push_back(c);
            continue;
        }
        auto q = TermSum::exact_divide(c, g);
        if (!q) throw Error(ErrorCode::Internal, "content does not divide coefficient");
        out.push_back(*q);
    }
    return out;
}

std::vector<TermSum> upoly_scale(const std::vector<TermSum>& coeffs, const TermSum& m) {
    std::vector<TermSum> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) out.push_back(c * m);
    return out;
}

// Pseudo-remainder of f by g (deg f >= deg g, g nonzero).
std::vector<TermSum> upoly_prem(std::vector<TermSum> f, const std::vector<TermSum>& g) {
    const TermSum& glead = g.back();
    while (f.size() >= g.size()) {
        size_t shift = f.size() - g.size();
        TermSum flead = f.back();
        // lc(g)*f - lc(f)*x^shift*g
        f = upoly_scale(f, glead);
        for (size_t k = 0; k < g.size(); ++k)
            f[k + shift] = f[k + shift] - flead * g[k];
        while (!f.empty() && f.back().is_zero()) f.pop_back();
        if (f.empty()) break;
    }
    return f;
}

} // namespace

TermSum TermSum::poly_gcd(const TermSum& a, const TermSum& b) {
    auto monic = [](const TermSum& s) {
        if (s.is_zero()) return s;
        return s.scaled(s.leading_coeff().inverse());
    };
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.has_exponentials() || b.has_exponentials())
        throw Error(ErrorCode::UnsupportedEntryClass, "poly_gcd: exponential factors present");
    if (a.is_scalar() || b.is_scalar()) return TermSum::constant(Scalar(1));

    auto mv = main_variable(a, b);
    if (!mv) return TermSum::constant(Scalar(1));
    VarId x = *mv;

    std::vector<TermSum> fa = to_upoly(a, x);
    std::vector<TermSum> fb = to_upoly(b, x);
    TermSum ca = upoly_content(fa);
    TermSum cb = upoly_content(fb);
    TermSum cg = poly_gcd(ca, cb);
    fa = upoly_divide_content(fa, ca);
    fb = upoly_divide_content(fb, cb);

    // Primitive PRS in x.
    std::vector<TermSum> f = fa.size() >= fb.size() ? fa : fb;
    std::vector<TermSum> g = fa.size() >= fb.size() ? fb : fa;
    while (true) {
        std::vector<TermSum> r = upoly_prem(f, g);
        if (r.empty()) break;
        TermSum cr = upoly_content(r);
        r = upoly_divide_content(r, cr);
        f = std::move(g);
        g = std::move(r);
    }
    TermSum result = cg * from_upoly(g, x);
    return monic(result);
}

} // namespace korbit

#include "korbit/expad.hpp"

namespace korbit {

ExprMatrix exp_ad(const ScalarMat& a, TablePtr tab, VarId t) {
    int n = static_cast<int>(a.size());
    if (n == 0) return ExprMatrix(tab, 0, 0);
    UniPoly chi = char_poly(a);
    UniPoly::RootResult roots = chi.gaussian_roots();
    if (roots.remaining.degree() > 0)
        throw Error(ErrorCode::IrrationalEigenvalues,
                    "characteristic factor without Gaussian-rational roots: " +
                        roots.remaining.str());

    // Spectral projector polynomials by CRT against (x - mu_i)^{m_i}.
    std::vector<ScalarMat> projectors;
    std::vector<Scalar> eigenvalues;
    for (const auto& [mu, mult] : roots.roots) {
        UniPoly modulus = UniPoly::constant(Scalar(1));
        for (int k = 0; k < mult; ++k) modulus = modulus * UniPoly::linear_root(mu);
        UniPoly others = UniPoly::constant(Scalar(1));
        for (const auto& [mu2, mult2] : roots.roots) {
            if (mu2 == mu) continue;
            for (int k = 0; k < mult2; ++k) others = others * UniPoly::linear_root(mu2);
        }
        UniPoly p;
        if (others.degree() == 0) {
            p = UniPoly::constant(Scalar(1));
        } else {
            auto [g, inv] = UniPoly::half_ext_gcd(others, modulus);
            if (!(g.degree() == 0))
                throw Error(ErrorCode::Internal, "projector moduli are not coprime");
            p = others * inv;
        }
        projectors.push_back(poly_at_matrix(p, a));
        eigenvalues.push_back(mu);
    }

    // Semisimple part S = sum mu_i P_i, nilpotent part N = A - S.
    ScalarMat s = smat_zero(n, n);
    for (size_t k = 0; k < projectors.size(); ++k)
        s = smat_add(s, smat_scale(projectors[k], eigenvalues[k]));
    ScalarMat nil = smat_sub(a, s);

    // exp(tN) = sum_k t^k N^k / k!
    ExprMatrix exp_nil(tab, n, n);
    {
        ScalarMat power = smat_identity(n);
        Scalar factorial(1);
        Expression tpow = Expression::constant(tab, Scalar(1));
        Expression tvar = Expression::variable(tab, t);
        for (int k = 0; k < n; ++k) {
            if (k > 0) {
                power = smat_mul(power, nil);
                factorial *= Scalar(k);
                tpow = tpow * tvar;
            }
            if (smat_is_zero(power)) break;
            Expression coeff = Expression::constant(tab, factorial.inverse()) * tpow;
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) {
                    const Scalar& v = power[static_cast<size_t>(r)][static_cast<size_t>(c)];
                    if (!v.is_zero())
                        exp_nil.at(r, c) =
                            exp_nil.at(r, c) + Expression::constant(tab, v) * coeff;
                }
        }
    }

    // exp(tS) = sum_i exp(mu_i t) P_i
    ExprMatrix exp_semi(tab, n, n);
    for (size_t k = 0; k < projectors.size(); ++k) {
        LinearForm l;
        if (!eigenvalues[k].is_zero()) l[t] = eigenvalues[k];
        Expression phase = Expression::exponential(tab, l);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                const Scalar& v = projectors[k][static_cast<size_t>(r)][static_cast<size_t>(c)];
                if (!v.is_zero())
                    exp_semi.at(r, c) = exp_semi.at(r, c) + Expression::constant(tab, v) * phase;
            }
    }

    return exp_semi * exp_nil;
}

} // namespace korbit

#pragma once

#include "korbit/exprmatrix.hpp"
#include "korbit/scalarmat.hpp"

namespace korbit {

// Exact exp(t*A) for a Gaussian-rational square matrix A whose eigenvalues
// all lie in Q(i). Jordan–Chevalley split A = S + N; exp(tS) from spectral
// projectors, exp(tN) a polynomial in t. Throws IrrationalEigenvalues with
// the offending characteristic factor otherwise.
ExprMatrix exp_ad(const ScalarMat& a, TablePtr tab, VarId t);

} // namespace korbit

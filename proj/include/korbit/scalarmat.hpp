#pragma once

#include <optional>
#include <vector>

#include "korbit/scalar.hpp"
#include "korbit/unipoly.hpp"

namespace korbit {

// Dense matrix/vector over the Gaussian rationals.
using ScalarMat = std::vector<std::vector<Scalar>>;
using ScalarVec = std::vector<Scalar>;

ScalarMat smat_zero(int rows, int cols);
ScalarMat smat_identity(int n);
ScalarMat smat_add(const ScalarMat& a, const ScalarMat& b);
ScalarMat smat_sub(const ScalarMat& a, const ScalarMat& b);
ScalarMat smat_mul(const ScalarMat& a, const ScalarMat& b);
ScalarMat smat_scale(const ScalarMat& a, const Scalar& c);
ScalarMat smat_transpose(const ScalarMat& a);
ScalarVec smat_apply(const ScalarMat& a, const ScalarVec& v);
Scalar smat_trace(const ScalarMat& a);
bool smat_is_zero(const ScalarMat& a);

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> smat_rref(ScalarMat& m);
int smat_rank(ScalarMat m);
// Basis of the right kernel (canonical from RREF).
std::vector<ScalarVec> smat_kernel(const ScalarMat& m);
// Solve a x = b; nullopt if inconsistent (returns one particular solution).
std::optional<ScalarVec> smat_solve(const ScalarMat& a, const ScalarVec& b);
// Canonical basis of the row span.
std::vector<ScalarVec> smat_span_basis(const std::vector<ScalarVec>& vecs);
bool smat_in_span(const std::vector<ScalarVec>& basis, const ScalarVec& v);

// Characteristic polynomial (monic) by Faddeev-LeVerrier.
UniPoly char_poly(const ScalarMat& a);

// Evaluate a polynomial at a matrix.
ScalarMat poly_at_matrix(const UniPoly& p, const ScalarMat& a);

} // namespace korbit

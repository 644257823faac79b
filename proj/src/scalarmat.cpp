#include "korbit/scalarmat.hpp"

namespace korbit {

ScalarMat smat_zero(int rows, int cols) {
    return ScalarMat(static_cast<size_t>(rows), ScalarVec(static_cast<size_t>(cols)));
}

ScalarMat smat_identity(int n) {
    ScalarMat m = smat_zero(n, n);
    for (int k = 0; k < n; ++k) m[static_cast<size_t>(k)][static_cast<size_t>(k)] = Scalar(1);
    return m;
}

ScalarMat smat_add(const ScalarMat& a, const ScalarMat& b) {
    ScalarMat out = a;
    for (size_t r = 0; r < a.size(); ++r)
        for (size_t c = 0; c < a[r].size(); ++c) out[r][c] += b[r][c];
    return out;
}

ScalarMat smat_sub(const ScalarMat& a, const ScalarMat& b) {
    ScalarMat out = a;
    for (size_t r = 0; r < a.size(); ++r)
        for (size_t c = 0; c < a[r].size(); ++c) out[r][c] -= b[r][c];
    return out;
}

ScalarMat smat_mul(const ScalarMat& a, const ScalarMat& b) {
    size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
    ScalarMat out = smat_zero(static_cast<int>(n), static_cast<int>(m));
    for (size_t r = 0; r < n; ++r)
        for (size_t j = 0; j < k; ++j) {
            if (a[r][j].is_zero()) continue;
            for (size_t c = 0; c < m; ++c) out[r][c] += a[r][j] * b[j][c];
        }
    return out;
}

ScalarMat smat_scale(const ScalarMat& a, const Scalar& c) {
    ScalarMat out = a;
    for (auto& row : out)
        for (auto& x : row) x *= c;
    return out;
}

ScalarMat smat_transpose(const ScalarMat& a) {
    if (a.empty()) return a;
    ScalarMat out = smat_zero(static_cast<int>(a[0].size()), static_cast<int>(a.size()));
    for (size_t r = 0; r < a.size(); ++r)
        for (size_t c = 0; c < a[r].size(); ++c) out[c][r] = a[r][c];
    return out;
}

ScalarVec smat_apply(const ScalarMat& a, const ScalarVec& v) {
    ScalarVec out(a.size());
    for (size_t r = 0; r < a.size(); ++r) {
        Scalar acc;
        for (size_t c = 0; c < v.size(); ++c) acc += a[r][c] * v[c];
        out[r] = acc;
    }
    return out;
}

Scalar smat_trace(const ScalarMat& a) {
    Scalar t;
    for (size_t k = 0; k < a.size(); ++k) t += a[k][k];
    return t;
}

bool smat_is_zero(const ScalarMat& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

std::vector<int> smat_rref(ScalarMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t lead = 0;
    for (size_t c = 0; c < cols && lead < rows; ++c) {
        size_t pr = lead;
        while (pr < rows && m[pr][c].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(m[pr], m[lead]);
        Scalar inv = m[lead][c].inverse();
        for (size_t cc = c; cc < cols; ++cc) m[lead][cc] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == lead || m[r][c].is_zero()) continue;
            Scalar f = m[r][c];
            for (size_t cc = c; cc < cols; ++cc) m[r][cc] -= f * m[lead][cc];
        }
        pivots.push_back(static_cast<int>(c));
        ++lead;
    }
    return pivots;
}

int smat_rank(ScalarMat m) {
    return static_cast<int>(smat_rref(m).size());
}

std::vector<ScalarVec> smat_kernel(const ScalarMat& m_in) {
    ScalarMat m = m_in;
    if (m.empty()) return {};
    size_t cols = m[0].size();
    std::vector<int> pivots = smat_rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<ScalarVec> basis;
    for (size_t freec = 0; freec < cols; ++freec) {
        if (is_pivot[freec]) continue;
        ScalarVec v(cols);
        v[freec] = Scalar(1);
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            v[static_cast<size_t>(pivots[pi])] = -m[pi][freec];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<ScalarVec> smat_solve(const ScalarMat& a, const ScalarVec& b) {
    if (a.size() != b.size()) throw Error(ErrorCode::Internal, "smat_solve shape mismatch");
    size_t cols = a.empty() ? 0 : a[0].size();
    ScalarMat aug = a;
    for (size_t r = 0; r < a.size(); ++r) aug[r].push_back(b[r]);
    std::vector<int> pivots = smat_rref(aug);
    for (int c : pivots)
        if (c == static_cast<int>(cols)) return std::nullopt;
    ScalarVec x(cols);
    for (size_t pi = 0; pi < pivots.size(); ++pi)
        x[static_cast<size_t>(pivots[pi])] = aug[pi][cols];
    return x;
}

std::vector<ScalarVec> smat_span_basis(const std::vector<ScalarVec>& vecs) {
    if (vecs.empty()) return {};
    ScalarMat m = vecs;
    std::vector<int> pivots = smat_rref(m);
    std::vector<ScalarVec> out;
    for (size_t r = 0; r < pivots.size(); ++r) out.push_back(m[r]);
    return out;
}

bool smat_in_span(const std::vector<ScalarVec>& basis, const ScalarVec& v) {
    if (basis.empty()) {
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }
    ScalarMat a = smat_transpose(basis);
    return smat_solve(a, v).has_value();
}

UniPoly char_poly(const ScalarMat& a) {
    int n = static_cast<int>(a.size());
    std::vector<Scalar> c(static_cast<size_t>(n) + 1);
    c[static_cast<size_t>(n)] = Scalar(1);
    ScalarMat m = smat_zero(n, n);
    for (int k = 1; k <= n; ++k) {
        // M_k = A (M_{k-1} + c_{n-k+1} I)
        ScalarMat inner = m;
        for (int d = 0; d < n; ++d)
            inner[static_cast<size_t>(d)][static_cast<size_t>(d)] += c[static_cast<size_t>(n - k + 1)];
        m = smat_mul(a, inner);
        c[static_cast<size_t>(n - k)] = Scalar(-1) * smat_trace(m) / Scalar(static_cast<long>(k));
    }
    return UniPoly(std::move(c));
}

ScalarMat poly_at_matrix(const UniPoly& p, const ScalarMat& a) {
    int n = static_cast<int>(a.size());
    ScalarMat out = smat_zero(n, n);
    for (size_t k = p.coeffs().size(); k-- > 0;) {
        out = smat_mul(out, a);
        for (int d = 0; d < n; ++d)
            out[static_cast<size_t>(d)][static_cast<size_t>(d)] += p[k];
    }
    return out;
}

} // namespace korbit

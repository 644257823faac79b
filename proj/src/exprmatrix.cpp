#include "korbit/exprmatrix.hpp"

#include <sstream>

namespace korbit {

ExprMatrix ExprMatrix::identity(TablePtr tab, int n) {
    ExprMatrix m(tab, n, n);
    for (int k = 0; k < n; ++k) m.at(k, k) = Expression::constant(tab, Scalar(1));
    return m;
}

ExprMatrix ExprMatrix::transposed() const {
    ExprMatrix out(tab_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
}

ExprMatrix operator*(const ExprMatrix& a, const ExprMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::Internal, "matrix product shape mismatch");
    ExprMatrix out(a.tab_, a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int c = 0; c < b.cols_; ++c) {
            Expression acc = Expression::zero(a.tab_);
            for (int k = 0; k < a.cols_; ++k) acc = acc + a.at(r, k) * b.at(k, c);
            out.at(r, c) = acc;
        }
    return out;
}

ExprMatrix operator+(const ExprMatrix& a, const ExprMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error(ErrorCode::Internal, "matrix sum shape mismatch");
    ExprMatrix out(a.tab_, a.rows_, a.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int c = 0; c < a.cols_; ++c) out.at(r, c) = a.at(r, c) + b.at(r, c);
    return out;
}

ExprMatrix operator-(const ExprMatrix& a, const ExprMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error(ErrorCode::Internal, "matrix difference shape mismatch");
    ExprMatrix out(a.tab_, a.rows_, a.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int c = 0; c < a.cols_; ++c) out.at(r, c) = a.at(r, c) - b.at(r, c);
    return out;
}

bool operator==(const ExprMatrix& a, const ExprMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<Expression> ExprMatrix::apply(const std::vector<Expression>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw Error(ErrorCode::Internal, "matrix apply shape mismatch");
    std::vector<Expression> out(static_cast<size_t>(rows_), Expression::zero(tab_));
    for (int r = 0; r < rows_; ++r) {
        Expression acc = Expression::zero(tab_);
        for (int c = 0; c < cols_; ++c) acc = acc + at(r, c) * v[static_cast<size_t>(c)];
        out[static_cast<size_t>(r)] = acc;
    }
    return out;
}

bool ExprMatrix::has_exponentials() const {
    for (const auto& e : data_)
        if (e.has_exponentials()) return true;
    return false;
}

Expression ExprMatrix::determinant() const {
    if (rows_ != cols_) throw Error(ErrorCode::Internal, "determinant of non-square matrix");
    int n = rows_;
    if (n == 0) return Expression::constant(tab_, Scalar(1));
    // Clear denominators row by row, track the overall factor.
    std::vector<TermSum> m(static_cast<size_t>(n) * n);
    Expression factor = Expression::constant(tab_, Scalar(1));
    for (int r = 0; r < n; ++r) {
        Expression rowden = Expression::constant(tab_, Scalar(1));
        for (int c = 0; c < n; ++c)
            rowden = rowden * Expression::from_parts(tab_, at(r, c).den(), TermSum::constant(Scalar(1)));
        factor = factor * rowden;
        for (int c = 0; c < n; ++c) {
            Expression cleared = at(r, c) * rowden;
            if (!cleared.is_polynomial())
                throw Error(ErrorCode::Internal, "denominator clearing failed");
            m[static_cast<size_t>(r) * n + c] = cleared.num();
        }
    }
    // Bareiss elimination on the polynomial matrix.
    TermSum prev = TermSum::constant(Scalar(1));
    Scalar sign(1);
    for (int k = 0; k < n - 1; ++k) {
        // Pivot: prefer the shortest nonzero entry in column k.
        int pivot = -1;
        size_t best = 0;
        for (int r = k; r < n; ++r) {
            const TermSum& e = m[static_cast<size_t>(r) * n + k];
            if (e.is_zero()) continue;
            if (pivot < 0 || e.size() < best) {
                pivot = r;
                best = e.size();
            }
        }
        if (pivot < 0) return Expression::zero(tab_);
        if (pivot != k) {
            for (int c = 0; c < n; ++c)
                std::swap(m[static_cast<size_t>(k) * n + c], m[static_cast<size_t>(pivot) * n + c]);
            sign = -sign;
        }
        const TermSum pk = m[static_cast<size_t>(k) * n + k];
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c) {
                TermSum t = m[static_cast<size_t>(r) * n + c] * pk -
                            m[static_cast<size_t>(r) * n + k] * m[static_cast<size_t>(k) * n + c];
                auto q = TermSum::exact_divide(t, prev);
                if (!q) throw Error(ErrorCode::Internal, "Bareiss division not exact");
                m[static_cast<size_t>(r) * n + c] = *q;
            }
            m[static_cast<size_t>(r) * n + k] = TermSum();
        }
        prev = pk;
    }
    Expression det = Expression::from_sum(tab_, m[static_cast<size_t>(n - 1) * n + (n - 1)]);
    return Expression::constant(tab_, sign) * det / factor;
}

std::vector<int> ExprMatrix::rref_in_place() {
    std::vector<int> pivots;
    int lead = 0;
    for (int c = 0; c < cols_ && lead < rows_; ++c) {
        // Prefer the structurally smallest nonzero pivot entry.
        int pr = -1;
        size_t best = 0;
        for (int r = lead; r < rows_; ++r) {
            const Expression& e = at(r, c);
            if (e.is_zero()) continue;
            size_t sz = e.num().size() + e.den().size();
            if (pr < 0 || sz < best) {
                pr = r;
                best = sz;
            }
        }
        if (pr < 0) continue;
        if (pr != lead)
            for (int cc = 0; cc < cols_; ++cc) std::swap(at(pr, cc), at(lead, cc));
        Expression inv = Expression::constant(tab_, Scalar(1)) / at(lead, c);
        for (int cc = c; cc < cols_; ++cc) at(lead, cc) = at(lead, cc) * inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == lead) continue;
            Expression f = at(r, c);
            if (f.is_zero()) continue;
            for (int cc = c; cc < cols_; ++cc) at(r, cc) = at(r, cc) - f * at(lead, cc);
        }
        pivots.push_back(c);
        ++lead;
    }
    return pivots;
}

int ExprMatrix::rank() const {
    ExprMatrix copy = *this;
    return static_cast<int>(copy.rref_in_place().size());
}

std::vector<std::vector<Expression>> ExprMatrix::kernel_basis() const {
    if (has_exponentials())
        throw Error(ErrorCode::UnsupportedEntryClass,
                    "kernel_basis: exponential entries are not supported");
    ExprMatrix work = *this;
    std::vector<int> pivots = work.rref_in_place();
    std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<Expression>> basis;
    for (int freec = 0; freec < cols_; ++freec) {
        if (is_pivot[static_cast<size_t>(freec)]) continue;
        std::vector<Expression> v(static_cast<size_t>(cols_), Expression::zero(tab_));
        v[static_cast<size_t>(freec)] = Expression::constant(tab_, Scalar(1));
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            v[static_cast<size_t>(pivots[pi])] = -work.at(static_cast<int>(pi), freec);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::string ExprMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (int c = 0; c < cols_; ++c) os << (c ? ", " : "") << at(r, c).to_string();
        os << "]";
    }
    os << "]";
    return os.str();
}

LinearSolution solve_linear(const ExprMatrix& A, const std::vector<Expression>& b) {
    if (static_cast<int>(b.size()) != A.rows())
        throw Error(ErrorCode::Internal, "solve_linear shape mismatch");
    if (A.has_exponentials())
        throw Error(ErrorCode::UnsupportedEntryClass,
                    "solve_linear: exponential entries are not supported");
    for (const auto& e : b)
        if (e.has_exponentials())
            throw Error(ErrorCode::UnsupportedEntryClass,
                        "solve_linear: exponential entries are not supported");
    TablePtr tab = A.table();
    ExprMatrix aug(tab, A.rows(), A.cols() + 1);
    for (int r = 0; r < A.rows(); ++r) {
        for (int c = 0; c < A.cols(); ++c) aug.at(r, c) = A.at(r, c);
        aug.at(r, A.cols()) = b[static_cast<size_t>(r)];
    }
    std::vector<int> pivots = aug.rref_in_place();
    LinearSolution sol;
    for (int c : pivots) {
        if (c == A.cols()) {
            sol.kind = LinearSolution::Kind::Inconsistent;
            return sol;
        }
    }
    std::vector<bool> is_pivot(static_cast<size_t>(A.cols()), false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    sol.particular.assign(static_cast<size_t>(A.cols()), Expression::zero(tab));
    for (size_t pi = 0; pi < pivots.size(); ++pi)
        sol.particular[static_cast<size_t>(pivots[pi])] = aug.at(static_cast<int>(pi), A.cols());
    for (int freec = 0; freec < A.cols(); ++freec) {
        if (is_pivot[static_cast<size_t>(freec)]) continue;
        std::vector<Expression> v(static_cast<size_t>(A.cols()), Expression::zero(tab));
        v[static_cast<size_t>(freec)] = Expression::constant(tab, Scalar(1));
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            v[static_cast<size_t>(pivots[pi])] = -aug.at(static_cast<int>(pi), freec);
        sol.kernel.push_back(std::move(v));
    }
    sol.kind = sol.kernel.empty() ? LinearSolution::Kind::Unique : LinearSolution::Kind::Parametric;
    return sol;
}

bool in_span(const std::vector<std::vector<Expression>>& basis, const std::vector<Expression>& v) {
    if (basis.empty()) {
        for (const auto& e : v)
            if (!e.is_zero()) return false;
        return true;
    }
    TablePtr tab = v.front().table();
    int n = static_cast<int>(v.size());
    ExprMatrix A(tab, n, static_cast<int>(basis.size()));
    for (int c = 0; c < static_cast<int>(basis.size()); ++c)
        for (int r = 0; r < n; ++r) A.at(r, c) = basis[static_cast<size_t>(c)][static_cast<size_t>(r)];
    return solve_linear(A, v).kind != LinearSolution::Kind::Inconsistent;
}

std::vector<std::vector<Expression>> span_basis(TablePtr tab,
                                                const std::vector<std::vector<Expression>>& vecs) {
    if (vecs.empty()) return {};
    int n = static_cast<int>(vecs.front().size());
    ExprMatrix m(tab, static_cast<int>(vecs.size()), n);
    for (int r = 0; r < static_cast<int>(vecs.size()); ++r)
        for (int c = 0; c < n; ++c) m.at(r, c) = vecs[static_cast<size_t>(r)][static_cast<size_t>(c)];
    std::vector<int> pivots = m.rref_in_place();
    std::vector<std::vector<Expression>> out;
    for (size_t r = 0; r < pivots.size(); ++r) {
        std::vector<Expression> v(static_cast<size_t>(n), Expression::zero(tab));
        for (int c = 0; c < n; ++c) v[static_cast<size_t>(c)] = m.at(static_cast<int>(r), c);
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace korbit

#pragma once

#include <optional>
#include <vector>

#include "korbit/expression.hpp"

namespace korbit {

// Dense matrix of Expressions.
class ExprMatrix {
public:
    ExprMatrix() : rows_(0), cols_(0) {}
    ExprMatrix(TablePtr tab, int rows, int cols)
        : tab_(std::move(tab)), rows_(rows), cols_(cols),
          data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), Expression::zero(tab_)) {}

    static ExprMatrix identity(TablePtr tab, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const TablePtr& table() const { return tab_; }

    Expression& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Expression& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    ExprMatrix transposed() const;
    friend ExprMatrix operator*(const ExprMatrix& a, const ExprMatrix& b);
    friend ExprMatrix operator+(const ExprMatrix& a, const ExprMatrix& b);
    friend ExprMatrix operator-(const ExprMatrix& a, const ExprMatrix& b);
    friend bool operator==(const ExprMatrix& a, const ExprMatrix& b);

    std::vector<Expression> apply(const std::vector<Expression>& v) const;

    bool has_exponentials() const;

    // Exact determinant (square), Bareiss fraction-free after clearing row
    // denominators.
    Expression determinant() const;

    // Exact rank over the rational-function field.
    int rank() const;

    // Basis of the right kernel; entries must be exponential-free
    // (UnsupportedEntryClass otherwise). Vectors are canonical: reduced
    // echelon with monic first nonzero entry.
    std::vector<std::vector<Expression>> kernel_basis() const;

    // Reduced row echelon form over the rational-function field; returns
    // pivot column indices.
    std::vector<int> rref_in_place();

    std::string to_string() const;

private:
    TablePtr tab_;
    int rows_, cols_;
    std::vector<Expression> data_;
};

struct LinearSolution {
    enum class Kind { Inconsistent, Unique, Parametric } kind;
    std::vector<Expression> particular;              // valid unless Inconsistent
    std::vector<std::vector<Expression>> kernel;     // basis; empty for Unique
};

// Solve A x = b exactly over the rational-function field.
LinearSolution solve_linear(const ExprMatrix& A, const std::vector<Expression>& b);

// Span membership: is v in the span of basis vectors (over the rational
// function field)? basis vectors all length n.
bool in_span(const std::vector<std::vector<Expression>>& basis, const std::vector<Expression>& v);

// Reduce a list of vectors to a canonical RREF basis of their span.
std::vector<std::vector<Expression>> span_basis(TablePtr tab,
                                                const std::vector<std::vector<Expression>>& vecs);

} // namespace korbit

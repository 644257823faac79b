#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "korbit/scalar.hpp"
#include "korbit/vartable.hpp"

namespace korbit {

// Power product of variables, exponents > 0.
using Monomial = std::map<VarId, int>;

// Linear form over variables with Scalar coefficients; zero coefficients
// are absent. Appears as the argument of exponential factors.
using LinearForm = std::map<VarId, Scalar>;

// -1 if a sorts before b, 0 equal, +1 after. Lexicographic by variable id,
// higher exponent first.
int cmp_monomial(const Monomial& a, const Monomial& b);

// Shift-invariant order on linear forms: decided by the sign of the first
// nonzero coefficient of a-b. Invariance under a common shift keeps the
// normal-form gauge of exponentials canonical.
int cmp_linear(const LinearForm& a, const LinearForm& b);

LinearForm linear_add(const LinearForm& a, const LinearForm& b);
LinearForm linear_neg(const LinearForm& a);
LinearForm linear_scale(const LinearForm& a, const Scalar& c);
std::string linear_str(const LinearForm& l, const VariableTable& tab);

struct Term {
    Monomial mono;
    LinearForm expo;
};

struct TermLess {
    bool operator()(const Term& a, const Term& b) const {
        int c = cmp_monomial(a.mono, b.mono);
        if (c != 0) return c < 0;
        return cmp_linear(a.expo, b.expo) < 0;
    }
};

// Finite sum of coefficient * monomial * exp(linear form), canonical by
// construction (like terms merged, zero coefficients erased).
class TermSum {
public:
    using Map = std::map<Term, Scalar, TermLess>;

    TermSum() = default;
    static TermSum zero() { return TermSum(); }
    static TermSum constant(const Scalar& c);
    static TermSum variable(VarId v);
    static TermSum exponential(const LinearForm& l);

    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const;
    Scalar scalar_value() const; // requires is_scalar or zero
    bool has_exponentials() const;
    size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }

    void add_term(const Term& t, const Scalar& c);

    TermSum operator-() const;
    friend TermSum operator+(const TermSum& a, const TermSum& b);
    friend TermSum operator-(const TermSum& a, const TermSum& b);
    friend TermSum operator*(const TermSum& a, const TermSum& b);
    TermSum scaled(const Scalar& c) const;
    TermSum mul_term(const Term& t, const Scalar& c) const;

    friend bool operator==(const TermSum& a, const TermSum& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const TermSum& a, const TermSum& b) { return !(a == b); }

    const Term& leading_term() const; // first in canonical order; requires nonzero
    const Scalar& leading_coeff() const;

    // Multiply every term by exp(l).
    TermSum shifted_expo(const LinearForm& l) const;

    // Componentwise minimum exponent over all terms.
    Monomial mono_content() const;
    TermSum divided_by_mono(const Monomial& m) const;

    TermSum derivative(VarId v) const;
    TermSum conjugated(const VariableTable& tab) const;

    // Exact multivariate division; nullopt if not divisible. The divisor must
    // be exponential-free.
    static std::optional<TermSum> exact_divide(const TermSum& a, const TermSum& b);

    // GCD of exponential-free sums (primitive PRS), scaled to monic leading
    // coefficient. gcd(0, b) = monic b.
    static TermSum poly_gcd(const TermSum& a, const TermSum& b);

    int total_degree() const; // max over terms of sum of exponents; -1 for zero

private:
    Map terms_;
};

// Exact rational expression over a variable table: numerator/denominator pair
// of TermSums, always in normal form. Equality of Expressions is structural
// equality of normal forms.
class Expression {
public:
    Expression() = default; // invalid until given a table; use factories
    static Expression zero(TablePtr tab);
    static Expression constant(TablePtr tab, const Scalar& c);
    static Expression integer(TablePtr tab, long n) { return constant(tab, Scalar(n)); }
    static Expression variable(TablePtr tab, VarId v);
    static Expression exponential(TablePtr tab, const LinearForm& l);
    static Expression from_parts(TablePtr tab, TermSum num, TermSum den);
    static Expression from_sum(TablePtr tab, TermSum num);

    const TablePtr& table() const { return tab_; }
    const TermSum& num() const { return num_; }
    const TermSum& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_scalar() const { return num_.is_scalar() && den_.is_scalar() || is_zero(); }
    Scalar scalar_value() const;
    bool is_polynomial() const { return den_.is_scalar(); }
    bool has_exponentials() const { return num_.has_exponentials() || den_.has_exponentials(); }
    bool is_one() const;

    Expression operator-() const;
    friend Expression operator+(const Expression& a, const Expression& b);
    friend Expression operator-(const Expression& a, const Expression& b);
    friend Expression operator*(const Expression& a, const Expression& b);
    friend Expression operator/(const Expression& a, const Expression& b);
    Expression& operator+=(const Expression& o) { return *this = *this + o; }
    Expression& operator-=(const Expression& o) { return *this = *this - o; }
    Expression& operator*=(const Expression& o) { return *this = *this * o; }
    Expression& operator/=(const Expression& o) { return *this = *this / o; }

    Expression pow(int k) const;

    friend bool operator==(const Expression& a, const Expression& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Expression& a, const Expression& b) { return !(a == b); }
    // Deterministic order for use as map key.
    friend bool operator<(const Expression& a, const Expression& b) {
        return a.to_string() < b.to_string();
    }

    Expression differentiate(VarId v) const;
    Expression substitute(const std::map<VarId, Expression>& bindings) const;
    Expression conjugate() const;

    // Exact evaluation at a Scalar point; every variable that occurs must be
    // bound, and exponential factors must cancel (zero exponent) after
    // substitution.
    Scalar eval(const std::map<VarId, Scalar>& point) const;

    // Does variable v occur anywhere (monomials or exponents)?
    bool depends_on(VarId v) const;

    std::string to_string() const;

private:
    void normalize();
    TablePtr tab_;
    TermSum num_, den_; // den is 1 for the zero expression
};

// Split an expression as a polynomial in the selected variables: monomial in
// the selected set -> coefficient expression (free of selected variables).
// The denominator must not involve selected variables.
std::map<Monomial, Expression> collect(const Expression& e,
                                        const std::function<bool(VarId)>& selected);

// Parse canonical expression text (rationals, i, variable names, + - * / ^,
// parentheses, exp(...)).
Expression parse_expression(TablePtr tab, const std::string& text);

} // namespace korbit

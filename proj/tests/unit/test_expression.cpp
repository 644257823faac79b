#include <doctest.h>

#include <random>

#include "korbit/expression.hpp"

using namespace korbit;

namespace {

struct Ctx {
    TablePtr tab;
    VarId q, p, f1, f2, f3, f6, j, hbar;
    Ctx() {
        tab = std::make_shared<VariableTable>();
        q = tab->add("q", VarKind::Coordinate);
        p = tab->add("p", VarKind::Momentum);
        f1 = tab->add("f1", VarKind::Coalgebra);
        f2 = tab->add("f2", VarKind::Coalgebra);
        f3 = tab->add("f3", VarKind::Coalgebra);
        f6 = tab->add("f6", VarKind::Coalgebra);
        j = tab->add("j", VarKind::OrbitParam);
        hbar = tab->add("hbar", VarKind::QuantumConst);
    }
    Expression parse(const std::string& s) const { return parse_expression(tab, s); }
    Expression var(VarId v) const { return Expression::variable(tab, v); }
    Expression c(long n) const { return Expression::integer(tab, n); }
};

} // namespace

TEST_CASE("scalar arithmetic is exact Gaussian rational") {
    Scalar a(1, 2);
    Scalar b = Scalar::i();
    Scalar c = (a + b) * (a - b); // 1/4 + 1
    CHECK(c == Scalar(5, 4));
    CHECK((b * b) == Scalar(-1));
    CHECK(Scalar(3).inverse() == Scalar(1, 3));
    CHECK((Scalar(1) / b) == -b);
    CHECK(Scalar(5, 4).str() == "5/4");
    CHECK((-b).str() == "-i");
    CHECK((Scalar(Rational(1), Rational(2))).str() == "(1+2*i)");
}

TEST_CASE("exponential factors merge and cancel") {
    Ctx x;
    Expression eq = x.parse("exp(q)");
    Expression enq = x.parse("exp(-q)");
    CHECK(eq * enq == x.c(1));
    CHECK((eq * eq) == x.parse("exp(2*q)"));
    CHECK(eq.to_string() == "exp(q)");
}

TEST_CASE("like terms combine") {
    Ctx x;
    Expression e = x.var(x.j) * x.var(x.q) + x.var(x.q) * x.var(x.j);
    CHECK(e == x.c(2) * x.var(x.q) * x.var(x.j));
    CHECK(e.to_string() == "2*q*j");
}

TEST_CASE("rational normal form cancels common polynomial factors") {
    Ctx x;
    Expression e = (x.var(x.q) * x.var(x.q) - x.c(1)) / (x.var(x.q) - x.c(1));
    CHECK(e == x.var(x.q) + x.c(1));
    // oracle: expand (q+1)(q-1) and compare
    CHECK((x.var(x.q) + x.c(1)) * (x.var(x.q) - x.c(1)) == x.var(x.q).pow(2) - x.c(1));
}

TEST_CASE("normal form is idempotent under reconstruction") {
    Ctx x;
    Expression e = x.parse("(q^2 - 1)/(q - 1) + exp(q)*exp(-q)*j");
    Expression rebuilt = Expression::from_parts(x.tab, e.num(), e.den());
    CHECK(rebuilt == e);
}

TEST_CASE("differentiate: exponential, paper gradient, quotient rule") {
    Ctx x;
    CHECK(x.parse("exp(2*q)*p").differentiate(x.q) == x.parse("2*exp(2*q)*p"));
    // d/df1 (f1^2 + f2 f3) =ения 2 f1
    CHECK(x.parse("f1^2 + f2*f3").differentiate(x.f1) == x.parse("2*f1"));
    CHECK(x.parse("1/q").differentiate(x.q) == x.parse("-1/q^2"));
    CHECK(x.parse("1/q").differentiate(x.q).to_string() == "(-1)/(q^2)");
}

TEST_CASE("mixed partials commute on random expressions") {
    Ctx x;
    std::mt19937_64 rng(7);
    std::vector<Expression> pool = {x.var(x.q), x.var(x.p), x.var(x.j), x.parse("exp(q)"),
                                    x.parse("exp(-2*q)"), x.c(3), x.parse("1/(j+1)")};
    for (int iter = 0; iter < 40; ++iter) {
        Expression e = x.c(1);
        for (int k = 0; k < 5; ++k) {
            Expression pick = pool[rng() % pool.size()];
            switch (rng() % 3) {
            case 0: e = e + pick; break;
            case 1: e = e * pick; break;
            default: e = e - pick; break;
            }
        }
        CHECK(e.differentiate(x.q).differentiate(x.p) == e.differentiate(x.p).differentiate(x.q));
    }
}

TEST_CASE("substitute: Example 4 composed with the Example 3 Casimir") {
    Ctx x;
    Expression casimir = x.parse("f1^2 + f2*f3");
    std::map<VarId, Expression> bind = {
        {x.f1, x.parse("p")},
        {x.f2, x.parse("exp(q)*(-p + j)")},
        {x.f3, x.parse("exp(-q)*(p + j)")},
    };
    CHECK(casimir.substitute(bind) == x.parse("j^2"));
}

TEST_CASE("substitute: identity and reciprocal") {
    Ctx x;
    Expression e = x.parse("f1^2 + f2*f3");
    CHECK(e.substitute({}) == e);
    Expression r = x.c(1) / x.var(x.f6);
    CHECK(r.substitute({{x.f6, x.var(x.j)}}) == x.parse("1/j"));
}

TEST_CASE("substitute reports identically vanishing denominators") {
    Ctx x;
    Expression r = x.c(1) / (x.var(x.f6) - x.var(x.j));
    CHECK_THROWS_AS(r.substitute({{x.f6, x.var(x.j)}}), Error);
}

TEST_CASE("conjugate fixes real variables and flips i") {
    Ctx x;
    Expression e = Expression::constant(x.tab, Scalar::i()) * x.var(x.j) * x.var(x.hbar);
    CHECK(e.conjugate() == -e);
    Expression k = x.parse("j^2 + hbar^2/4");
    CHECK(k.conjugate() == k);
}

TEST_CASE("conjugate rejects complex-declared variables") {
    Ctx x;
    x.tab->set_reality(x.q, false);
    Expression e = x.parse("exp(q)");
    CHECK_THROWS_AS(e.conjugate(), Error);
    try {
        e.conjugate();
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::ComplexVariablePresent);
    }
}

TEST_CASE("normal form decides equality for permuted and reassociated builds") {
    Ctx x;
    std::mt19937_64 rng(20240501);
    std::vector<Expression> atoms = {x.var(x.q),  x.var(x.p), x.var(x.f1), x.var(x.j),
                                     x.parse("exp(q)"), x.c(2),     x.c(-3),
                                     x.parse("1/(q+2)")};
    for (int iter = 0; iter < 1000; ++iter) {
        // Build a random multiset of operands, then fold it in two random
        // orders with a commutative operation.
        bool use_mul = rng() % 2;
        size_t count = 2 + rng() % 4;
        std::vector<Expression> ops;
        for (size_t k = 0; k < count; ++k) ops.push_back(atoms[rng() % atoms.size()]);
        auto fold = [&](std::vector<Expression> v, std::mt19937_64& r) {
            while (v.size() > 1) {
                size_t a = r() % v.size();
                size_t b = r() % (v.size() - 1);
                if (b >= a) ++b;
                Expression combined = use_mul ? v[a] * v[b] : v[a] + v[b];
                if (a > b) std::swap(a, b);
                v.erase(v.begin() + static_cast<long>(b));
                v[a] = combined;
            }
            return v[0];
        };
        std::mt19937_64 r1(rng()), r2(rng());
        Expression e1 = fold(ops, r1);
        Expression e2 = fold(ops, r2);
        CHECK(e1 == e2);
        CHECK(e1.to_string() == e2.to_string());
    }
}

TEST_CASE("poly gcd handles multivariate common factors") {
    Ctx x;
    Expression a = x.parse("(q + j)*(p - 2)");
    Expression b = x.parse("(q + j)*(p + 2)");
    Expression ratio = a / b;
    CHECK(ratio == x.parse("(p - 2)/(p + 2)"));
    Expression self = a / a;
    CHECK(self == x.c(1));
}

TEST_CASE("eval is exact and guards exponentials") {
    Ctx x;
    Expression e = x.parse("(f1^2 + f2*f3)/f6");
    std::map<VarId, Scalar> pt = {{x.f1, Scalar(2)}, {x.f2, Scalar(3)}, {x.f3, Scalar(1, 3)},
                                  {x.f6, Scalar(5)}};
    CHECK(e.eval(pt) == Scalar(1));
    Expression bad = x.parse("exp(q)");
    CHECK_THROWS_AS(bad.eval({{x.q, Scalar(1)}}), Error);
    CHECK(bad.eval({{x.q, Scalar(0)}}) == Scalar(1));
}

TEST_CASE("collect splits off momentum monomials") {
    Ctx x;
    Expression f = x.parse("exp(q)*(-p + j) + p^2/4");
    auto parts = collect(f, [&](VarId v) { return v == x.p; });
    REQUIRE(parts.size() == 3);
    Monomial p1{{x.p, 1}}, p2{{x.p, 2}};
    CHECK(parts.at(Monomial{}) == x.parse("exp(q)*j"));
    CHECK(parts.at(p1) == x.parse("-exp(q)"));
    CHECK(parts.at(p2) == x.parse("1/4"));
}

TEST_CASE("canonical serialization of the Example 4 transition") {
    Ctx x;
    Expression f2 = x.parse("exp(q)*(-p + j)");
    CHECK(f2.to_string() == "-p*exp(q) + j*exp(q)");
    Expression f3 = x.parse("exp(-q)*(p + j)");
    CHECK(f3.to_string() == "p*exp(-q) + j*exp(-q)");
}

#include "korbit/expression.hpp"

#include <algorithm>
#include <sstream>

namespace korbit {

int cmp_monomial(const Monomial& a, const Monomial& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        VarId va = (ia != a.end()) ? ia->first : std::numeric_limits<VarId>::max();
        VarId vb = (ib != b.end()) ? ib->first : std::numeric_limits<VarId>::max();
        int ea = 0, eb = 0;
        if (va <= vb) ea = ia->second;
        if (vb <= va) eb = ib->second;
        if (va < vb) eb = 0;
        if (vb < va) ea = 0;
        VarId v = std::min(va, vb);
        (void)v;
        if (ea != eb) return ea > eb ? -1 : 1;
        if (va <= vb) ++ia;
        if (vb <= va) ++ib;
    }
    return 0;
}

int cmp_linear(const LinearForm& a, const LinearForm& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        VarId va = (ia != a.end()) ? ia->first : std::numeric_limits<VarId>::max();
        VarId vb = (ib != b.end()) ? ib->first : std::numeric_limits<VarId>::max();
        Scalar ca, cb;
        if (va <= vb) ca = ia->second;
        if (vb <= va) cb = ib->second;
        if (va < vb) cb = Scalar();
        if (vb < va) ca = Scalar();
        Scalar d = ca - cb;
        if (!d.is_zero()) return Scalar::cmp(d, Scalar()) > 0 ? -1 : 1;
        if (va <= vb) ++ia;
        if (vb <= va) ++ib;
    }
    return 0;
}

LinearForm linear_add(const LinearForm& a, const LinearForm& b) {
    LinearForm out = a;
    for (const auto& [v, c] : b) {
        auto it = out.find(v);
        if (it == out.end()) {
            out[v] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

LinearForm linear_neg(const LinearForm& a) {
    LinearForm out;
    for (const auto& [v, c] : a) out[v] = -c;
    return out;
}

LinearForm linear_scale(const LinearForm& a, const Scalar& c) {
    LinearForm out;
    if (c.is_zero()) return out;
    for (const auto& [v, k] : a) out[v] = k * c;
    return out;
}

std::string linear_str(const LinearForm& l, const VariableTable& tab) {
    if (l.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [v, c] : l) {
        bool neg = c.re() < 0 || (c.re() == 0 && c.im() < 0);
        Scalar mag = neg ? -c : c;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (!mag.is_one()) out += mag.str() + "*";
        out += tab.name(v);
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// TermSum

TermSum TermSum::constant(const Scalar& c) {
    TermSum s;
    if (!c.is_zero()) s.terms_[Term{}] = c;
    return s;
}

TermSum TermSum::variable(VarId v) {
    TermSum s;
    Term t;
    t.mono[v] = 1;
    s.terms_[t] = Scalar(1);
    return s;
}

TermSum TermSum::exponential(const LinearForm& l) {
    TermSum s;
    Term t;
    t.expo = l;
    s.terms_[t] = Scalar(1);
    return s;
}

bool TermSum::is_scalar() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const Term& t = terms_.begin()->first;
    return t.mono.empty() && t.expo.empty();
}

Scalar TermSum::scalar_value() const {
    if (terms_.empty()) return Scalar();
    return terms_.begin()->second;
}

bool TermSum::has_exponentials() const {
    for (const auto& [t, c] : terms_)
        if (!t.expo.empty()) return true;
    return false;
}

void TermSum::add_term(const Term& t, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(t);
    if (it == terms_.end()) {
        terms_[t] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TermSum TermSum::operator-() const {
    TermSum out;
    for (const auto& [t, c] : terms_) out.terms_[t] = -c;
    return out;
}

TermSum operator+(const TermSum& a, const TermSum& b) {
    TermSum out = a;
    for (const auto& [t, c] : b.terms_) out.add_term(t, c);
    return out;
}

TermSum operator-(const TermSum& a, const TermSum& b) {
    TermSum out = a;
    for (const auto& [t, c] : b.terms_) out.add_term(t, -c);
    return out;
}

static Term term_mul(const Term& a, const Term& b) {
    Term out;
    out.mono = a.mono;
    for (const auto& [v, k] : b.mono) {
        auto it = out.mono.find(v);
        if (it == out.mono.end())
            out.mono[v] = k;
        else {
            it->second += k;
            if (it->second == 0) out.mono.erase(it);
        }
    }
    out.expo = linear_add(a.expo, b.expo);
    return out;
}

TermSum operator*(const TermSum& a, const TermSum& b) {
    TermSum out;
    for (const auto& [ta, ca] : a.terms_)
        for (const auto& [tb, cb] : b.terms_) out.add_term(term_mul(ta, tb), ca * cb);
    return out;
}

TermSum TermSum::scaled(const Scalar& c) const {
    TermSum out;
    if (c.is_zero()) return out;
    for (const auto& [t, k] : terms_) out.terms_[t] = k * c;
    return out;
}

TermSum TermSum::mul_term(const Term& t, const Scalar& c) const {
    TermSum out;
    if (c.is_zero()) return out;
    for (const auto& [tt, k] : terms_) out.add_term(term_mul(tt, t), k * c);
    return out;
}

const Term& TermSum::leading_term() const {
    return terms_.begin()->first;
}

const Scalar& TermSum::leading_coeff() const {
    return terms_.begin()->second;
}

TermSum TermSum::shifted_expo(const LinearForm& l) const {
    if (l.empty()) return *this;
    TermSum out;
    for (const auto& [t, c] : terms_) {
        Term nt;
        nt.mono = t.mono;
        nt.expo = linear_add(t.expo, l);
        out.terms_[nt] = c;
    }
    return out;
}

Monomial TermSum::mono_content() const {
    if (terms_.empty()) return {};
    Monomial content = terms_.begin()->first.mono;
    for (const auto& [t, c] : terms_) {
        if (content.empty()) break;
        Monomial next;
        for (const auto& [v, k] : content) {
            auto it = t.mono.find(v);
            if (it != t.mono.end()) next[v] = std::min(k, it->second);
        }
        content = std::move(next);
    }
    return content;
}

TermSum TermSum::divided_by_mono(const Monomial& m) const {
    if (m.empty()) return *this;
    TermSum out;
    for (const auto& [t, c] : terms_) {
        Term nt;
        nt.expo = t.expo;
        nt.mono = t.mono;
        for (const auto& [v, k] : m) {
            auto it = nt.mono.find(v);
            if (it == nt.mono.end() || it->second < k)
                throw Error(ErrorCode::Internal, "monomial content division failed");
            it->second -= k;
            if (it->second == 0) nt.mono.erase(it);
        }
        out.terms_[nt] = c;
    }
    return out;
}

TermSum TermSum::derivative(VarId v) const {
    TermSum out;
    for (const auto& [t, c] : terms_) {
        auto it = t.mono.find(v);
        if (it != t.mono.end()) {
            Term nt = t;
            int k = it->second;
            if (k == 1)
                nt.mono.erase(v);
            else
                nt.mono[v] = k - 1;
            out.add_term(nt, c * Scalar(k));
        }
        auto ie = t.expo.find(v);
        if (ie != t.expo.end()) out.add_term(t, c * ie->second);
    }
    return out;
}

TermSum TermSum::conjugated(const VariableTable& tab) const {
    TermSum out;
    for (const auto& [t, c] : terms_) {
        for (const auto& [v, k] : t.mono)
            if (!tab.is_real(v))
                throw Error(ErrorCode::ComplexVariablePresent,
                            "cannot conjugate: variable '" + tab.name(v) + "' is complex");
        Term nt;
        nt.mono = t.mono;
        for (const auto& [v, k] : t.expo) {
            if (!tab.is_real(v))
                throw Error(ErrorCode::ComplexVariablePresent,
                            "cannot conjugate: variable '" + tab.name(v) + "' is complex");
            nt.expo[v] = k.conj();
        }
        out.add_term(nt, c.conj());
    }
    return out;
}

int TermSum::total_degree() const {
    int deg = -1;
    for (const auto& [t, c] : terms_) {
        int d = 0;
        for (const auto& [v, k] : t.mono) d += k;
        deg = std::max(deg, d);
    }
    return deg;
}

// ---------------------------------------------------------------------------
// Expression

Expression Expression::zero(TablePtr tab) {
    Expression e;
    e.tab_ = std::move(tab);
    e.den_ = TermSum::constant(Scalar(1));
    return e;
}

Expression Expression::constant(TablePtr tab, const Scalar& c) {
    Expression e = zero(std::move(tab));
    e.num_ = TermSum::constant(c);
    return e;
}

Expression Expression::variable(TablePtr tab, VarId v) {
    if (v < 0 || v >= tab->size())
        throw Error(ErrorCode::UnknownVariable, "variable id out of range");
    Expression e = zero(std::move(tab));
    e.num_ = TermSum::variable(v);
    return e;
}

Expression Expression::exponential(TablePtr tab, const LinearForm& l) {
    Expression e = zero(std::move(tab));
    e.num_ = TermSum::exponential(l);
    return e;
}

Expression Expression::from_parts(TablePtr tab, TermSum num, TermSum den) {
    Expression e;
    e.tab_ = std::move(tab);
    e.num_ = std::move(num);
    e.den_ = std::move(den);
    e.normalize();
    return e;
}

Expression Expression::from_sum(TablePtr tab, TermSum num) {
    return from_parts(std::move(tab), std::move(num), TermSum::constant(Scalar(1)));
}

Scalar Expression::scalar_value() const {
    if (is_zero()) return Scalar();
    if (!is_scalar()) throw Error(ErrorCode::Internal, "expression is not a scalar");
    return num_.scalar_value() / den_.scalar_value();
}

bool Expression::is_one() const {
    return num_.is_scalar() && !num_.is_zero() && den_.is_scalar() &&
           num_.scalar_value() == den_.scalar_value();
}

void Expression::normalize() {
    if (den_.is_zero())
        throw Error(ErrorCode::DivisionByZeroExpression, "denominator is identically zero");
    if (num_.is_zero()) {
        den_ = TermSum::constant(Scalar(1));
        return;
    }
    // Exponential gauge: make the leading denominator term exponential-free.
    {
        LinearForm l0 = den_.leading_term().expo;
        if (!l0.empty()) {
            LinearForm neg = linear_neg(l0);
            num_ = num_.shifted_expo(neg);
            den_ = den_.shifted_expo(neg);
        }
    }
    // Cancel the common monomial content.
    {
        Monomial gn = num_.mono_content();
        Monomial gd = den_.mono_content();
        Monomial g;
        for (const auto& [v, k] : gn) {
            auto it = gd.find(v);
            if (it != gd.end()) g[v] = std::min(k, it->second);
        }
        if (!g.empty()) {
            num_ = num_.divided_by_mono(g);
            den_ = den_.divided_by_mono(g);
        }
    }
    // Polynomial cancellation.
    if (!den_.is_scalar()) {
        if (!num_.has_exponentials() && !den_.has_exponentials()) {
            TermSum g = TermSum::poly_gcd(num_, den_);
            if (!g.is_scalar()) {
                auto qn = TermSum::exact_divide(num_, g);
                auto qd = TermSum::exact_divide(den_, g);
                if (!qn || !qd)
                    throw Error(ErrorCode::Internal, "gcd does not divide its arguments");
                num_ = *qn;
                den_ = *qd;
            }
        } else if (!den_.has_exponentials()) {
            if (auto q = TermSum::exact_divide(num_, den_)) {
                num_ = *q;
                den_ = TermSum::constant(Scalar(1));
            }
        }
        // Re-gauge in case cancellation exposed a new leading term.
        LinearForm l0 = den_.leading_term().expo;
        if (!l0.empty()) {
            LinearForm neg = linear_neg(l0);
            num_ = num_.shifted_expo(neg);
            den_ = den_.shifted_expo(neg);
        }
    }
    // Monic denominator.
    Scalar lead = den_.leading_coeff();
    if (!lead.is_one()) {
        Scalar inv = lead.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

static void check_same_table(const Expression& a, const Expression& b) {
    if (a.table() != b.table())
        throw Error(ErrorCode::Internal, "expressions belong to different variable tables");
}

Expression Expression::operator-() const {
    Expression e;
    e.tab_ = tab_;
    e.num_ = -num_;
    e.den_ = den_;
    return e;
}

Expression operator+(const Expression& a, const Expression& b) {
    check_same_table(a, b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return Expression::from_parts(a.tab_, a.num_ + b.num_, a.den_);
    return Expression::from_parts(a.tab_, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Expression operator-(const Expression& a, const Expression& b) {
    return a + (-b);
}

Expression operator*(const Expression& a, const Expression& b) {
    check_same_table(a, b);
    if (a.is_zero() || b.is_zero()) return Expression::zero(a.tab_);
    return Expression::from_parts(a.tab_, a.num_ * b.num_, a.den_ * b.den_);
}

Expression operator/(const Expression& a, const Expression& b) {
    check_same_table(a, b);
    if (b.is_zero())
        throw Error(ErrorCode::DivisionByZeroExpression, "division by zero expression");
    if (a.is_zero()) return a;
    return Expression::from_parts(a.tab_, a.num_ * b.den_, a.den_ * b.num_);
}

Expression Expression::pow(int k) const {
    if (k == 0) return Expression::constant(tab_, Scalar(1));
    bool inv = k < 0;
    if (inv) k = -k;
    Expression acc = *this;
    Expression out = Expression::constant(tab_, Scalar(1));
    while (k > 0) {
        if (k & 1) out = out * acc;
        k >>= 1;
        if (k) acc = acc * acc;
    }
    if (inv) return Expression::constant(tab_, Scalar(1)) / out;
    return out;
}

Expression Expression::differentiate(VarId v) const {
    if (v < 0 || v >= tab_->size())
        throw Error(ErrorCode::UnknownVariable, "differentiate: variable id out of range");
    TermSum dn = num_.derivative(v);
    TermSum dd = den_.derivative(v);
    if (dd.is_zero()) return Expression::from_parts(tab_, std::move(dn), den_);
    return Expression::from_parts(tab_, dn * den_ - num_ * dd, den_ * den_);
}

static Expression substitute_sum(const TermSum& s, const TablePtr& tab,
                                 const std::map<VarId, Expression>& bindings) {
    Expression acc = Expression::zero(tab);
    for (const auto& [t, c] : s.terms()) {
        Expression piece = Expression::constant(tab, c);
        Term residual; // unbound part stays a plain term
        for (const auto& [v, k] : t.mono) {
            auto it = bindings.find(v);
            if (it == bindings.end())
                residual.mono[v] = k;
            else
                piece = piece * it->second.pow(k);
        }
        LinearForm expo_acc;
        for (const auto& [v, c2] : t.expo) {
            auto it = bindings.find(v);
            if (it == bindings.end()) {
                expo_acc = linear_add(expo_acc, LinearForm{{v, c2}});
                continue;
            }
            const Expression& b = it->second;
            // Exponent substitution must stay a linear form with no constant.
            if (!b.is_polynomial() || b.num().has_exponentials())
                throw Error(ErrorCode::UnsupportedEntryClass,
                            "substitution into an exponent requires a linear form");
            LinearForm sub;
            for (const auto& [bt, bc] : b.num().terms()) {
                if (bt.mono.empty())
                    throw Error(ErrorCode::UnsupportedEntryClass,
                                "substitution into an exponent requires zero constant part");
                if (bt.mono.size() != 1 || bt.mono.begin()->second != 1)
                    throw Error(ErrorCode::UnsupportedEntryClass,
                                "substitution into an exponent requires a linear form");
                sub[bt.mono.begin()->first] = bc;
            }
            expo_acc = linear_add(expo_acc, linear_scale(sub, c2));
        }
        residual.expo = expo_acc;
        TermSum residual_sum;
        residual_sum.add_term(residual, Scalar(1));
        piece = piece * Expression::from_sum(tab, residual_sum);
        acc = acc + piece;
    }
    return acc;
}

Expression Expression::substitute(const std::map<VarId, Expression>& bindings) const {
    for (const auto& [v, e] : bindings) {
        if (v < 0 || v >= tab_->size())
            throw Error(ErrorCode::UnknownVariable, "substitute: variable id out of range");
        check_same_table(*this, e);
    }
    Expression n = substitute_sum(num_, tab_, bindings);
    Expression d = substitute_sum(den_, tab_, bindings);
    if (d.is_zero())
        throw Error(ErrorCode::DivisionByZeroExpression,
                    "denominator vanishes identically after substitution");
    return n / d;
}

Expression Expression::conjugate() const {
    return Expression::from_parts(tab_, num_.conjugated(*tab_), den_.conjugated(*tab_));
}

Scalar Expression::eval(const std::map<VarId, Scalar>& point) const {
    auto eval_sum = [&](const TermSum& s) {
        Scalar acc;
        for (const auto& [t, c] : s.terms()) {
            Scalar val = c;
            for (const auto& [v, k] : t.mono) {
                auto it = point.find(v);
                if (it == point.end())
                    throw Error(ErrorCode::UnknownVariable,
                                "eval: no value for variable '" + tab_->name(v) + "'");
                Scalar base = it->second;
                for (int n = 0; n < k; ++n) val *= base;
            }
            Scalar expo_val;
            for (const auto& [v, c2] : t.expo) {
                auto it = point.find(v);
                if (it == point.end())
                    throw Error(ErrorCode::UnknownVariable,
                                "eval: no value for variable '" + tab_->name(v) + "'");
                expo_val += c2 * it->second;
            }
            if (!expo_val.is_zero())
                throw Error(ErrorCode::UnsupportedEntryClass,
                            "eval: exponential factor with nonzero exponent is irrational");
            acc += val;
        }
        return acc;
    };
    Scalar d = eval_sum(den_);
    if (d.is_zero())
        throw Error(ErrorCode::DivisionByZeroExpression, "eval: denominator vanishes at point");
    return eval_sum(num_) / d;
}

bool Expression::depends_on(VarId v) const {
    auto in_sum = [&](const TermSum& s) {
        for (const auto& [t, c] : s.terms()) {
            if (t.mono.count(v)) return true;
            if (t.expo.count(v)) return true;
        }
        return false;
    };
    return in_sum(num_) || in_sum(den_);
}

static std::string term_body_str(const Term& t, const Scalar& mag, const VariableTable& tab) {
    std::vector<std::string> pieces;
    if (!mag.is_one() || (t.mono.empty() && t.expo.empty())) pieces.push_back(mag.str());
    for (const auto& [v, k] : t.mono) {
        std::string p = tab.name(v);
        if (k != 1) p += "^" + std::to_string(k);
        pieces.push_back(p);
    }
    if (!t.expo.empty()) pieces.push_back("exp(" + linear_str(t.expo, tab) + ")");
    std::string out;
    for (size_t n = 0; n < pieces.size(); ++n) {
        if (n) out += "*";
        out += pieces[n];
    }
    return out;
}

static std::string sum_str(const TermSum& s, const VariableTable& tab) {
    if (s.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [t, c] : s.terms()) {
        bool neg = c.re() < 0 || (c.re() == 0 && c.im() < 0);
        Scalar mag = neg ? -c : c;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        out += term_body_str(t, mag, tab);
        first = false;
    }
    return out;
}

std::string Expression::to_string() const {
    if (is_zero()) return "0";
    std::string n = sum_str(num_, *tab_);
    if (den_.is_scalar() && den_.scalar_value().is_one()) return n;
    std::string d = sum_str(den_, *tab_);
    return "(" + n + ")/(" + d + ")";
}

std::map<Monomial, Expression> collect(const Expression& e,
                                        const std::function<bool(VarId)>& selected) {
    const TablePtr& tab = e.table();
    for (const auto& [t, c] : e.den().terms()) {
        for (const auto& [v, k] : t.mono)
            if (selected(v))
                throw Error(ErrorCode::UnsupportedEntryClass,
                            "collect: denominator depends on a selected variable");
        for (const auto& [v, k] : t.expo)
            if (selected(v))
                throw Error(ErrorCode::UnsupportedEntryClass,
                            "collect: denominator exponential depends on a selected variable");
    }
    std::map<Monomial, TermSum> buckets;
    for (const auto& [t, c] : e.num().terms()) {
        for (const auto& [v, k] : t.expo)
            if (selected(v))
                throw Error(ErrorCode::UnsupportedEntryClass,
                            "collect: exponential depends on a selected variable");
        Monomial key;
        Term rest;
        rest.expo = t.expo;
        for (const auto& [v, k] : t.mono) {
            if (selected(v))
                key[v] = k;
            else
                rest.mono[v] = k;
        }
        buckets[key].add_term(rest, c);
    }
    std::map<Monomial, Expression> out;
    for (auto& [key, sum] : buckets)
        out.emplace(key, Expression::from_parts(tab, std::move(sum), e.den()));
    return out;
}

} // namespace korbit

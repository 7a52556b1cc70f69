#include "spechtkl/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace skl {

LaurentPoly LaurentPoly::monomial(const Integer& c, int e) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
}

int LaurentPoly::min_exp() const {
    if (terms_.empty()) throw Error("min_exp of zero polynomial");
    return terms_.front().exp;
}

int LaurentPoly::max_exp() const {
    if (terms_.empty()) throw Error("max_exp of zero polynomial");
    return terms_.back().exp;
}

Integer LaurentPoly::coeff(int e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, int x) { return t.exp < x; });
    if (it != terms_.end() && it->exp == e) return it->coeff;
    return Integer(0);
}

void LaurentPoly::add_term(int e, const Integer& c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, int x) { return t.exp < x; });
    if (it != terms_.end() && it->exp == e) {
        it->coeff += c;
        if (it->coeff == 0) terms_.erase(it);
    } else {
        terms_.insert(it, Term{e, c});
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (this == &o) {
        for (auto& t : terms_) t.coeff *= 2;
        return *this;
    }
    for (const Term& t : o.terms_) add_term(t.exp, t.coeff);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (this == &o) {
        terms_.clear();
        return *this;
    }
    for (const Term& t : o.terms_) add_term(t.exp, -t.coeff);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = (*this) * o;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.exp += k;
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        r.terms_.push_back(Term{-it->exp, it->coeff});
    return r;
}

Integer LaurentPoly::eval_at_one() const {
    Integer s = 0;
    for (const Term& t : terms_) s += t.coeff;
    return s;
}

bool LaurentPoly::in_vzv() const { return terms_.empty() || terms_.front().exp >= 1; }

bool LaurentPoly::in_zv() const { return terms_.empty() || terms_.front().exp >= 0; }

bool LaurentPoly::nonneg_coeffs() const {
    for (const Term& t : terms_)
        if (t.coeff < 0) return false;
    return true;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        Integer a = t.coeff;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            if (a < 0) {
                os << " - ";
                a = -a;
            } else {
                os << " + ";
            }
        }
        if (t.exp == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            if (t.exp == 1)
                os << "v";
            else
                os << "v^" << t.exp;
        }
    }
    return os.str();
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
}

LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms()) r.add_term(ta.exp + tb.exp, ta.coeff * tb.coeff);
    return r;
}

LaurentPoly operator*(const Integer& c, LaurentPoly a) {
    a *= c;
    return a;
}

LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw Error("division by zero polynomial");
    if (a.is_zero()) return LaurentPoly();
    LaurentPoly rem = a;
    LaurentPoly quot;
    const int blo = b.min_exp();
    const Integer bc = b.coeff(blo);
    while (!rem.is_zero()) {
        const int rlo = rem.min_exp();
        const Integer rc = rem.coeff(rlo);
        if (rc % bc != 0) throw Error("inexact polynomial division");
        Integer q = rc / bc;
        int e = rlo - blo;
        quot.add_term(e, q);
        rem -= LaurentPoly::monomial(q, e) * b;
        if (!rem.is_zero() && rem.min_exp() <= rlo)
            throw Error("inexact polynomial division");
    }
    return quot;
}

RationalV::RationalV(LaurentPoly n, LaurentPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw NonInvertibleDenominator("rational function with zero denominator");
    int k = den.min_exp();
    den = den.shifted(-k);
    num = num.shifted(-k);
    if (den.coeff(den.max_exp()) < 0) {
        den = -den;
        num = -num;
    }
}

LaurentPoly series_expand(const RationalV& r, int order) {
    if (r.den.is_zero()) throw NonInvertibleDenominator("series expansion of zero denominator");
    if (r.num.is_zero()) return LaurentPoly();
    // den = v^a * u with u(0) a unit in the expansion sense: every coefficient
    // solve is an exact integer division by u0.
    const int a = r.den.min_exp();
    const Integer u0 = r.den.coeff(a);
    const int nlo = r.num.min_exp();
    LaurentPoly q;
    LaurentPoly rem = r.num;
    // q * den = num (mod v^{order+1}); peel lowest terms of rem.
    for (int e = nlo - a; e <= order; ++e) {
        Integer c = rem.coeff(e + a);
        if (c == 0) continue;
        if (c % u0 != 0)
            throw NonInvertibleDenominator("series coefficient not integral");
        Integer qe = c / u0;
        q.add_term(e, qe);
        rem -= LaurentPoly::monomial(qe, e) * r.den;
    }
    return q;
}

}  // namespace skl

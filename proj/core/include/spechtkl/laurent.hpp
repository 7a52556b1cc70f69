#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "spechtkl/errors.hpp"

namespace skl {

using Integer = boost::multiprecision::cpp_int;

/*
  Sparse Laurent polynomial over Z, the coefficient ring for everything in
  this library: graded multiplicities, KL polynomials, Hilbert series.

  Canonical form: terms sorted by ascending exponent, no zero coefficients,
  the zero polynomial is the empty term list. All operations preserve this.
*/
class LaurentPoly {
public:
    struct Term {
        int exp;
        Integer coeff;
        bool operator==(const Term& o) const { return exp == o.exp && coeff == o.coeff; }
    };

    LaurentPoly() = default;
    LaurentPoly(int c) { add_term(0, Integer(c)); }
    LaurentPoly(const Integer& c) { add_term(0, c); }

    // c * v^e
    static LaurentPoly monomial(const Integer& c, int e);
    // v^e
    static LaurentPoly v(int e = 1) { return monomial(1, e); }

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    int min_exp() const;  // requires nonzero
    int max_exp() const;  // requires nonzero
    Integer coeff(int e) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Integer& c);
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // adds c * v^e in place
    void add_term(int e, const Integer& c);

    // multiply by v^k
    LaurentPoly shifted(int k) const;

    // v -> v^{-1}
    LaurentPoly bar() const;

    // sum of coefficients (evaluation at v = 1)
    Integer eval_at_one() const;

    // member of vZ[v]: zero or all exponents >= 1
    bool in_vzv() const;
    // member of Z[v]: zero or all exponents >= 0
    bool in_zv() const;
    bool nonneg_coeffs() const;

    // Canonical rendering: ascending exponents, "c*v^e" terms with "v^1" -> "v",
    // "v^0" omitted, unit coefficients omitted except at e = 0, " + "/" - "
    // separators, zero -> "0".
    std::string str() const;

private:
    std::vector<Term> terms_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const Integer& c, LaurentPoly a);

// Exact division; throws Error if b is zero or does not divide a.
LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b);

/*
  Rational function num/den in v. Canonical representative: den has minimal
  exponent 0 and positive leading (highest-exponent) coefficient.
*/
struct RationalV {
    LaurentPoly num;
    LaurentPoly den;

    RationalV() : num(), den(1) {}
    RationalV(LaurentPoly n, LaurentPoly d);  // canonicalizes; throws NonInvertibleDenominator if d = 0

    bool operator==(const RationalV& o) const { return num == o.num && den == o.den; }
};

/*
  Truncated power-series expansion of r, exact through exponent `order`.
  The denominator is inverted formally at its lowest term; each coefficient
  of the expansion is obtained by an exact integer division, so the lowest
  denominator coefficient must divide at every step (always the case when it
  is a unit). Throws NonInvertibleDenominator otherwise.
*/
LaurentPoly series_expand(const RationalV& r, int order);

}  // namespace skl

#include <doctest.h>

#include <map>
#include <random>

#include "spechtkl/laurent.hpp"

using namespace skl;

namespace {

LaurentPoly random_poly(std::mt19937& rng, int max_terms = 5) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(-6, 6);
    std::uniform_int_distribution<int> coeff(-9, 9);
    LaurentPoly p;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) p.add_term(exp(rng), Integer(coeff(rng)));
    return p;
}

// reference product through a plain exponent -> coefficient map
LaurentPoly convolve(const LaurentPoly& a, const LaurentPoly& b) {
    std::map<int, Integer> acc;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms()) acc[ta.exp + tb.exp] += ta.coeff * tb.coeff;
    LaurentPoly r;
    for (const auto& [e, c] : acc) r.add_term(e, c);
    return r;
}

}  // namespace

TEST_CASE("arithmetic keeps the canonical form") {
    LaurentPoly p;
    p.add_term(2, 3);
    p.add_term(-1, 1);
    p.add_term(2, -3);  // cancels
    CHECK(p.terms().size() == 1);
    CHECK(p.coeff(-1) == 1);
    CHECK(p.coeff(2) == 0);

    LaurentPoly q = LaurentPoly::v(1) + LaurentPoly::v(-1);
    CHECK(q.min_exp() == -1);
    CHECK(q.max_exp() == 1);
    CHECK((q - q).is_zero());
}

TEST_CASE("product matches the convolution reference on random inputs") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a * b == convolve(a, b));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("bar involution and evaluation") {
    LaurentPoly p = LaurentPoly::monomial(2, 3) + LaurentPoly::monomial(-1, 0) + LaurentPoly::v(-2);
    CHECK(p.bar().bar() == p);
    CHECK(p.bar().coeff(-3) == 2);
    CHECK(p.eval_at_one() == 2);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng);
        CHECK((a * b).bar() == a.bar() * b.bar());
        CHECK((a + b).eval_at_one() == a.eval_at_one() + b.eval_at_one());
    }
}

TEST_CASE("membership predicates") {
    CHECK(LaurentPoly().in_vzv());
    CHECK(LaurentPoly::v(1).in_vzv());
    CHECK_FALSE(LaurentPoly(1).in_vzv());
    CHECK(LaurentPoly(1).in_zv());
    CHECK_FALSE(LaurentPoly::v(-1).in_zv());
    CHECK((LaurentPoly::v(1) + LaurentPoly::v(3)).nonneg_coeffs());
    CHECK_FALSE((LaurentPoly::v(1) - LaurentPoly::v(3)).nonneg_coeffs());
}

TEST_CASE("canonical rendering") {
    CHECK(LaurentPoly().str() == "0");
    CHECK(LaurentPoly(1).str() == "1");
    CHECK(LaurentPoly(-3).str() == "-3");
    CHECK(LaurentPoly::v(1).str() == "v");
    CHECK(LaurentPoly::v(-1).str() == "v^-1");
    CHECK((LaurentPoly::v(1) + LaurentPoly::v(-1)).str() == "v^-1 + v");
    CHECK((LaurentPoly(1) - LaurentPoly::monomial(2, 2)).str() == "1 - 2*v^2");
    CHECK((LaurentPoly::monomial(-1, -2) + LaurentPoly(5)).str() == "-v^-2 + 5");
}

TEST_CASE("exact division round-trips and rejects non-divisors") {
    std::mt19937 rng(99);
    int done = 0;
    while (done < 100) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng);
        if (b.is_zero()) continue;
        CHECK(div_exact(a * b, b) == a);
        ++done;
    }
    LaurentPoly two(2);
    LaurentPoly odd = LaurentPoly(1) + LaurentPoly::v(1);
    CHECK_THROWS_AS(div_exact(odd, two), Error);
    CHECK_THROWS_AS(div_exact(odd, LaurentPoly()), Error);
}

TEST_CASE("rational canonical form") {
    RationalV r(LaurentPoly::v(2), LaurentPoly::v(1) + LaurentPoly::v(3));
    CHECK(r.den.min_exp() == 0);
    CHECK(r.den.coeff(r.den.max_exp()) > 0);
    CHECK(r.num == LaurentPoly::v(1));

    RationalV neg(LaurentPoly(1), -LaurentPoly(2));
    CHECK(neg.den == LaurentPoly(2));
    CHECK(neg.num == LaurentPoly(-1));

    CHECK_THROWS_AS(RationalV(LaurentPoly(1), LaurentPoly()), NonInvertibleDenominator);
}

TEST_CASE("series expansion of geometric type denominators") {
    // 1 / (1 + v^2) = 1 - v^2 + v^4 - ...
    RationalV r(LaurentPoly(1), LaurentPoly(1) + LaurentPoly::monomial(1, 2));
    LaurentPoly s = series_expand(r, 10);
    LaurentPoly expect;
    for (int k = 0; k <= 10; k += 2) expect.add_term(k, k % 4 == 0 ? 1 : -1);
    CHECK(s == expect);

    // expansion times denominator reproduces the numerator through the order
    std::mt19937 rng(123);
    int done = 0;
    while (done < 60) {
        LaurentPoly den = random_poly(rng);
        if (den.is_zero()) continue;
        // force a unit lowest coefficient so every division is exact
        den.add_term(den.min_exp(), Integer(1) - den.coeff(den.min_exp()));
        LaurentPoly num = random_poly(rng);
        RationalV q(num, den);
        const int order = 8;
        LaurentPoly residual = series_expand(q, order) * q.den - q.num;
        if (!residual.is_zero()) CHECK(residual.min_exp() > order);
        ++done;
    }

    RationalV bad(LaurentPoly(1), LaurentPoly(2));
    CHECK_THROWS_AS(series_expand(bad, 5), NonInvertibleDenominator);
}

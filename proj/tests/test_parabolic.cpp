#include <vector>

#include "doctest.h"
#include "spechtkl/errors.hpp"
#include "spechtkl/hecke.hpp"
#include "spechtkl/parabolic.hpp"
#include "spechtkl/partitions.hpp"
#include "spechtkl/permutation.hpp"
#include "spechtkl/tableaux.hpp"

using namespace skl;

namespace {

AntisphericalElt unit(const AntisphericalModule& M, const Permutation& w) {
    AntisphericalElt a;
    a.add(M.group().id_of(w), LaurentPoly(1));
    return a;
}

}  // namespace

TEST_CASE("generator action on the antispherical standard basis") {
    AntisphericalModule M({2, 1});
    const Permutation e = Permutation::identity(3);
    const Permutation s2({1, 3, 2}), s2s1({3, 1, 2});

    SUBCASE("ascent inside the representatives") {
        AntisphericalElt img = antispherical_gen_action(M, unit(M, e), 2);
        AntisphericalElt want;
        want.add(M.group().id_of(s2), LaurentPoly(1));
        want.add(M.group().id_of(e), LaurentPoly::v());
        CHECK(img == want);
    }
    SUBCASE("descent inside the representatives") {
        AntisphericalElt img = antispherical_gen_action(M, unit(M, s2), 2);
        AntisphericalElt want;
        want.add(M.group().id_of(e), LaurentPoly(1));
        want.add(M.group().id_of(s2), LaurentPoly::v(-1));
        CHECK(img == want);
    }
    SUBCASE("stepping out of the representatives kills the term") {
        CHECK(antispherical_gen_action(M, unit(M, e), 1).is_zero());
        // s2 * s1 = s2s1 stays inside: N_{s2} -> N_{s2s1} + v N_{s2}
        AntisphericalElt up = antispherical_gen_action(M, unit(M, s2), 1);
        AntisphericalElt want_up;
        want_up.add(M.group().id_of(s2s1), LaurentPoly(1));
        want_up.add(M.group().id_of(s2), LaurentPoly::v());
        CHECK(up == want_up);
        // and back down: N_{s2s1} -> N_{s2} + v^-1 N_{s2s1}
        AntisphericalElt down;
        down.add(M.group().id_of(s2), LaurentPoly(1));
        down.add(M.group().id_of(s2s1), LaurentPoly::v(-1));
        CHECK(antispherical_gen_action(M, unit(M, s2s1), 1) == down);
    }
    SUBCASE("quadratic relation through the module") {
        for (const Composition& mu : compositions_of(4)) {
            AntisphericalModule M4(mu);
            for (int idx = 0; idx < M4.rep_count(); ++idx) {
                AntisphericalElt a;
                a.add(M4.rep_id(idx), LaurentPoly(1));
                for (int i = 1; i <= 3; ++i) {
                    AntisphericalElt once = antispherical_gen_action(M4, a, i);
                    AntisphericalElt twice = antispherical_gen_action(M4, once, i);
                    AntisphericalElt scaled;
                    for (auto& [id, c] : once.terms)
                        scaled.add(id, c * (LaurentPoly::v() + LaurentPoly::v(-1)));
                    CHECK(twice == scaled);
                }
            }
        }
    }
}

TEST_CASE("parabolic KL table for mu = (2,1)") {
    ParabolicKLTable t = ParabolicKLTable::build({2, 1});
    const Permutation e = Permutation::identity(3);
    const Permutation s2({1, 3, 2}), s2s1({3, 1, 2});

    CHECK(t.n_poly(e, e).str() == "1");
    CHECK(t.n_poly(e, s2).str() == "v");
    CHECK(t.n_poly(s2, s2).str() == "1");
    CHECK(t.n_poly(e, s2s1).str() == "0");
    CHECK(t.n_poly(s2, s2s1).str() == "v");
    CHECK(t.n_poly(s2s1, s2s1).str() == "1");
    CHECK(t.n_poly(s2s1, s2).str() == "0");
}

TEST_CASE("column shape recovers the full KL table") {
    // mu = (1,...,1): S(mu) = S_n and n(x,y) = h(x,y)
    KLTable kl = KLTable::build(4);
    ParabolicKLTable t = ParabolicKLTable::build({1, 1, 1, 1});
    const SymmetricGroup& G = kl.group();
    for (int y = 0; y < G.size(); ++y)
        for (int x = 0; x < G.size(); ++x) CHECK(t.n_poly(x, y) == kl.h(x, y));
}

TEST_CASE("row shape has the single representative") {
    ParabolicKLTable t = ParabolicKLTable::build({4});
    CHECK(t.module().rep_count() == 1);
    CHECK(t.n_poly(Permutation::identity(4), Permutation::identity(4)).str() == "1");
}

TEST_CASE("table invariants and the projection oracle") {
    for (int n = 2; n <= 4; ++n) {
        KLTable kl = KLTable::build(n);
        for (const Composition& mu : compositions_of(n)) {
            ParabolicKLTable t = ParabolicKLTable::build(mu);
            const AntisphericalModule& M = t.module();
            const SymmetricGroup& G = M.group();

            for (int yi = 0; yi < M.rep_count(); ++yi) {
                const int y = M.rep_id(yi);
                for (auto& [x, c] : t.rows()[yi]) {
                    CHECK(M.rep_index(x) >= 0);
                    CHECK(bruhat_leq(G.perm(x), G.perm(y)));
                    if (x == y) CHECK(c.str() == "1");
                    else {
                        CHECK(c.in_vzv());
                        CHECK(c.nonneg_coeffs());
                    }
                }
            }

            ProjectionReport report = projection_crosscheck(t, kl);
            CHECK(report.ok);
        }
    }
}

TEST_CASE("dual elements absorb their descents") {
    // y s_i < y with both in S(mu) forces bN_y (H_i + v) = (v + v^-1) bN_y
    for (const Composition& mu : std::vector<Composition>{{2, 1}, {2, 2}, {1, 2, 1}}) {
        ParabolicKLTable t = ParabolicKLTable::build(mu);
        const AntisphericalModule& M = t.module();
        const SymmetricGroup& G = M.group();
        const LaurentPoly vpv = LaurentPoly::v() + LaurentPoly::v(-1);
        for (int yi = 0; yi < M.rep_count(); ++yi) {
            const int y = M.rep_id(yi);
            AntisphericalElt dual;
            for (auto& [x, c] : t.rows()[yi]) dual.add(x, c);
            for (int i = 1; i < G.n(); ++i) {
                if (!G.right_descent(y, i)) continue;
                if (M.rep_index(G.rmul(y, i)) < 0) continue;
                AntisphericalElt img = antispherical_gen_action(M, dual, i);
                AntisphericalElt want;
                for (auto& [x, c] : dual.terms) want.add(x, c * vpv);
                CHECK(img == want);
            }
        }
    }
}

TEST_CASE("decomposition columns") {
    SUBCASE("worked example for mu = (2,1)") {
        ParabolicKLTable t = ParabolicKLTable::build({2, 1});
        std::vector<LaurentPoly> col = t.decomposition_column(Permutation({3, 1, 2}));
        REQUIRE(col.size() == 3);
        CHECK(col[0].str() == "0");
        CHECK(col[1].str() == "v");
        CHECK(col[2].str() == "1");
        CHECK(decomposition_columns(t, Permutation({3, 1, 2})) == col);
    }
    SUBCASE("identity column is the unit vector") {
        ParabolicKLTable t = ParabolicKLTable::build({2, 2});
        std::vector<LaurentPoly> col = t.decomposition_column(Permutation::identity(4));
        CHECK(col[0].str() == "1");
        for (size_t k = 1; k < col.size(); ++k) CHECK(col[k].is_zero());
    }
    SUBCASE("rejects arguments outside the representatives") {
        ParabolicKLTable t = ParabolicKLTable::build({2, 1});
        CHECK_THROWS_AS(t.decomposition_column(Permutation({2, 1, 3})), NotACosetRep);
    }
}

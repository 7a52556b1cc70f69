#include <map>
#include <random>
#include <vector>

#include "doctest.h"
#include "spechtkl/errors.hpp"
#include "spechtkl/hecke.hpp"
#include "spechtkl/laurent.hpp"
#include "spechtkl/permutation.hpp"

using namespace skl;

namespace {

HeckeElt gen_plus_v(const SymmetricGroup& G, int i) {
    HeckeElt x = HeckeElt::basis(G, G.lmul(G.e(), i));
    x.add(G.e(), LaurentPoly::v());
    return x;
}

// Express a standard-basis element in the KL basis by peeling the largest id.
std::map<int, LaurentPoly> to_kl_basis(const KLTable& kl, HeckeElt a) {
    std::map<int, LaurentPoly> out;
    while (!a.is_zero()) {
        int top = a.terms().rbegin()->first;
        LaurentPoly c = a.coeff(top);
        HeckeElt cw = kl.kl_element(top);
        cw *= c;
        a -= cw;
        out[top] = std::move(c);
    }
    return out;
}

}  // namespace

TEST_CASE("standard basis multiplication") {
    const SymmetricGroup& G = SymmetricGroup::get(3);
    const int s1 = G.lmul(G.e(), 1);

    SUBCASE("quadratic relation") {
        HeckeElt prod = mult(HeckeElt::basis(G, s1), HeckeElt::basis(G, s1));
        HeckeElt want(G);
        want.add(G.e(), LaurentPoly(1));
        want.add(s1, LaurentPoly::v(-1) - LaurentPoly::v());
        CHECK(prod == want);
    }
    SUBCASE("reduced products concatenate") {
        HeckeElt prod = mult(HeckeElt::basis(G, s1), HeckeElt::basis(G, G.lmul(G.e(), 2)));
        HeckeElt want(G);
        want.add(G.id_of(Permutation({2, 3, 1})), LaurentPoly(1));
        CHECK(prod == want);
    }
    SUBCASE("associativity on random triples") {
        const SymmetricGroup& G4 = SymmetricGroup::get(4);
        std::mt19937 rng(20260814);
        std::uniform_int_distribution<int> pick(0, G4.size() - 1);
        std::uniform_int_distribution<int> cdist(-2, 2);
        for (int trial = 0; trial < 40; ++trial) {
            HeckeElt a(G4), b(G4), c(G4);
            for (int t = 0; t < 3; ++t) {
                a.add(pick(rng), LaurentPoly::monomial(cdist(rng), cdist(rng)));
                b.add(pick(rng), LaurentPoly::monomial(cdist(rng), cdist(rng)));
                c.add(pick(rng), LaurentPoly::monomial(cdist(rng), cdist(rng)));
            }
            CHECK(mult(mult(a, b), c) == mult(a, mult(b, c)));
        }
    }
}

TEST_CASE("bar involution") {
    const SymmetricGroup& G = SymmetricGroup::get(3);
    const int s1 = G.lmul(G.e(), 1);

    SUBCASE("generator") {
        HeckeElt barred = bar_element(HeckeElt::basis(G, s1));
        HeckeElt want = HeckeElt::basis(G, s1);
        want.add(G.e(), LaurentPoly::v() - LaurentPoly::v(-1));
        CHECK(barred == want);
    }
    SUBCASE("involution and multiplicativity") {
        const SymmetricGroup& G4 = SymmetricGroup::get(4);
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> pick(0, G4.size() - 1);
        for (int trial = 0; trial < 15; ++trial) {
            HeckeElt a(G4);
            a.add(pick(rng), LaurentPoly::monomial(2, trial % 3 - 1));
            a.add(pick(rng), LaurentPoly::v());
            CHECK(bar_element(bar_element(a)) == a);
            int x = pick(rng), y = pick(rng);
            HeckeElt hx = HeckeElt::basis(G4, x), hy = HeckeElt::basis(G4, y);
            CHECK(bar_element(mult(hx, hy)) == mult(bar_element(hx), bar_element(hy)));
        }
    }
}

TEST_CASE("Kazhdan-Lusztig table for S_3 in full") {
    KLTable kl = KLTable::build(3);
    const SymmetricGroup& G = kl.group();
    const Permutation e = Permutation::identity(3);
    const Permutation s1({2, 1, 3}), s2({1, 3, 2});
    const Permutation s1s2({2, 3, 1}), s2s1({3, 1, 2}), w0({3, 2, 1});

    CHECK(kl.h(e, e).str() == "1");
    CHECK(kl.h(e, s1).str() == "v");
    CHECK(kl.h(s2, s1).str() == "0");
    CHECK(kl.h(e, s1s2).str() == "v^2");
    CHECK(kl.h(s1, s1s2).str() == "v");
    CHECK(kl.h(s2, s1s2).str() == "v");
    CHECK(kl.h(s2s1, s1s2).str() == "0");

    // the longest element: coefficients v^(3 - length)
    for (int x = 0; x < G.size(); ++x)
        CHECK(kl.h(x, G.w0()) == LaurentPoly::v(3 - G.length(x)));
    CHECK(kl.h(e, w0).str() == "v^3");
    CHECK(kl.h(s2s1, w0).str() == "v");
}

TEST_CASE("table invariants over S_4") {
    KLTable kl = KLTable::build(4);
    const SymmetricGroup& G = kl.group();

    SUBCASE("unitriangular, positive, supported on the Bruhat interval") {
        for (int w = 0; w < G.size(); ++w) {
            for (int x = 0; x < G.size(); ++x) {
                const LaurentPoly& h = kl.h(x, w);
                CHECK(h.is_zero() == !bruhat_leq(G.perm(x), G.perm(w)));
                if (x == w) CHECK(h.str() == "1");
                else if (!h.is_zero()) {
                    CHECK(h.in_vzv());
                    CHECK(h.nonneg_coeffs());
                }
            }
        }
    }
    SUBCASE("bar self duality") {
        for (int w = 0; w < G.size(); ++w) {
            HeckeElt cw = kl.kl_element(w);
            CHECK(bar_element(cw) == cw);
        }
    }
    SUBCASE("mu is symmetric and equals one on covers") {
        for (int w = 0; w < G.size(); ++w)
            for (int x = 0; x < G.size(); ++x) {
                CHECK(kl.mu(x, w) == kl.mu(w, x));
                if (bruhat_leq(G.perm(x), G.perm(w)) && G.length(w) == G.length(x) + 1)
                    CHECK(kl.mu(x, w) == 1);
            }
    }
    SUBCASE("validation rejects a corrupted table") {
        std::vector<KLTable::Row> rows = kl.rows();
        rows[5][5] = LaurentPoly::v();
        CHECK_THROWS_AS(KLTable::from_rows(4, std::move(rows)), SchemaMismatch);
        std::vector<KLTable::Row> rows2 = kl.rows();
        rows2[3][10] = LaurentPoly::v();  // support above the diagonal
        CHECK_THROWS_AS(KLTable::from_rows(4, std::move(rows2)), SchemaMismatch);
    }
}

TEST_CASE("products in the KL basis match standard-basis arithmetic") {
    KLTable kl = KLTable::build(4);
    const SymmetricGroup& G = kl.group();
    for (int x = 0; x < G.size(); ++x)
        for (int i = 1; i <= 3; ++i) {
            HeckeElt direct = mult(kl.kl_element(x), gen_plus_v(G, i));
            CHECK(to_kl_basis(kl, direct) == kl.kl_product(x, i));
            if (G.right_descent(x, i)) {
                std::map<int, LaurentPoly> want{
                    {x, LaurentPoly::v() + LaurentPoly::v(-1)}};
                CHECK(kl.kl_product(x, i) == want);
            }
        }
}

TEST_CASE("regular representation matrices") {
    for (int n : {3, 4}) {
        KLTable kl = KLTable::build(n);
        const SymmetricGroup& G = kl.group();
        const int N = G.size();
        const LaurentPoly vpv = LaurentPoly::v() + LaurentPoly::v(-1);

        std::vector<std::vector<std::vector<LaurentPoly>>> M;
        for (int i = 1; i < n; ++i) M.push_back(kl.regular_model(i));

        auto matmul = [&](const std::vector<std::vector<LaurentPoly>>& A,
                          const std::vector<std::vector<LaurentPoly>>& B) {
            std::vector<std::vector<LaurentPoly>> C(N, std::vector<LaurentPoly>(N));
            for (int r = 0; r < N; ++r)
                for (int k = 0; k < N; ++k) {
                    if (A[r][k].is_zero()) continue;
                    for (int c = 0; c < N; ++c) {
                        if (B[k][c].is_zero()) continue;
                        C[r][c] += A[r][k] * B[k][c];
                    }
                }
            return C;
        };

        // each generator matrix satisfies M^2 = (v + v^-1) M
        for (const auto& Mi : M) {
            auto sq = matmul(Mi, Mi);
            for (int r = 0; r < N; ++r)
                for (int c = 0; c < N; ++c) CHECK(sq[r][c] == vpv * Mi[r][c]);
        }

        // braid and commutation relations for the underlying H_{s_i} = M_i - vI
        std::vector<std::vector<std::vector<LaurentPoly>>> B = M;
        for (auto& Bi : B)
            for (int r = 0; r < N; ++r) Bi[r][r] -= LaurentPoly::v();
        for (int i = 0; i + 1 < n - 1; ++i) {
            auto lhs = matmul(B[i], matmul(B[i + 1], B[i]));
            auto rhs = matmul(B[i + 1], matmul(B[i], B[i + 1]));
            CHECK(lhs == rhs);
        }
        for (int i = 0; i < n - 1; ++i)
            for (int j = i + 2; j < n - 1; ++j) CHECK(matmul(B[i], B[j]) == matmul(B[j], B[i]));

        // the base change to the KL basis intertwines the two matrix models
        auto bc = kl.base_change();
        for (int i = 1; i < n; ++i) {
            std::vector<std::vector<LaurentPoly>> K(N, std::vector<LaurentPoly>(N));
            for (int x = 0; x < N; ++x)
                for (auto& [z, c] : kl.kl_product(x, i)) K[z][x] = c;
            CHECK(matmul(M[i - 1], bc) == matmul(bc, K));
        }
    }
}

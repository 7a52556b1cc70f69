#include "spechtkl/form.hpp"

#include <sstream>

namespace skl {

GramMatrix gram(const ParabolicKLTable& pkl, const CellPartition& cells) {
    const AntisphericalModule& M = pkl.module();
    const SymmetricGroup& G = M.group();

    GramMatrix g;
    g.mu = M.mu();
    g.basis = cell_of_wmu(cells, g.mu);
    for (const Permutation& p : g.basis) g.basis_ids.push_back(G.id_of(p));

    const int d = g.dim();
    g.entries = pm_zero(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = a; b < d; ++b) {
            LaurentPoly s;
            for (int wi = 0; wi < M.rep_count(); ++wi) {
                const LaurentPoly& na = pkl.n_poly(M.rep_id(wi), g.basis_ids[a]);
                if (na.is_zero()) continue;
                const LaurentPoly& nb = pkl.n_poly(M.rep_id(wi), g.basis_ids[b]);
                if (nb.is_zero()) continue;
                s += na * nb;
            }
            g.entries[a][b] = s;
            g.entries[b][a] = std::move(s);
        }
    return g;
}

FormReport invariance_check(const GramMatrix& g, const SpechtModel& m) {
    if (g.mu != m.mu) throw SizeMismatch("Gram matrix and model built for different compositions");
    const LaurentPoly two_v = LaurentPoly::v(1) + LaurentPoly::v(-1);
    const SymmetricGroup& G = SymmetricGroup::get(m.n());

    for (size_t i = 0; i < m.proj.size(); ++i) {
        PolyMatrix lhs = pm_mul(pm_transpose(m.proj[i]), g.entries);
        PolyMatrix rhs = pm_mul(g.entries, m.proj[i]);
        if (!pm_equal(lhs, rhs))
            return FormReport{false,
                              "self-adjointness fails at generator " + std::to_string(i + 1)};
        for (int a = 0; a < g.dim(); ++a) {
            if (!G.right_descent(g.basis_ids[a], static_cast<int>(i) + 1)) continue;
            for (int b = 0; b < g.dim(); ++b) {
                if (!G.right_descent(g.basis_ids[b], static_cast<int>(i) + 1)) continue;
                if (rhs[a][b] != two_v * g.entries[a][b])
                    return FormReport{false, "descent-pair scaling fails at generator " +
                                                 std::to_string(i + 1) + ", entry (" +
                                                 g.basis[a].str() + ", " + g.basis[b].str() + ")"};
            }
        }
    }
    return FormReport{true, "form is invariant under every H_s + v"};
}

FormReport uniqueness_check(const GramMatrix& g, const SpechtModel& m) {
    if (g.mu != m.mu) throw SizeMismatch("Gram matrix and model built for different compositions");
    const int d = g.dim();
    // unknowns: b_{pq}, p <= q
    std::vector<std::pair<int, int>> unknowns;
    std::vector<std::vector<int>> slot(d, std::vector<int>(d));
    for (int p = 0; p < d; ++p)
        for (int q = p; q < d; ++q) {
            slot[p][q] = slot[q][p] = static_cast<int>(unknowns.size());
            unknowns.emplace_back(p, q);
        }

    // equations: for each generator and each (r,c),
    //   sum_k T[k][r] B[k][c] - sum_k B[r][k] T[k][c] = 0
    PolyMatrix system;
    for (const PolyMatrix& T : m.proj)
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) {
                std::vector<LaurentPoly> row(unknowns.size());
                for (int k = 0; k < d; ++k) {
                    if (!T[k][r].is_zero()) row[slot[k][c]] += T[k][r];
                    if (!T[k][c].is_zero()) row[slot[r][k]] -= T[k][c];
                }
                bool nonzero = false;
                for (const auto& x : row)
                    if (!x.is_zero()) {
                        nonzero = true;
                        break;
                    }
                if (nonzero) system.push_back(std::move(row));
            }

    const int nullity =
        static_cast<int>(unknowns.size()) - (system.empty() ? 0 : pm_rank(system));
    if (nullity != 1)
        return FormReport{false, "invariant-form solution space has dimension " +
                                     std::to_string(nullity) + ", expected 1"};

    // G is a nonzero symmetric solution, so it spans the one-dimensional space.
    bool gram_nonzero = false;
    for (const auto& row : g.entries)
        for (const auto& x : row)
            if (!x.is_zero()) gram_nonzero = true;
    if (!gram_nonzero) return FormReport{false, "Gram matrix is zero"};
    for (size_t i = 0; i < m.proj.size(); ++i)
        if (!pm_equal(pm_mul(pm_transpose(m.proj[i]), g.entries), pm_mul(g.entries, m.proj[i])))
            return FormReport{false, "Gram matrix is not itself a solution"};
    return FormReport{true, "solution space is one-dimensional and spanned by the Gram matrix"};
}

Integer endo_dim(const GramMatrix& g, const Permutation& w) {
    for (int k = 0; k < g.dim(); ++k)
        if (g.basis[k] == w) return g.entries[k][k].eval_at_one();
    throw NotInCell("element " + w.str() + " is not in the cell basis");
}

PolyMatrix simple_form(const GramMatrix& g, int order) {
    std::pair<PolyMatrix, LaurentPoly> inv;
    try {
        inv = pm_inverse_scaled(g.entries);
    } catch (const Error&) {
        throw SingularGram("Gram matrix is singular");
    }
    const int d = g.dim();
    PolyMatrix out = pm_zero(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            out[a][b] = series_expand(RationalV(inv.first[a][b], inv.second), order);
    return out;
}

}  // namespace skl

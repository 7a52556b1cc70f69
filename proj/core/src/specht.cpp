#include "spechtkl/specht.hpp"

#include <algorithm>
#include <sstream>

namespace skl {

SpechtModel build_specht_model(const Composition& mu, const KLTable& kl,
                               const CellPartition& cells) {
    const SymmetricGroup& G = kl.group();
    SpechtModel m;
    m.mu = mu;
    m.lambda_prime = conjugate(sort_to_partition(mu));
    m.basis = cell_of_wmu(cells, mu);
    for (const Permutation& p : m.basis) m.basis_ids.push_back(G.id_of(p));

    std::vector<int> pos(G.size(), -1);
    for (int k = 0; k < m.dim(); ++k) pos[m.basis_ids[k]] = k;

    const LaurentPoly gen_scalar = LaurentPoly::v(1) + LaurentPoly::v(-1);
    for (int i = 1; i < G.n(); ++i) {
        PolyMatrix T = pm_zero(m.dim(), m.dim());
        for (int col = 0; col < m.dim(); ++col) {
            const int x = m.basis_ids[col];
            if (G.right_descent(x, i)) {
                T[col][col] = gen_scalar;
                continue;
            }
            int xs = G.rmul(x, i);
            if (pos[xs] >= 0) T[pos[xs]][col] = LaurentPoly(1);
            for (const auto& [z, c] : kl.rows()[x]) {
                if (z == x || !G.right_descent(z, i) || pos[z] < 0) continue;
                Integer mu_zx = c.coeff(1);
                if (mu_zx != 0) T[pos[z]][col] = LaurentPoly(mu_zx);
            }
        }
        m.simple.push_back(pm_transpose(T));
        m.proj.push_back(std::move(T));
    }
    return m;
}

RelationReport verify_relations(const SpechtModel& m) {
    const int g = static_cast<int>(m.proj.size());
    const LaurentPoly two_v = LaurentPoly::v(1) + LaurentPoly::v(-1);
    const PolyMatrix id = pm_identity(m.dim());

    std::vector<PolyMatrix> U;
    for (const PolyMatrix& T : m.proj) U.push_back(pm_sub(T, pm_scale(id, LaurentPoly::v(1))));

    auto fail = [&](const std::string& what) {
        return RelationReport{false, "mu=" + [&] {
                                  std::ostringstream os;
                                  for (size_t k = 0; k < m.mu.size(); ++k)
                                      os << (k ? "," : "") << m.mu[k];
                                  return os.str();
                              }() + ": " + what};
    };

    for (int i = 0; i < g; ++i)
        if (!pm_equal(pm_mul(m.proj[i], m.proj[i]), pm_scale(m.proj[i], two_v)))
            return fail("quadratic relation fails at generator " + std::to_string(i + 1));
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j) {
            if (j == i + 1) {
                PolyMatrix lhs = pm_mul(U[i], pm_mul(U[j], U[i]));
                PolyMatrix rhs = pm_mul(U[j], pm_mul(U[i], U[j]));
                if (!pm_equal(lhs, rhs))
                    return fail("braid relation fails at generators " + std::to_string(i + 1) +
                                "," + std::to_string(j + 1));
            } else if (!pm_equal(pm_mul(U[i], U[j]), pm_mul(U[j], U[i]))) {
                return fail("distant generators " + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + " fail to commute");
            }
        }
    return RelationReport{true, "all Hecke relations hold"};
}

Eq6Report eq6_crosscheck(const SpechtModel& m, const KLTable& kl) {
    const SymmetricGroup& G = kl.group();
    const LaurentPoly two_v = LaurentPoly::v(1) + LaurentPoly::v(-1);

    enum Variant { kNone = 0, kAscent = 1, kDescent = 2 };
    auto literal_column = [&](int gen, int wcol, Variant variant) {
        std::vector<LaurentPoly> col(m.dim());
        const int w = m.basis_ids[wcol];
        if (!G.right_descent(w, gen + 1)) return col;  // zero column
        col[wcol] = two_v;
        for (int k = 0; k < m.dim(); ++k) {
            if (k == wcol) continue;
            const int wp = m.basis_ids[k];
            if (variant == kAscent && G.right_descent(wp, gen + 1)) continue;
            if (variant == kDescent && !G.right_descent(wp, gen + 1)) continue;
            long long c = kl.mu(wp, w);
            if (c) col[k] = LaurentPoly(Integer(c));
        }
        return col;
    };

    Eq6Report rep;
    rep.checked = 0;
    rep.mismatches = 0;
    bool ascent_all = true, descent_all = true;
    std::ostringstream firstbad;
    for (int gen = 0; gen < static_cast<int>(m.simple.size()); ++gen) {
        for (int wcol = 0; wcol < m.dim(); ++wcol) {
            ++rep.checked;
            std::vector<LaurentPoly> actual(m.dim());
            for (int r = 0; r < m.dim(); ++r) actual[r] = m.simple[gen][r][wcol];
            if (literal_column(gen, wcol, kNone) == actual) continue;
            ++rep.mismatches;
            if (rep.mismatches == 1)
                firstbad << "first mismatch at i=" << gen + 1 << ", w="
                         << m.basis[wcol].str();
            if (!(literal_column(gen, wcol, kAscent) == actual)) ascent_all = false;
            if (!(literal_column(gen, wcol, kDescent) == actual)) descent_all = false;
        }
    }
    rep.ok = rep.mismatches == 0;
    if (rep.ok) {
        rep.variant = "";
        rep.detail = "literal columns match the transpose action on all " +
                     std::to_string(rep.checked) + " pairs";
    } else {
        if (ascent_all)
            rep.variant = "ascent";
        else if (descent_all)
            rep.variant = "descent";
        else
            rep.variant = "none";
        rep.detail = firstbad.str() + "; filtering summands by " +
                     (rep.variant == "none" ? "either descent condition fails too"
                                            : rep.variant + " recovers the transpose action");
    }
    return rep;
}

namespace {

std::vector<std::vector<long long>> at_one_minus_id(const PolyMatrix& T) {
    const int d = static_cast<int>(T.size());
    std::vector<std::vector<long long>> s(d, std::vector<long long>(d, 0));
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            s[r][c] = static_cast<long long>(T[r][c].eval_at_one());
            if (r == c) s[r][c] -= 1;
        }
    return s;
}

std::vector<std::vector<long long>> int_mul(const std::vector<std::vector<long long>>& a,
                                            const std::vector<std::vector<long long>>& b) {
    const int d = static_cast<int>(a.size());
    std::vector<std::vector<long long>> r(d, std::vector<long long>(d, 0));
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            if (!a[i][k]) continue;
            for (int j = 0; j < d; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

}  // namespace

long long character_at_one(const SpechtModel& m, const Partition& cycle_type) {
    if (comp_sum(cycle_type) != m.n()) throw SizeMismatch("cycle type of the wrong n");
    ClassRep rep = class_representative(cycle_type);

    const int d = m.dim();
    std::vector<std::vector<long long>> acc(d, std::vector<long long>(d, 0));
    for (int i = 0; i < d; ++i) acc[i][i] = 1;
    for (int i : rep.word) acc = int_mul(acc, at_one_minus_id(m.proj[i - 1]));

    long long tr = 0;
    for (int i = 0; i < d; ++i) tr += acc[i][i];
    return tr;
}

IdentifyReport identify_specht(const SpechtModel& m) {
    std::ostringstream lam;
    for (size_t k = 0; k < m.lambda_prime.size(); ++k)
        lam << (k ? "," : "") << m.lambda_prime[k];

    if (m.dim() != syt_count(m.lambda_prime))
        throw IdentificationFailed("dimension " + std::to_string(m.dim()) +
                                   " differs from the tableau count of (" + lam.str() + ")");
    for (const Partition& tau : partitions_of(m.n())) {
        long long got = character_at_one(m, tau);
        long long want = mn_character(m.lambda_prime, tau);
        if (got != want) {
            std::ostringstream os;
            os << "character mismatch at cycle type (";
            for (size_t k = 0; k < tau.size(); ++k) os << (k ? "," : "") << tau[k];
            os << "): model gives " << got << ", classical value is " << want;
            throw IdentificationFailed(os.str());
        }
    }
    IdentifyReport rep;
    rep.ok = true;
    rep.lambda_prime = m.lambda_prime;
    rep.detail = "module identified as the Specht module of (" + lam.str() + ")";
    return rep;
}

}  // namespace skl

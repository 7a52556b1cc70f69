#include "spechtkl/parabolic.hpp"

#include <algorithm>
#include <sstream>

namespace skl {

AntisphericalModule::AntisphericalModule(const Composition& mu)
    : mu_(mu), G_(&SymmetricGroup::get(comp_sum(mu))), cosets_(coset_data(mu)) {
    rep_index_.assign(G_->size(), -1);
    for (const Permutation& r : cosets_.reps) {
        int id = G_->id_of(r);
        rep_index_[id] = static_cast<int>(rep_ids_.size());
        rep_ids_.push_back(id);
    }
}

LaurentPoly AntisphericalElt::coeff(int id) const {
    auto it = terms.find(id);
    return it == terms.end() ? LaurentPoly() : it->second;
}

void AntisphericalElt::add(int id, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(id, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

AntisphericalElt antispherical_gen_action(const AntisphericalModule& M, const AntisphericalElt& a,
                                          int i) {
    const SymmetricGroup& G = M.group();
    AntisphericalElt r;
    for (const auto& [w, c] : a.terms) {
        int ws = G.rmul(w, i);
        if (M.rep_index(ws) < 0) continue;
        r.add(ws, c);
        r.add(w, c * LaurentPoly::v(G.right_descent(w, i) ? -1 : 1));
    }
    return r;
}

ParabolicKLTable ParabolicKLTable::build(const Composition& mu) {
    ParabolicKLTable t(mu);
    const AntisphericalModule& M = t.module_;
    const SymmetricGroup& G = M.group();
    const int m = M.rep_count();
    t.rows_.resize(m);

    t.rows_[0][G.e()] = LaurentPoly(1);
    for (int yi = 1; yi < m; ++yi) {
        const int y = M.rep_id(yi);
        const int i = G.first_right_descent(y);  // ys < y stays in S(mu)
        const int yp = G.rmul(y, i);
        const int ypi = M.rep_index(yp);
        if (ypi < 0) throw Error("descent left the coset representatives");

        AntisphericalElt prev;
        for (const auto& [x, c] : t.rows_[ypi]) prev.add(x, c);
        AntisphericalElt d = antispherical_gen_action(M, prev, i);

        if (d.coeff(y) != LaurentPoly(1)) throw Error("parabolic recursion lost unitriangularity");

        // Strip bar-symmetric parts in decreasing (length, lex) order over the
        // live support; what remains is the unique self-dual element with
        // coefficients in vZ[v] below y. Subtracting at x only touches
        // elements strictly below x, so longer coefficients stay reduced.
        for (;;) {
            int x = -1;
            for (const auto& [z, c] : d.terms)
                if (z != y && !c.in_vzv()) x = z;
            if (x < 0) break;
            LaurentPoly c = d.coeff(x);
            LaurentPoly correction;
            for (const auto& term : c.terms()) {
                if (term.exp > 0) break;
                correction.add_term(term.exp, term.coeff);
                if (term.exp < 0) correction.add_term(-term.exp, term.coeff);
            }
            const int xi = M.rep_index(x);
            if (xi < 0) throw Error("parabolic recursion escaped the coset representatives");
            for (const auto& [z, cz] : t.rows_[xi]) d.add(z, -(correction * cz));
        }

        Row row;
        for (const auto& [x, c] : d.terms) {
            if (x != y && !c.in_vzv()) throw Error("parabolic recursion produced a non-reduced row");
            row[x] = c;
        }
        t.rows_[yi] = std::move(row);
    }
    return t;
}

ParabolicKLTable ParabolicKLTable::from_rows(const Composition& mu, std::vector<Row> rows) {
    ParabolicKLTable t(mu);
    const AntisphericalModule& M = t.module_;
    if (static_cast<int>(rows.size()) != M.rep_count())
        throw SchemaMismatch("parabolic table has wrong number of rows");
    for (int yi = 0; yi < M.rep_count(); ++yi) {
        const int y = M.rep_id(yi);
        auto it = rows[yi].find(y);
        if (it == rows[yi].end() || it->second != LaurentPoly(1))
            throw SchemaMismatch("parabolic row misses its unitriangular top term");
        for (const auto& [x, c] : rows[yi]) {
            if (x < 0 || x >= M.group().size() || M.rep_index(x) < 0)
                throw SchemaMismatch("parabolic table entry outside the coset representatives");
            if (x == y) continue;
            if (!c.in_vzv()) throw SchemaMismatch("parabolic table entry not in vZ[v]");
            if (!bruhat_leq(M.group().perm(x), M.group().perm(y)))
                throw SchemaMismatch("parabolic table entry outside the Bruhat interval");
        }
    }
    t.rows_ = std::move(rows);
    return t;
}

const LaurentPoly& ParabolicKLTable::n_poly(int x_id, int y_id) const {
    static const LaurentPoly zero;
    int yi = module_.rep_index(y_id);
    if (yi < 0 || module_.rep_index(x_id) < 0) return zero;
    const Row& row = rows_[yi];
    auto it = row.find(x_id);
    return it == row.end() ? zero : it->second;
}

LaurentPoly ParabolicKLTable::n_poly(const Permutation& x, const Permutation& y) const {
    const SymmetricGroup& G = module_.group();
    return n_poly(G.id_of(x), G.id_of(y));
}

std::vector<LaurentPoly> ParabolicKLTable::decomposition_column(const Permutation& x) const {
    const SymmetricGroup& G = module_.group();
    int xi = module_.rep_index(G.id_of(x));
    if (xi < 0) throw NotACosetRep("element is not a shortest coset representative");
    std::vector<LaurentPoly> col(module_.rep_count());
    for (int wi = 0; wi < module_.rep_count(); ++wi)
        col[wi] = n_poly(module_.rep_id(wi), G.id_of(x));
    return col;
}

std::vector<LaurentPoly> decomposition_columns(const ParabolicKLTable& t, const Permutation& x) {
    return t.decomposition_column(x);
}

namespace {

// Elements of the Young subgroup: permutations fixing every block of mu.
std::vector<int> subgroup_elements(const SymmetricGroup& G, const Composition& mu) {
    std::vector<int> block(G.n() + 1, 0);
    int acc = 0, b = 0;
    for (int part : mu) {
        for (int k = acc + 1; k <= acc + part; ++k) block[k] = b;
        acc += part;
        ++b;
    }
    std::vector<int> out;
    for (int id = 0; id < G.size(); ++id) {
        const Permutation& p = G.perm(id);
        bool stable = true;
        for (int k = 1; k <= G.n() && stable; ++k) stable = block[p(k)] == block[k];
        if (stable) out.push_back(id);
    }
    return out;
}

}  // namespace

ProjectionReport projection_crosscheck(const ParabolicKLTable& pkl, const KLTable& kl) {
    const AntisphericalModule& M = pkl.module();
    const SymmetricGroup& G = M.group();
    if (kl.n() != G.n()) throw SizeMismatch("tables over different groups");

    std::vector<int> smu = subgroup_elements(G, M.mu());
    long long checked = 0;
    for (int yi = 0; yi < M.rep_count(); ++yi) {
        const int y = M.rep_id(yi);
        for (int xi = 0; xi < M.rep_count(); ++xi) {
            const int x = M.rep_id(xi);
            LaurentPoly sum;
            for (int u : smu) {
                const LaurentPoly& hval = kl.h(G.mul(u, x), y);
                if (hval.is_zero()) continue;
                LaurentPoly weight = LaurentPoly::monomial(G.length(u) % 2 ? -1 : 1, G.length(u));
                sum += weight * hval;
            }
            if (sum != pkl.n_poly(x, y)) {
                std::ostringstream os;
                os << "projection mismatch at x=" << G.perm(x).str() << " y=" << G.perm(y).str()
                   << ": expected " << sum.str() << ", table has " << pkl.n_poly(x, y).str();
                throw CrosscheckFailed(os.str());
            }
            ++checked;
        }
    }
    ProjectionReport rep;
    rep.ok = true;
    std::ostringstream os;
    os << "alternating projection matches on " << checked << " pairs";
    rep.detail = os.str();
    return rep;
}

}  // namespace skl

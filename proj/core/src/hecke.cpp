#include "spechtkl/hecke.hpp"

#include <algorithm>

namespace skl {

HeckeElt HeckeElt::basis(const SymmetricGroup& G, int id) {
    HeckeElt a(G);
    a.terms_[id] = LaurentPoly(1);
    return a;
}

LaurentPoly HeckeElt::coeff(int id) const {
    auto it = terms_.find(id);
    return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeckeElt::add(int id, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(id, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
    if (this == &o) {
        for (auto& [id, c] : terms_) c *= Integer(2);
        return *this;
    }
    for (const auto& [id, c] : o.terms_) add(id, c);
    return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
    if (this == &o) {
        terms_.clear();
        return *this;
    }
    for (const auto& [id, c] : o.terms_) add(id, -c);
    return *this;
}

HeckeElt& HeckeElt::operator*=(const LaurentPoly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [id, p] : terms_) p *= c;
    return *this;
}

HeckeElt mult_by_gen(const HeckeElt& a, int i) {
    const SymmetricGroup& G = a.group();
    static const LaurentPoly vinv_minus_v = LaurentPoly::v(-1) - LaurentPoly::v(1);
    HeckeElt r(G);
    for (const auto& [x, c] : a.terms()) {
        int xs = G.rmul(x, i);
        r.add(xs, c);
        if (G.right_descent(x, i)) r.add(x, c * vinv_minus_v);
    }
    return r;
}

HeckeElt mult(const HeckeElt& a, const HeckeElt& b) {
    const SymmetricGroup& G = a.group();
    if (&G != &b.group()) throw SizeMismatch("Hecke product across different groups");
    HeckeElt r(G);
    for (const auto& [y, c] : b.terms()) {
        HeckeElt part = a;
        for (int i : G.reduced_word(y)) part = mult_by_gen(part, i);
        part *= c;
        r += part;
    }
    return r;
}

namespace {

// bar(H_x) with memoization along right descents:
// bar(H_{x s}) = bar(H_x) (H_s + (v - v^-1) H_e) for xs > x.
const HeckeElt& bar_basis(const SymmetricGroup& G, int id, std::map<int, HeckeElt>& memo) {
    auto it = memo.find(id);
    if (it != memo.end()) return it->second;
    static const LaurentPoly v_minus_vinv = LaurentPoly::v(1) - LaurentPoly::v(-1);
    HeckeElt result(G);
    int i = G.first_right_descent(id);
    if (!i) {
        result = HeckeElt::basis(G, id);
    } else {
        const HeckeElt& prev = bar_basis(G, G.rmul(id, i), memo);
        result = mult_by_gen(prev, i);
        HeckeElt extra = prev;
        extra *= v_minus_vinv;
        result += extra;
    }
    return memo.emplace(id, std::move(result)).first->second;
}

}  // namespace

HeckeElt bar_element(const HeckeElt& a) {
    const SymmetricGroup& G = a.group();
    std::map<int, HeckeElt> memo;
    HeckeElt r(G);
    for (const auto& [x, c] : a.terms()) {
        HeckeElt part = bar_basis(G, x, memo);
        part *= c.bar();
        r += part;
    }
    return r;
}

KLTable KLTable::build(int n) {
    const SymmetricGroup& G = SymmetricGroup::get(n);
    KLTable t(n, G);
    const int N = G.size();
    t.rows_.resize(N);
    static const LaurentPoly v1 = LaurentPoly::v(1);
    static const LaurentPoly vinv = LaurentPoly::v(-1);

    t.rows_[0][0] = LaurentPoly(1);
    for (int w = 1; w < N; ++w) {
        const int i = G.first_right_descent(w);
        const int wp = G.rmul(w, i);  // shorter
        const Row& prev = t.rows_[wp];

        // C_{w'} (H_{s_i} + v) in the standard basis
        Row row;
        for (const auto& [x, c] : prev) {
            int xs = G.rmul(x, i);
            auto& cxs = row[xs];
            cxs += c;
            if (cxs.is_zero()) row.erase(xs);
            LaurentPoly diag = c * (G.right_descent(x, i) ? vinv : v1);
            auto& cx = row[x];
            cx += diag;
            if (cx.is_zero()) row.erase(x);
        }
        // minus mu-corrections sum_{z < w', z s_i < z} mu(z,w') C_z
        for (const auto& [z, c] : prev) {
            if (z == wp || !G.right_descent(z, i)) continue;
            Integer m = c.coeff(1);
            if (m == 0) continue;
            for (const auto& [x, cz] : t.rows_[z]) {
                auto& cx = row[x];
                cx -= m * cz;
                if (cx.is_zero()) row.erase(x);
            }
        }

        auto top = row.find(w);
        if (top == row.end() || top->second != LaurentPoly(1))
            throw Error("KL recursion lost unitriangularity");
        for (const auto& [x, c] : row)
            if (x != w && !c.in_vzv()) throw Error("KL recursion produced a non-reduced row");
        t.rows_[w] = std::move(row);
    }
    return t;
}

KLTable KLTable::from_rows(int n, std::vector<Row> rows) {
    const SymmetricGroup& G = SymmetricGroup::get(n);
    if (static_cast<int>(rows.size()) != G.size())
        throw SchemaMismatch("KL table has wrong number of rows");
    for (int w = 0; w < G.size(); ++w) {
        auto it = rows[w].find(w);
        if (it == rows[w].end() || it->second != LaurentPoly(1))
            throw SchemaMismatch("KL table row misses its unitriangular top term");
        for (const auto& [x, c] : rows[w]) {
            if (x < 0 || x >= G.size()) throw SchemaMismatch("KL table entry out of range");
            if (x == w) continue;
            if (!c.in_vzv()) throw SchemaMismatch("KL table entry not in vZ[v]");
            if (!bruhat_leq(G.perm(x), G.perm(w)))
                throw SchemaMismatch("KL table entry outside the Bruhat interval");
        }
    }
    KLTable t(n, G);
    t.rows_ = std::move(rows);
    return t;
}

const LaurentPoly& KLTable::h(int x, int w) const {
    static const LaurentPoly zero;
    const Row& row = rows_[w];
    auto it = row.find(x);
    return it == row.end() ? zero : it->second;
}

LaurentPoly KLTable::h(const Permutation& x, const Permutation& w) const {
    return h(G_->id_of(x), G_->id_of(w));
}

long long KLTable::mu(int x, int w) const {
    if (x == w) return 0;
    if (G_->length(x) > G_->length(w)) std::swap(x, w);
    return static_cast<long long>(h(x, w).coeff(1));
}

long long KLTable::mu(const Permutation& x, const Permutation& w) const {
    return mu(G_->id_of(x), G_->id_of(w));
}

std::map<int, LaurentPoly> KLTable::kl_product(int x, int i) const {
    std::map<int, LaurentPoly> out;
    if (G_->right_descent(x, i)) {
        out[x] = LaurentPoly::v(1) + LaurentPoly::v(-1);
        return out;
    }
    out[G_->rmul(x, i)] = LaurentPoly(1);
    for (const auto& [z, c] : rows_[x]) {
        if (z == x || !G_->right_descent(z, i)) continue;
        Integer m = c.coeff(1);
        if (m != 0) out[z] = LaurentPoly(m);
    }
    return out;
}

HeckeElt KLTable::kl_element(int w) const {
    HeckeElt a(*G_);
    for (const auto& [x, c] : rows_[w]) a.add(x, c);
    return a;
}

std::vector<std::vector<LaurentPoly>> KLTable::regular_model(int i) const {
    const int N = G_->size();
    std::vector<std::vector<LaurentPoly>> M(N, std::vector<LaurentPoly>(N));
    for (int x = 0; x < N; ++x) {
        M[G_->rmul(x, i)][x] += LaurentPoly(1);
        M[x][x] += LaurentPoly::v(G_->right_descent(x, i) ? -1 : 1);
    }
    return M;
}

std::vector<std::vector<LaurentPoly>> KLTable::base_change() const {
    const int N = G_->size();
    std::vector<std::vector<LaurentPoly>> B(N, std::vector<LaurentPoly>(N));
    for (int w = 0; w < N; ++w)
        for (const auto& [x, c] : rows_[w]) B[x][w] = c;
    return B;
}

}  // namespace skl

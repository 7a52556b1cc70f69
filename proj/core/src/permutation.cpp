#include "spechtkl/permutation.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace skl {

Permutation::Permutation(std::vector<int> oneline) : w_(std::move(oneline)) {
    const int n = static_cast<int>(w_.size());
    std::vector<char> seen(n + 1, 0);
    for (int v : w_) {
        if (v < 1 || v > n || seen[v]) throw Error("not a permutation of 1..n");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::simple(int n, int i) {
    if (i < 1 || i >= n) throw Error("generator index out of range");
    Permutation p = identity(n);
    std::swap(p.w_[i - 1], p.w_[i]);
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(w_.size());
    for (int k = 0; k < n(); ++k) inv[w_[k] - 1] = k + 1;
    return Permutation(std::move(inv));
}

int Permutation::length() const {
    int c = 0;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j)
            if (w_[i] > w_[j]) ++c;
    return c;
}

std::vector<int> Permutation::right_descents() const {
    std::vector<int> d;
    for (int i = 1; i < n(); ++i)
        if (w_[i - 1] > w_[i]) d.push_back(i);
    return d;
}

std::vector<int> Permutation::left_descents() const { return inverse().right_descents(); }

bool Permutation::is_identity() const {
    for (int k = 0; k < n(); ++k)
        if (w_[k] != k + 1) return false;
    return true;
}

std::string Permutation::str() const {
    std::ostringstream os;
    for (int k = 0; k < n(); ++k) {
        if (k) os << ",";
        os << w_[k];
    }
    return os.str();
}

Permutation compose(const Permutation& x, const Permutation& y) {
    if (x.n() != y.n()) throw SizeMismatch("composing permutations of different sizes");
    std::vector<int> w(x.n());
    for (int k = 1; k <= x.n(); ++k) w[k - 1] = x(y(k));
    return Permutation(std::move(w));
}

LengthDescents length_and_descents(const Permutation& w) {
    return LengthDescents{w.length(), w.right_descents(), w.left_descents()};
}

bool bruhat_leq(const Permutation& x, const Permutation& w) {
    if (x.n() != w.n()) throw SizeMismatch("Bruhat comparison across different sizes");
    const int n = x.n();
    std::vector<int> cx(n + 2, 0), cw(n + 2, 0);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= x(i); ++j) ++cx[j];
        for (int j = 1; j <= w(i); ++j) ++cw[j];
        for (int j = 1; j <= n; ++j)
            if (cx[j] > cw[j]) return false;
    }
    return true;
}

Partition cycle_type(const Permutation& w) {
    const int n = w.n();
    std::vector<char> seen(n + 1, 0);
    Partition type;
    for (int k = 1; k <= n; ++k) {
        if (seen[k]) continue;
        int len = 0;
        for (int j = k; !seen[j]; j = w(j)) {
            seen[j] = 1;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end(), std::greater<int>());
    return type;
}

ClassRep class_representative(const Partition& ct) {
    if (!is_partition(ct)) throw Error("cycle type must be a partition");
    const int n = comp_sum(ct);
    std::vector<int> word;
    int start = 1;
    for (int part : ct) {
        for (int i = start; i < start + part - 1; ++i) word.push_back(i);
        start += part;
    }
    Permutation p = Permutation::identity(n);
    std::vector<int> w = p.oneline();
    for (int i : word) std::swap(w[i - 1], w[i]);
    return ClassRep{Permutation(std::move(w)), std::move(word)};
}

namespace {

std::vector<int> smu_gens(const Composition& mu) {
    const int n = comp_sum(mu);
    std::vector<char> cut(n + 1, 0);
    int acc = 0;
    for (int part : mu) {
        if (part <= 0) throw Error("composition parts must be positive");
        acc += part;
        cut[acc] = 1;
    }
    std::vector<int> gens;
    for (int i = 1; i < n; ++i)
        if (!cut[i]) gens.push_back(i);
    return gens;
}

}  // namespace

CosetData coset_data(const Composition& mu) {
    const int n = comp_sum(mu);
    const SymmetricGroup& G = SymmetricGroup::get(n);
    std::vector<int> gens = smu_gens(mu);
    CosetData cd;
    cd.mu = mu;
    cd.subgroup_gens = gens;
    for (int id = 0; id < G.size(); ++id) {
        bool ok = true;
        for (int j : gens)
            if (G.left_descent(id, j)) {
                ok = false;
                break;
            }
        if (ok) cd.reps.push_back(G.perm(id));
    }
    cd.w_mu = cd.reps.back();
    return cd;
}

std::pair<Permutation, Permutation> coset_factorize(const Permutation& w, const Composition& mu) {
    const int n = comp_sum(mu);
    if (w.n() != n) throw SizeMismatch("permutation size does not match composition");
    std::vector<int> gens = smu_gens(mu);
    std::vector<char> in_gens(n + 1, 0);
    for (int j : gens) in_gens[j] = 1;

    Permutation u = Permutation::identity(n);
    Permutation r = w;
    for (;;) {
        int j = 0;
        for (int d : r.left_descents())
            if (in_gens[d]) {
                j = d;
                break;
            }
        if (!j) break;
        Permutation s = Permutation::simple(n, j);
        r = s * r;
        u = u * s;
    }
    return {u, r};
}

namespace {

int factorial(int n) {
    int f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

// Lehmer-code rank: position of w among all permutations in lex order.
int lehmer_rank(const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    int rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (w[j] < w[i]) ++smaller;
        rank = rank * (n - i) + smaller;
    }
    return rank;
}

}  // namespace

const SymmetricGroup& SymmetricGroup::get(int n) {
    if (n < 1 || n > kMaxN) throw BoundExceeded("symmetric group size out of supported range");
    static std::array<std::unique_ptr<SymmetricGroup>, kMaxN + 1> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    if (!cache[n]) cache[n].reset(new SymmetricGroup(n));
    return *cache[n];
}

SymmetricGroup::SymmetricGroup(int n) : n_(n) {
    const int N = factorial(n);
    perms_.reserve(N);
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
        perms_.emplace_back(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));

    std::sort(perms_.begin(), perms_.end(), [](const Permutation& a, const Permutation& b) {
        int la = a.length(), lb = b.length();
        if (la != lb) return la < lb;
        return a.oneline() < b.oneline();
    });

    lehmer_to_id_.assign(N, -1);
    for (int id = 0; id < N; ++id) lehmer_to_id_[lehmer_rank(perms_[id].oneline())] = id;

    const int g = std::max(1, n - 1);
    rmul_.assign(static_cast<size_t>(N) * g, 0);
    lmul_.assign(static_cast<size_t>(N) * g, 0);
    inv_.resize(N);
    len_.resize(N);
    rdesc_.assign(N, 0);
    ldesc_.assign(N, 0);
    for (int id = 0; id < N; ++id) {
        const Permutation& p = perms_[id];
        len_[id] = p.length();
        inv_[id] = id_of(p.inverse());
        for (int i = 1; i < n; ++i) {
            std::vector<int> r = p.oneline();
            std::swap(r[i - 1], r[i]);
            rmul_[idx(id, i)] = lehmer_to_id_[lehmer_rank(r)];
            std::vector<int> l = p.oneline();
            for (auto& v : l) {
                if (v == i)
                    v = i + 1;
                else if (v == i + 1)
                    v = i;
            }
            lmul_[idx(id, i)] = lehmer_to_id_[lehmer_rank(l)];
        }
        for (int d : p.right_descents()) rdesc_[id] |= 1u << d;
        for (int d : p.left_descents()) ldesc_[id] |= 1u << d;
    }
}

int SymmetricGroup::id_of(const Permutation& w) const {
    if (w.n() != n_) throw SizeMismatch("permutation does not belong to this group");
    return lehmer_to_id_[lehmer_rank(w.oneline())];
}

int SymmetricGroup::first_right_descent(int id) const {
    for (int i = 1; i < n_; ++i)
        if (right_descent(id, i)) return i;
    return 0;
}

std::vector<int> SymmetricGroup::reduced_word(int id) const {
    std::vector<int> word;
    while (int i = first_right_descent(id)) {
        word.push_back(i);
        id = rmul(id, i);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

int SymmetricGroup::mul(int a, int b) const { return id_of(perms_[a] * perms_[b]); }

}  // namespace skl

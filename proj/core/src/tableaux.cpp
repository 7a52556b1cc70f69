#include "spechtkl/tableaux.hpp"

#include <algorithm>
#include <map>

namespace skl {

std::vector<Composition> compositions_of(int n) {
    if (n == 0) return {Composition{}};
    std::vector<Composition> out;
    for (int first = 1; first <= n; ++first)
        for (const Composition& rest : compositions_of(n - first)) {
            Composition c{first};
            c.insert(c.end(), rest.begin(), rest.end());
            out.push_back(std::move(c));
        }
    return out;
}

namespace {

void partitions_rec(int n, int maxpart, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    partitions_rec(n, n, cur, out);
    return out;
}

Partition StandardTableau::shape() const {
    Partition s;
    for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
    return s;
}

Partition conjugate(const Partition& lambda) {
    if (!is_partition(lambda)) throw Error("conjugate of a non-partition");
    Partition c;
    if (lambda.empty()) return c;
    for (int j = 1; j <= lambda[0]; ++j) {
        int col = 0;
        for (int part : lambda)
            if (part >= j) ++col;
        c.push_back(col);
    }
    return c;
}

Partition sort_to_partition(const Composition& mu) {
    Partition p = mu;
    std::sort(p.begin(), p.end(), std::greater<int>());
    return p;
}

long long syt_count(const Partition& lambda) {
    if (!is_partition(lambda)) throw Error("tableau count of a non-partition");
    const int n = comp_sum(lambda);
    Partition conj = conjugate(lambda);
    long long fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    long long hooks = 1;
    for (size_t i = 0; i < lambda.size(); ++i)
        for (int j = 1; j <= lambda[i]; ++j)
            hooks *= lambda[i] - j + conj[j - 1] - static_cast<int>(i);
    return fact / hooks;
}

std::pair<StandardTableau, StandardTableau> rsk(const Permutation& w) {
    StandardTableau P, Q;
    for (int k = 1; k <= w.n(); ++k) {
        int x = w(k);
        size_t r = 0;
        for (;;) {
            if (r == P.rows.size()) {
                P.rows.push_back({x});
                Q.rows.push_back({k});
                break;
            }
            auto& row = P.rows[r];
            auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                Q.rows[r].push_back(k);
                break;
            }
            std::swap(x, *it);
            ++r;
        }
    }
    return {P, Q};
}

namespace {

// First-column hook lengths (a strictly decreasing beta-set). Removing a
// border strip of size t is beta_i -> beta_i - t, valid when the target is
// nonnegative and unoccupied; the sign is (-1)^(number of entries jumped).
std::vector<int> beta_set(const Partition& lambda) {
    const int m = static_cast<int>(lambda.size());
    std::vector<int> beta(m);
    for (int i = 0; i < m; ++i) beta[i] = lambda[i] + (m - 1 - i);
    return beta;
}

Partition partition_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    const int m = static_cast<int>(beta.size());
    Partition lambda;
    for (int i = 0; i < m; ++i) {
        int part = beta[i] - (m - 1 - i);
        if (part > 0) lambda.push_back(part);
    }
    return lambda;
}

using MnKey = std::pair<Partition, size_t>;

long long mn_rec(const Partition& shape, const std::vector<int>& cycles, size_t ci,
                 std::map<MnKey, long long>& memo) {
    if (ci == cycles.size()) return shape.empty() ? 1 : 0;
    auto key = MnKey{shape, ci};
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;

    const int t = cycles[ci];
    std::vector<int> beta = beta_set(shape);
    long long total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - t;
        if (target < 0) continue;
        bool occupied = false;
        int jumped = 0;
        for (size_t j = 0; j < beta.size(); ++j) {
            if (j == i) continue;
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < beta[i]) ++jumped;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        long long sub = mn_rec(partition_from_beta(std::move(nb)), cycles, ci + 1, memo);
        total += (jumped % 2 ? -sub : sub);
    }
    memo[key] = total;
    return total;
}

}  // namespace

long long mn_character(const Partition& lambda, const Partition& cycle_type) {
    if (comp_sum(lambda) != comp_sum(cycle_type))
        throw SizeMismatch("character arguments must partition the same n");
    std::map<MnKey, long long> memo;
    return mn_rec(lambda, cycle_type, 0, memo);
}

}  // namespace skl

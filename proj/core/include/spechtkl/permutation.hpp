#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "spechtkl/errors.hpp"
#include "spechtkl/partitions.hpp"

namespace skl {

/*
  Permutations of {1..n} in one-line notation. Composition is
  (x*y)(k) = x(y(k)), so right multiplication by s_i swaps positions
  i, i+1 of the one-line word and left multiplication swaps the values.
*/
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> oneline);
    static Permutation identity(int n);
    static Permutation simple(int n, int i);  // s_i, 1 <= i <= n-1

    int n() const { return static_cast<int>(w_.size()); }
    int operator()(int k) const { return w_[k - 1]; }  // 1-based
    const std::vector<int>& oneline() const { return w_; }

    Permutation inverse() const;
    int length() const;  // inversion count
    std::vector<int> right_descents() const;
    std::vector<int> left_descents() const;
    bool is_identity() const;

    bool operator==(const Permutation& o) const { return w_ == o.w_; }
    bool operator!=(const Permutation& o) const { return w_ != o.w_; }
    bool operator<(const Permutation& o) const { return w_ < o.w_; }

    std::string str() const;  // "3,1,2"

private:
    std::vector<int> w_;
};

Permutation compose(const Permutation& x, const Permutation& y);
inline Permutation operator*(const Permutation& x, const Permutation& y) { return compose(x, y); }

struct LengthDescents {
    int length;
    std::vector<int> right_descents;
    std::vector<int> left_descents;
};
LengthDescents length_and_descents(const Permutation& w);

// Bruhat order via the rank-matrix criterion:
// x <= w iff #{k <= i : x(k) >= j} <= #{k <= i : w(k) >= j} for all i, j.
bool bruhat_leq(const Permutation& x, const Permutation& w);

// Cycle lengths sorted weakly decreasing.
Partition cycle_type(const Permutation& w);

// Representative of a conjugacy class: disjoint cycles on consecutive blocks,
// together with the reduced word that builds it.
struct ClassRep {
    Permutation perm;
    std::vector<int> word;
};
ClassRep class_representative(const Partition& cycle_type);

/*
  Shortest representatives of the right cosets S_mu \ S_n. A permutation w is
  a representative iff it has no left descent at any generator index of S_mu;
  the generator indices are {1..n-1} minus the partial sums of mu.
*/
struct CosetData {
    Composition mu;
    std::vector<int> subgroup_gens;    // generator indices of S_mu
    std::vector<Permutation> reps;     // S(mu), sorted by (length, lex one-line)
    Permutation w_mu;                  // unique longest representative
};
CosetData coset_data(const Composition& mu);

// w = u * r with u in S_mu, r in S(mu), l(w) = l(u) + l(r).
std::pair<Permutation, Permutation> coset_factorize(const Permutation& w, const Composition& mu);

/*
  Interned S_n for n <= 7. Element ids run 0..n!-1 in the canonical order
  (length, lexicographic one-line), so id 0 is e and the last id is w_0.
  All tables are immutable after construction and shareable across threads.
*/
class SymmetricGroup {
public:
    static constexpr int kMaxN = 7;

    static const SymmetricGroup& get(int n);  // cached; throws BoundExceeded

    int n() const { return n_; }
    int size() const { return static_cast<int>(perms_.size()); }
    int num_gens() const { return n_ - 1; }

    const Permutation& perm(int id) const { return perms_[id]; }
    int id_of(const Permutation& w) const;

    int e() const { return 0; }
    int w0() const { return size() - 1; }
    int rmul(int id, int i) const { return rmul_[idx(id, i)]; }  // id * s_i
    int lmul(int id, int i) const { return lmul_[idx(id, i)]; }  // s_i * id
    int inv(int id) const { return inv_[id]; }
    int length(int id) const { return len_[id]; }
    bool right_descent(int id, int i) const { return (rdesc_[id] >> i) & 1u; }
    bool left_descent(int id, int i) const { return (ldesc_[id] >> i) & 1u; }
    // smallest right descent, 0 if id = e
    int first_right_descent(int id) const;
    // reduced word obtained by stripping the smallest right descent
    std::vector<int> reduced_word(int id) const;
    int mul(int a, int b) const;  // via the one-line forms

private:
    explicit SymmetricGroup(int n);
    size_t idx(int id, int i) const { return static_cast<size_t>(id) * num_gens() + (i - 1); }

    int n_;
    std::vector<Permutation> perms_;
    std::vector<int> lehmer_to_id_;
    std::vector<int> rmul_, lmul_, inv_, len_;
    std::vector<uint32_t> rdesc_, ldesc_;
};

}  // namespace skl

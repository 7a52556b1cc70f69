#pragma once

#include <map>
#include <vector>

#include "spechtkl/laurent.hpp"
#include "spechtkl/permutation.hpp"

namespace skl {

/*
  Hecke algebra H_n over Z[v,v^-1] with standard basis {H_w}. The quadratic
  relation is

      H_s^2 = H_e + (v^-1 - v) H_s,

  so H_s has eigenvalues v^-1 and -v; H_s + v kills the sign representation
  and acts by v + v^-1 on the trivial one. Right multiplication:

      H_w H_s = H_ws            if ws > w,
      H_w H_s = H_ws + (v^-1 - v) H_w   if ws < w.
*/
class HeckeElt {
public:
    explicit HeckeElt(const SymmetricGroup& G) : G_(&G) {}
    static HeckeElt basis(const SymmetricGroup& G, int id);

    const SymmetricGroup& group() const { return *G_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<int, LaurentPoly>& terms() const { return terms_; }
    LaurentPoly coeff(int id) const;
    void add(int id, const LaurentPoly& c);

    HeckeElt& operator+=(const HeckeElt& o);
    HeckeElt& operator-=(const HeckeElt& o);
    HeckeElt& operator*=(const LaurentPoly& c);
    bool operator==(const HeckeElt& o) const { return terms_ == o.terms_; }
    bool operator!=(const HeckeElt& o) const { return !(*this == o); }

private:
    const SymmetricGroup* G_;
    std::map<int, LaurentPoly> terms_;
};

// Right multiplication by H_{s_i}.
HeckeElt mult_by_gen(const HeckeElt& a, int i);

// Full product, expanding b along reduced words.
HeckeElt mult(const HeckeElt& a, const HeckeElt& b);

// Bar involution: v -> v^-1 on coefficients, H_w -> (H_{w^-1})^-1,
// with H_s^-1 = H_s + (v - v^-1) H_e.
HeckeElt bar_element(const HeckeElt& a);

/*
  Kazhdan-Lusztig table for S_n: for every w the unique bar-self-dual

      C_w = sum_{x <= w} h(x,w) H_x,   h(w,w) = 1,  h(x,w) in vZ[v] for x < w,

  built by induction on length with mu-corrections. Since every KL polynomial
  has nonzero lowest term, the stored support of row w is exactly the Bruhat
  interval [e, w].
*/
class KLTable {
public:
    using Row = std::map<int, LaurentPoly>;

    static KLTable build(int n);
    static KLTable from_rows(int n, std::vector<Row> rows);  // validates unitriangularity

    int n() const { return n_; }
    const SymmetricGroup& group() const { return *G_; }
    const std::vector<Row>& rows() const { return rows_; }

    const LaurentPoly& h(int x, int w) const;  // zero unless x <= w
    LaurentPoly h(const Permutation& x, const Permutation& w) const;

    // Coefficient of v in h(x,w), extended symmetrically; 0 if incomparable.
    long long mu(int x, int w) const;
    long long mu(const Permutation& x, const Permutation& w) const;

    // C_x (H_{s_i} + v) in the KL basis:
    //   (v + v^-1) C_x                      if x s_i < x,
    //   C_{x s_i} + sum_{z < x, z s_i < z} mu(z,x) C_z   otherwise.
    std::map<int, LaurentPoly> kl_product(int x, int i) const;

    // C_w in the standard basis.
    HeckeElt kl_element(int w) const;

    // Matrix of right multiplication by H_{s_i} + v on the standard basis,
    // canonical element order; columns hold images.
    std::vector<std::vector<LaurentPoly>> regular_model(int i) const;

    // Base-change matrix B[x][w] = h(x,w): column w is C_w in the H basis.
    std::vector<std::vector<LaurentPoly>> base_change() const;

private:
    KLTable(int n, const SymmetricGroup& G) : n_(n), G_(&G) {}
    int n_;
    const SymmetricGroup* G_;
    std::vector<Row> rows_;  // rows_[w][x] = h(x,w)
};

}  // namespace skl

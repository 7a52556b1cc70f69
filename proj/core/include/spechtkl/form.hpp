#pragma once

#include <string>
#include <vector>

#include "spechtkl/parabolic.hpp"
#include "spechtkl/polymat.hpp"
#include "spechtkl/specht.hpp"

namespace skl {

/*
  Gram matrix of the invariant form on the projective basis R(w_mu): the
  graded Cartan pairing

      G_{x,y} = sum_{w in S(mu)} n(w,x) n(w,y).

  Symmetric, diagonal in 1 + vZ[v], off-diagonal in vZ[v], nonzero
  determinant.
*/
struct GramMatrix {
    Composition mu;
    std::vector<Permutation> basis;  // = R(w_mu)
    std::vector<int> basis_ids;
    PolyMatrix entries;

    int dim() const { return static_cast<int>(basis.size()); }
};

GramMatrix gram(const ParabolicKLTable& pkl, const CellPartition& cells);

struct FormReport {
    bool ok;
    std::string detail;
};

// (a) T_i^T G = G T_i for every generator; (b) for x, w both with descent i,
// the (x,w) entry of G T_i equals (v+v^-1) G_{x,w}.
FormReport invariance_check(const GramMatrix& g, const SpechtModel& m);

// Solves {B symmetric, T_i^T B = B T_i for all i} over the rational function
// field by fraction-free elimination; checks the solution space is spanned
// by G alone.
FormReport uniqueness_check(const GramMatrix& g, const SpechtModel& m);

// Total dimension of the endomorphism ring: the diagonal Gram entry at v = 1.
// Throws NotInCell if w is not a basis element.
Integer endo_dim(const GramMatrix& g, const Permutation& w);

// Entries of G^{-1} expanded as power series through the requested order.
// Throws SingularGram if the determinant vanishes.
PolyMatrix simple_form(const GramMatrix& g, int order);

}  // namespace skl

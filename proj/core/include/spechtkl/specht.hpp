#pragma once

#include <string>
#include <vector>

#include "spechtkl/cells.hpp"
#include "spechtkl/hecke.hpp"
#include "spechtkl/polymat.hpp"
#include "spechtkl/tableaux.hpp"

namespace skl {

/*
  Cell module on R(w_mu). Column x of T_i holds the image of basis vector x
  under right multiplication by H_{s_i} + v, truncated to the cell:

      (v + v^-1) e_x                                   if x s_i < x,
      e_{x s_i} [x s_i in R] + sum_{z in R, z < x, z s_i < z} mu(z,x) e_z
                                                       otherwise.

  The simple-basis matrices are defined as S_i = T_i^T.
*/
struct SpechtModel {
    Composition mu;
    Partition lambda_prime;
    std::vector<Permutation> basis;  // R(w_mu), canonical order
    std::vector<int> basis_ids;
    std::vector<PolyMatrix> proj;    // T_1..T_{n-1}
    std::vector<PolyMatrix> simple;  // S_i = T_i^T

    int n() const { return comp_sum(mu); }
    int dim() const { return static_cast<int>(basis.size()); }
};

SpechtModel build_specht_model(const Composition& mu, const KLTable& kl, const CellPartition& cells);

struct RelationReport {
    bool ok;
    std::string detail;
};

// T_i^2 = (v+v^-1) T_i; braid relations for T_i - v; distant generators commute.
RelationReport verify_relations(const SpechtModel& m);

struct Eq6Report {
    bool ok;               // every literal column matches S_i
    int checked;           // number of (i, w) pairs
    int mismatches;
    std::string variant;   // on mismatch: which descent filter recovers S_i, if any
    std::string detail;
};

// Recomputes the simple-basis columns from the descent-side sum with the
// mu-function extended symmetrically and no descent restriction on the
// summation variable, and compares against S_i. Report-valued.
Eq6Report eq6_crosscheck(const SpechtModel& m, const KLTable& kl);

// Specialize sigma_i = T_i(1) - Id and multiply along a reduced word of the
// class representative; returns the trace.
long long character_at_one(const SpechtModel& m, const Partition& cycle_type);

struct IdentifyReport {
    bool ok;
    Partition lambda_prime;
    std::string detail;
};

// Checks dim = #SYT(lambda') and the v=1 character against the
// Murnaghan-Nakayama oracle on every cycle type. Throws IdentificationFailed
// on the first mismatch.
IdentifyReport identify_specht(const SpechtModel& m);

}  // namespace skl

#pragma once

#include <map>
#include <string>
#include <vector>

#include "spechtkl/hecke.hpp"
#include "spechtkl/permutation.hpp"

namespace skl {

/*
  Antispherical module of H_n at the Young subgroup S_mu: free Z[v,v^-1]-module
  on N_w, w in S(mu), induced from the sign character H_s -> -v of the
  parabolic subalgebra. Right action of H_{s_i} + v on the standard basis:

      N_w -> N_ws + v    N_w   if ws in S(mu), ws > w,
      N_w -> N_ws + v^-1 N_w   if ws in S(mu), ws < w,
      N_w -> 0                 if ws not in S(mu).
*/
class AntisphericalModule {
public:
    explicit AntisphericalModule(const Composition& mu);

    const Composition& mu() const { return mu_; }
    const SymmetricGroup& group() const { return *G_; }
    const CosetData& cosets() const { return cosets_; }
    int rep_count() const { return static_cast<int>(cosets_.reps.size()); }
    int rep_index(int id) const { return rep_index_[id]; }  // -1 outside S(mu)
    int rep_id(int index) const { return rep_ids_[index]; }

private:
    Composition mu_;
    const SymmetricGroup* G_;
    CosetData cosets_;
    std::vector<int> rep_index_;
    std::vector<int> rep_ids_;
};

// Coefficients keyed by interned element id; support must lie in S(mu).
struct AntisphericalElt {
    std::map<int, LaurentPoly> terms;

    bool is_zero() const { return terms.empty(); }
    LaurentPoly coeff(int id) const;
    void add(int id, const LaurentPoly& c);
    bool operator==(const AntisphericalElt& o) const { return terms == o.terms; }
};

AntisphericalElt antispherical_gen_action(const AntisphericalModule& M, const AntisphericalElt& a,
                                          int i);

/*
  Parabolic KL table: for each y in S(mu) the unique bar-self-dual element
  bN_y = sum_{x <= y} n(x,y) N_x with n(y,y) = 1 and n(x,y) in vZ[v] for
  x < y, extracted from bN_{y s} (H_s + v) by stripping the bar-symmetric
  parts of shorter coefficients in decreasing length order.
*/
class ParabolicKLTable {
public:
    using Row = std::map<int, LaurentPoly>;  // keyed by element id

    static ParabolicKLTable build(const Composition& mu);
    static ParabolicKLTable from_rows(const Composition& mu, std::vector<Row> rows);

    const Composition& mu() const { return module_.mu(); }
    const AntisphericalModule& module() const { return module_; }
    const std::vector<Row>& rows() const { return rows_; }  // rows_[rep index of y]

    const LaurentPoly& n_poly(int x_id, int y_id) const;  // zero unless both in S(mu), x <= y
    LaurentPoly n_poly(const Permutation& x, const Permutation& y) const;

    // Column (n(w,x))_{w in S(mu)} in canonical order; throws NotACosetRep.
    std::vector<LaurentPoly> decomposition_column(const Permutation& x) const;

private:
    explicit ParabolicKLTable(const Composition& mu) : module_(mu) {}
    AntisphericalModule module_;
    std::vector<Row> rows_;
};

// decomposition_columns operation of the build contract.
std::vector<LaurentPoly> decomposition_columns(const ParabolicKLTable& t, const Permutation& x);

struct ProjectionReport {
    bool ok;
    std::string detail;
};

// Independent oracle: n(x,y) = sum_{u in S_mu} (-v)^{l(u)} h(ux, y) for all
// x, y in S(mu). Throws CrosscheckFailed on the first mismatch.
ProjectionReport projection_crosscheck(const ParabolicKLTable& pkl, const KLTable& kl);

}  // namespace skl

#pragma once

#include <utility>
#include <vector>

#include "spechtkl/laurent.hpp"

namespace skl {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

PolyMatrix pm_identity(int m);
PolyMatrix pm_zero(int rows, int cols);
PolyMatrix pm_transpose(const PolyMatrix& a);
PolyMatrix pm_add(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix pm_sub(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix pm_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix pm_scale(const PolyMatrix& a, const LaurentPoly& c);
bool pm_equal(const PolyMatrix& a, const PolyMatrix& b);

// Rank over the fraction field Q(v), by fraction-free Bareiss elimination.
// Laurent entries are fine: divisions by previous pivots are exact in the
// Laurent ring.
int pm_rank(PolyMatrix a);

// Fraction-free Gauss-Jordan (Montante): returns (B, d) with a*B = B*a = d*I
// and d = det(a) up to the sign bookkeeping folded into both. Throws Error if
// a is singular.
std::pair<PolyMatrix, LaurentPoly> pm_inverse_scaled(PolyMatrix a);

}  // namespace skl

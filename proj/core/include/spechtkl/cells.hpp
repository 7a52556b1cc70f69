#pragma once

#include <string>
#include <vector>

#include "spechtkl/hecke.hpp"
#include "spechtkl/tableaux.hpp"

namespace skl {

/*
  Right cells of S_n: strongly connected components of the graph with an edge
  x -> z whenever z != x appears in the KL-basis support of C_x (H_{s_i} + v)
  for some generator i. Cells are ordered by their minimal element id; ids
  within a cell ascend.
*/
struct CellPartition {
    int n;
    std::vector<std::vector<int>> cells;
    std::vector<int> cell_of;  // element id -> index into cells
};

// Adjacency lists indexed by element id, targets sorted ascending.
std::vector<std::vector<int>> right_preorder_graph(const KLTable& kl);

CellPartition right_cells(const KLTable& kl);

// R(w_mu): the right cell containing w_mu, in canonical order.
// Throws CellEscapesCoset if the cell is not contained in S(mu).
std::vector<Permutation> cell_of_wmu(const CellPartition& cp, const Composition& mu);

struct RskReport {
    bool ok;
    char tableau;        // 'P' (insertion) or 'Q' (recording): constant on every cell
    std::string detail;
};

// Decides which RSK tableau is constant on every computed cell and checks
// that its fibers classify the cells exactly. Throws CrosscheckFailed with
// the offending cell if neither works.
RskReport rsk_crosscheck(const CellPartition& cp);

}  // namespace skl

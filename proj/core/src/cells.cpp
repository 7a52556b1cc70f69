#include "spechtkl/cells.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace skl {

std::vector<std::vector<int>> right_preorder_graph(const KLTable& kl) {
    const SymmetricGroup& G = kl.group();
    const int N = G.size();
    std::vector<std::vector<int>> adj(N);
    for (int x = 0; x < N; ++x) {
        for (int i = 1; i < G.n(); ++i) {
            if (G.right_descent(x, i)) continue;  // product is (v+v^-1)C_x, no new targets
            for (const auto& [z, c] : kl.kl_product(x, i))
                if (z != x) adj[x].push_back(z);
        }
        std::sort(adj[x].begin(), adj[x].end());
        adj[x].erase(std::unique(adj[x].begin(), adj[x].end()), adj[x].end());
    }
    return adj;
}

namespace {

// Iterative Tarjan; component ids are assigned in discovery order and
// remapped afterwards so cells sort by their minimal element.
std::vector<int> tarjan_scc(const std::vector<std::vector<int>>& adj, int& ncomp) {
    const int N = static_cast<int>(adj.size());
    std::vector<int> index(N, -1), low(N, 0), comp(N, -1);
    std::vector<char> onstack(N, 0);
    std::vector<int> stack;
    int counter = 0;
    ncomp = 0;

    struct Frame {
        int v;
        size_t edge;
    };
    for (int root = 0; root < N; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        onstack[root] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.edge < adj[f.v].size()) {
                int u = adj[f.v][f.edge++];
                if (index[u] == -1) {
                    index[u] = low[u] = counter++;
                    stack.push_back(u);
                    onstack[u] = 1;
                    call.push_back({u, 0});
                } else if (onstack[u]) {
                    low[f.v] = std::min(low[f.v], index[u]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    for (;;) {
                        int u = stack.back();
                        stack.pop_back();
                        onstack[u] = 0;
                        comp[u] = ncomp;
                        if (u == f.v) break;
                    }
                    ++ncomp;
                }
                int v = f.v;
                call.pop_back();
                if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            }
        }
    }
    return comp;
}

}  // namespace

CellPartition right_cells(const KLTable& kl) {
    auto adj = right_preorder_graph(kl);
    int ncomp = 0;
    std::vector<int> comp = tarjan_scc(adj, ncomp);

    std::vector<std::vector<int>> groups(ncomp);
    for (int id = 0; id < static_cast<int>(comp.size()); ++id) groups[comp[id]].push_back(id);
    std::sort(groups.begin(), groups.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });

    CellPartition cp;
    cp.n = kl.n();
    cp.cells = std::move(groups);
    cp.cell_of.assign(comp.size(), -1);
    for (int c = 0; c < static_cast<int>(cp.cells.size()); ++c)
        for (int id : cp.cells[c]) cp.cell_of[id] = c;
    return cp;
}

std::vector<Permutation> cell_of_wmu(const CellPartition& cp, const Composition& mu) {
    const SymmetricGroup& G = SymmetricGroup::get(cp.n);
    CosetData cd = coset_data(mu);
    std::vector<char> in_smu(G.size(), 0);
    for (const Permutation& r : cd.reps) in_smu[G.id_of(r)] = 1;

    const std::vector<int>& cell = cp.cells[cp.cell_of[G.id_of(cd.w_mu)]];
    std::vector<Permutation> out;
    for (int id : cell) {
        if (!in_smu[id])
            throw CellEscapesCoset("cell of w_mu contains " + G.perm(id).str() +
                                   " outside the coset representatives");
        out.push_back(G.perm(id));
    }
    return out;
}

RskReport rsk_crosscheck(const CellPartition& cp) {
    const SymmetricGroup& G = SymmetricGroup::get(cp.n);
    std::vector<StandardTableau> P(G.size()), Q(G.size());
    for (int id = 0; id < G.size(); ++id) {
        auto pq = rsk(G.perm(id));
        P[id] = std::move(pq.first);
        Q[id] = std::move(pq.second);
    }

    auto constant_on_all = [&](const std::vector<StandardTableau>& T, int& bad_cell) {
        for (int c = 0; c < static_cast<int>(cp.cells.size()); ++c)
            for (int id : cp.cells[c])
                if (!(T[id] == T[cp.cells[c][0]])) {
                    bad_cell = c;
                    return false;
                }
        return true;
    };

    int bad_p = -1, bad_q = -1;
    bool p_const = constant_on_all(P, bad_p);
    bool q_const = constant_on_all(Q, bad_q);
    if (!p_const && !q_const) {
        std::ostringstream os;
        os << "neither tableau is constant; first offending cells P:" << bad_p << " Q:" << bad_q;
        throw CrosscheckFailed(os.str());
    }

    const std::vector<StandardTableau>& T = p_const ? P : Q;
    std::map<StandardTableau, int> fiber_of;
    for (int c = 0; c < static_cast<int>(cp.cells.size()); ++c) {
        auto [it, inserted] = fiber_of.emplace(T[cp.cells[c][0]], c);
        if (!inserted) {
            std::ostringstream os;
            os << "cells " << it->second << " and " << c << " share a tableau";
            throw CrosscheckFailed(os.str());
        }
    }

    RskReport rep;
    rep.ok = true;
    rep.tableau = p_const ? 'P' : 'Q';
    std::ostringstream os;
    os << "cells classified by the " << (p_const ? "insertion" : "recording") << " tableau ("
       << cp.cells.size() << " cells)";
    rep.detail = os.str();
    return rep;
}

}  // namespace skl

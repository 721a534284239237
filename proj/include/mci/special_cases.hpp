#pragma once

#include <utility>
#include <vector>

#include "mci/graph.hpp"
#include "mci/report.hpp"

namespace mci {

// Per-vertex necessary sets for the tree-structured solver: nec[x] is the
// union of the unique bidirected and unique directed paths from x to s, and
// closure[x] the smallest superset of {x} closed under nec. closure[x] is a
// hedge for every hull vertex x != s.
struct NecClosure {
    std::vector<VertexSet> nec;
    std::vector<VertexSet> closure;
};

// Polynomial solver for graphs whose directed and bidirected edge subgraphs
// are both forests, target a single vertex s. After dominated closures are
// pruned the remaining hedges pairwise intersect only in {s}, so the optimum
// is PaC(s) plus the cheapest vertex of each hedge. Throws
// std::invalid_argument when either edge subgraph has an (undirected) cycle.
SolveReport solve_tree(const CausalGraph& g, int s);

// True when both edge-induced subgraphs are forests.
bool is_doubly_forest(const CausalGraph& g);

// Necessary sets over the hull of s (exposed for tests).
NecClosure nec_closures(const CausalGraph& g, int s, const VertexSet& hull);

// Conflict edges of the bounded-hedge solver: one undirected edge {a,b} per
// size-2 hedge {a,b} u S in the graph with PaC(S) removed. Provably
// bipartite: every edge joins Pa(S)\Bid(S) to Bid(S)\Pa(S).
std::vector<std::pair<int, int>> bounded_hedge_conflict_edges(const CausalGraph& g,
                                                              const VertexSet& s);

struct BoundedHedgeOptions {
    // Verify the size<=2 assumption by minimal-hedge enumeration while the
    // hull is at most this large; beyond it the caller's assertion is trusted
    // and bipartiteness acts as a partial validator.
    int guard_hull_limit = 40;
};

// Solver for the case where every minimal hedge F has |F\S| <= 2: min-weight
// vertex cover on the bipartite conflict graph via max-flow, plus PaC(S).
// Requires G_[S] to be a c-component. Throws std::invalid_argument when a
// minimal hedge of size >= 3 is detected.
SolveReport solve_bounded_hedge2(const CausalGraph& g, const VertexSet& s,
                                 const BoundedHedgeOptions& opts = {});

// Solver for well-separated cost functions: with the ancestors of S (minus S)
// sorted by cost, C({v_1..v_i}) < C(v_{i+1}) must hold for every prefix
// (e.g. C(v_i) = 2^i). Grows a prefix until identifiable, locks the last
// vertex, restarts; the optimum is unique. O(|V|^4). Throws
// std::invalid_argument when the prefix-dominance condition fails.
SolveReport solve_special_costs(const CausalGraph& g, const VertexSet& s);

}  // namespace mci

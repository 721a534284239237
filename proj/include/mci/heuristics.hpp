#pragma once

#include "mci/graph.hpp"
#include "mci/report.hpp"

namespace mci {

// Undirected-cut heuristic: on the hedge hull H (PaC removed), connect an
// auxiliary x to Pa(S) n H and y to S, keep the bidirected edges of G_[H] as
// undirected edges, and return the min-weight x-y vertex cut plus PaC.
// Always sound, not necessarily optimal. O(|V|^3).
SolveReport heuristic1(const CausalGraph& g, const VertexSet& s);

// Directed-cut heuristic: arcs of G_[H], x -> Bid(S) n H, S -> y.
SolveReport heuristic2(const CausalGraph& g, const VertexSet& s);

// Greedy hull shrinking: repeatedly intervene on the vertex x minimizing
// C(x) + C(remaining hull \ S), i.e. the cost of the trivial all-hull
// solution after removing x. O(|V|^5).
SolveReport heuristic_greedy(const CausalGraph& g, const VertexSet& s);

// Greedily drops the most expensive removable vertices of A (outside the
// forced PaC sets) while Q[S] stays identifiable. Requires A identifying.
VertexSet post_process(const CausalGraph& g, const VertexSet& s, const VertexSet& a);

struct AutoOptions {
    // Prefer the directed-cut heuristic unless directed edges in G_[H]
    // outnumber bidirected ones by this factor.
    double density_factor = 1.0;
};

// Strategy selection on G_[H] densities; returns the chosen heuristic's report.
SolveReport solve_auto(const CausalGraph& g, const VertexSet& s, const AutoOptions& opts = {});

// Runs all three heuristics and keeps the cheapest result (ties: heuristic1,
// heuristic2, greedy order).
SolveReport solve_best_of(const CausalGraph& g, const VertexSet& s);

}  // namespace mci

#pragma once

#include <utility>
#include <vector>

#include "mci/cost.hpp"
#include "mci/vertex_set.hpp"

namespace mci {

// Minimum-weight vertex cut between two terminals. `edges` are arcs when
// `directed` is true, undirected edges otherwise. Terminal vertices are never
// part of a cut; their weights are ignored.
struct CutProblem {
    int n = 0;
    bool directed = true;
    std::vector<std::pair<int, int>> edges;
    std::vector<Cost> weights;
    int source = 0;
    int sink = 0;
};

// Vertex set A (terminals excluded) that disconnects source from sink with
// minimum total weight; among minimum cuts, the source-side one (vertices
// whose split arc is saturated with the entry side residual-reachable).
// Solved as max-flow on the split network with infinite weights mapped to an
// unattainable capacity. Throws infeasible_error when every cut needs an
// infinite-weight vertex, std::invalid_argument on adjacent terminals.
VertexSet min_vertex_cut(const CutProblem& p);

}  // namespace mci

#pragma once

#include <optional>
#include <vector>

#include "mci/bench.hpp"
#include "mci/flow_cut.hpp"
#include "mci/graph.hpp"
#include "mci/hitting_set.hpp"

// Brute-force reference implementations, independent of the solver paths they
// check. All are exponential and expect small inputs.
namespace mci::oracles {

// Every F with S strictly inside F within `within` passing the hedge test.
std::vector<VertexSet> all_hedges(const CausalGraph& g, const VertexSet& s,
                                  const VertexSet& within);

// Minimum cost over all A (subset of) V\S with is_identifiable_after true,
// along with one witness set.
struct MinIntervention {
    Cost cost;
    VertexSet witness;
};
MinIntervention min_cost_intervention(const CausalGraph& g, const VertexSet& s);

// Minimum aggregate cost over all partitions of the maximal c-components,
// solving each block by subset enumeration.
Cost min_cost_collection(const CausalGraph& g, const VertexSet& s);

// Minimum weight and the lexicographically smallest witness among min-weight
// hitting sets (finite-weight elements only); nullopt when infeasible.
std::optional<MinIntervention> min_hitting_set(const HittingSetInstance& inst);

// Minimum weight over all vertex subsets whose removal disconnects the
// terminals; nullopt when every such subset has infinite weight.
std::optional<Cost> min_vertex_cut_value(const CutProblem& p);

// Minimum total weight over all vertex covers of the undirected graph.
double min_vertex_cover_weight(const WeightedGraph& h);

}  // namespace mci::oracles

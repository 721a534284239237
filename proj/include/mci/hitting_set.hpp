#pragma once

#include <vector>

#include "mci/cost.hpp"
#include "mci/vertex_set.hpp"

namespace mci {

// Weighted minimum hitting set instance. Sets are deduplicated at
// construction; an empty set makes the instance unsatisfiable and is
// rejected. Weights are indexed by element id and may be infinite.
class HittingSetInstance {
public:
    HittingSetInstance(VertexSet universe, std::vector<VertexSet> sets, std::vector<Cost> weights);

    const VertexSet& universe() const { return universe_; }
    const std::vector<VertexSet>& sets() const { return sets_; }
    const std::vector<Cost>& weights() const { return weights_; }
    Cost weight_of(const VertexSet& a) const;

private:
    VertexSet universe_;
    std::vector<VertexSet> sets_;
    std::vector<Cost> weights_;
};

// Minimum-weight hitting set by branch and bound, branching on the element of
// highest N(v)/w(v). Ties between equal-weight solutions go to the
// lexicographically smallest element set. Throws infeasible_error when some
// set can only be hit by infinite-weight elements.
VertexSet solve_exact(const HittingSetInstance& inst);

// Greedy log-factor approximation: repeatedly pick the element maximizing
// N(v)/w(v) (ties to the lowest index) until every set is hit.
VertexSet solve_greedy(const HittingSetInstance& inst);

bool is_hitting_set(const HittingSetInstance& inst, const VertexSet& a);

}  // namespace mci

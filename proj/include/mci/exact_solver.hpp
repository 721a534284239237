#pragma once

#include "mci/graph.hpp"
#include "mci/report.hpp"

namespace mci {

struct SolveOptions {
    // The hedge discovery loop is exponential in the worst case; trip a
    // resource error rather than spinning forever.
    long max_hedges = 1'000'000;
};

// Iterative hedge discovery + minimum hitting set. Returns the optimal single
// intervention set A (with PaC of each target component forced in) such that
// Q[S] is identifiable from Q[V\A]. S need not be a c-component. Throws
// infeasible_error when no finite-cost intervention exists.
SolveReport solve_exact_min_intervention(const CausalGraph& g, const VertexSet& s,
                                         const SolveOptions& opts = {});

// Same loop with the greedy hitting-set subroutine: sound but possibly
// suboptimal, logarithmic-factor approximation when few hedges are found.
SolveReport solve_approx_min_intervention(const CausalGraph& g, const VertexSet& s,
                                          const SolveOptions& opts = {});

// Variant that accumulates removed vertices and defers the hitting-set call
// until the accumulated set is identifying, trading hitting-set calls for
// extra hedge discoveries. Same optimal result as
// solve_exact_min_intervention.
SolveReport solve_exact_fewer_calls(const CausalGraph& g, const VertexSet& s,
                                    const SolveOptions& opts = {});

}  // namespace mci

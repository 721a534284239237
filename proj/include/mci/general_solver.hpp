#pragma once

#include <optional>
#include <vector>

#include "mci/exact_solver.hpp"
#include "mci/graph.hpp"
#include "mci/report.hpp"

namespace mci {

// Streams all partitions of {0..k-1} as restricted growth strings in
// lexicographic order (all-in-one-block first, all-singletons last); each
// partition appears exactly once, Bell(k) in total.
class SetPartitionEnumerator {
public:
    explicit SetPartitionEnumerator(int k);

    // Fills `rgs` (rgs[i] = block id of element i) and advances; false when
    // exhausted.
    bool next(std::vector<int>& rgs);

    static std::vector<std::vector<int>> blocks_of(const std::vector<int>& rgs);

private:
    int k_;
    bool done_ = false;
    std::vector<int> a_, max_;
};

enum class Subsolver { Exact, Greedy, Heuristic };

struct GeneralOptions {
    // Partitions grow as the Bell number; refuse beyond this many components.
    int max_components = 12;
    SolveOptions subsolver_options;
};

// Optimal intervention collection for arbitrary S: enumerate partitions of
// the maximal c-components of G_[S], solve the single-set problem per block
// with the chosen subsolver (Exact gives the globally optimal collection),
// and keep the cheapest aggregate. Block solves are memoized by block union.
SolveReport solve_general(const CausalGraph& g, const VertexSet& s, Subsolver subsolver,
                          const GeneralOptions& opts = {});

// When every s in S is non-intervenable (C(s)=inf) a single optimal
// intervention set exists; delegates to the exact single-set solver and wraps
// the answer as a singleton collection. With `override_costs` the S costs are
// forced to infinity first; otherwise they must already be infinite.
SolveReport solve_singleton_infinite_s(const CausalGraph& g, const VertexSet& s,
                                       bool override_costs = true,
                                       const SolveOptions& opts = {});

}  // namespace mci

#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "mci/cost.hpp"
#include "mci/graph.hpp"
#include "mci/vertex_set.hpp"

namespace mci {

// A collection of intervention sets {A_1,...,A_m}; the joint experimental
// data identifies the target. Kept duplicate-free; aggregate cost is the sum
// over member sets.
struct InterventionCollection {
    std::vector<VertexSet> sets;

    void add(const VertexSet& a) {
        if (std::find(sets.begin(), sets.end(), a) == sets.end()) sets.push_back(a);
    }

    Cost aggregate_cost(const CausalGraph& g) const {
        Cost total;
        for (const auto& a : sets) total += g.cost_of(a);
        return total;
    }

    friend bool operator==(const InterventionCollection& a, const InterventionCollection& b) {
        if (a.sets.size() != b.sets.size()) return false;
        for (const auto& s : a.sets)
            if (std::find(b.sets.begin(), b.sets.end(), s) == b.sets.end()) return false;
        return true;
    }
};

struct SolveReport {
    std::string algorithm;
    InterventionCollection result;
    Cost cost;
    long hedges_discovered = 0;
    long hitting_set_calls = 0;
    double wall_ms = 0.0;

    // Singleton solvers place exactly one set in the collection.
    const VertexSet& single_set() const { return result.sets.front(); }
};

}  // namespace mci

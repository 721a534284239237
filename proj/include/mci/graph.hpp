#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mci/cost.hpp"
#include "mci/vertex_set.hpp"

namespace mci {

// Semi-Markovian causal graph: a DAG of directed edges plus a symmetric,
// irreflexive relation of bidirected edges, with a per-vertex intervention
// cost. Immutable after construction; algorithms shrink the working vertex
// set through `within` parameters instead of copying the graph.
class CausalGraph {
public:
    CausalGraph(int n, std::vector<std::pair<int, int>> directed,
                std::vector<std::pair<int, int>> bidirected, std::vector<Cost> costs,
                std::vector<std::string> names = {});

    int size() const { return n_; }
    VertexSet all_vertices() const { return VertexSet::full(n_); }

    const VertexSet& parents_of(int v) const { return pa_[v]; }
    const VertexSet& children_of(int v) const { return ch_[v]; }
    const VertexSet& bidirected_of(int v) const { return bid_[v]; }

    Cost cost(int v) const { return costs_[v]; }
    const std::vector<Cost>& costs() const { return costs_; }
    Cost cost_of(const VertexSet& xs) const;

    // Canonically sorted edge lists (directed by (u,v); bidirected with u<v).
    const std::vector<std::pair<int, int>>& directed_edges() const { return directed_; }
    const std::vector<std::pair<int, int>>& bidirected_edges() const { return bidirected_; }

    bool has_names() const { return !names_.empty(); }
    const std::vector<std::string>& names() const { return names_; }
    // Name if present, else the decimal index.
    std::string label(int v) const;
    // Index of a vertex given by name or decimal index; -1 if unknown.
    int find_vertex(const std::string& token) const;

    // Same structure with different costs (used for the C(s)=inf override).
    CausalGraph with_costs(std::vector<Cost> costs) const;

    friend bool operator==(const CausalGraph& a, const CausalGraph& b);

private:
    int n_;
    std::vector<std::pair<int, int>> directed_;
    std::vector<std::pair<int, int>> bidirected_;
    std::vector<Cost> costs_;
    std::vector<std::string> names_;
    std::vector<VertexSet> pa_, ch_, bid_;
};

// Throws std::out_of_range on a bad index.
VertexSet make_vertex_set(const CausalGraph& g, std::span<const int> vertices);

// Pa(X) = union of parents of members, excluding X itself.
VertexSet parents(const CausalGraph& g, const VertexSet& x);
// Bid(X): vertices outside X sharing a bidirected edge with X.
VertexSet bid_neighbors(const CausalGraph& g, const VertexSet& x);
// PaC(X) = Pa(X) n Bid(X); forced members of every identifying intervention.
VertexSet pac(const CausalGraph& g, const VertexSet& x);

// All u in `within` with a directed path to S using only vertices of
// `within`; includes S. Requires S (subset of) within.
VertexSet ancestors(const CausalGraph& g, const VertexSet& s, const VertexSet& within);

// Vertices of `within` reachable from S via bidirected edges inside `within`;
// includes S. Requires S (subset of) within.
VertexSet c_component_of(const CausalGraph& g, const VertexSet& s, const VertexSet& within);

// True iff G_[X] is a single c-component (bidirected-connected); vacuous for
// the empty set.
bool is_c_component(const CausalGraph& g, const VertexSet& x);

// Unique partition of X by bidirected connectivity in G_[X], ordered by
// smallest member.
std::vector<VertexSet> maximal_c_components(const CausalGraph& g, const VertexSet& x);

// Ancestors of S after deleting T; reduces a P(S|do(T)) query to Q[.] form.
// Requires S and T disjoint.
VertexSet ancestral_target(const CausalGraph& g, const VertexSet& s, const VertexSet& t);

}  // namespace mci

#pragma once

#include <cstdint>
#include <vector>

#include "mci/graph.hpp"

namespace mci {

// A collection of hedge sets discovered for a target S; every stored F is a
// hedge (S strictly inside F), deduplicated.
struct HedgeInstance {
    VertexSet target;
    std::vector<VertexSet> hedges;
};

// Hedge test straight from the definition: S strictly inside F, F equals the
// ancestors of S in G_[F], and G_[F] is a c-component. Requires G_[S] to be a
// c-component and S (subset of) F; violations throw std::invalid_argument.
bool is_hedge(const CausalGraph& g, const VertexSet& s, const VertexSet& f);

// Hedge hull of S restricted to `within`: alternating fixed point of the
// c-component and ancestor steps starting from F = within. Returns S itself
// iff no hedge for Q[S] survives inside `within`. Requires G_[S] to be a
// c-component and S (subset of) within. O(|V|^3).
VertexSet hedge_hull(const CausalGraph& g, const VertexSet& s, const VertexSet& within);

// Union of hulls of the maximal c-components of G_[S]; works for arbitrary S.
VertexSet hedge_hull_general(const CausalGraph& g, const VertexSet& s, const VertexSet& within);

// True iff Q[S] is identifiable from Q[V \ A]. Any A intersecting S makes the
// effect unidentifiable; with `strict` that case throws instead of returning
// false.
bool is_identifiable_after(const CausalGraph& g, const VertexSet& s, const VertexSet& a,
                           bool strict = false);

struct EnumerationLimits {
    int max_extra = 4;                       // max |F \ S| considered
    std::uint64_t max_subsets = 10'000'000;  // work cap; exceeding throws
};

// All minimal hedges F with |F\S| <= limits.max_extra, found by enumerating
// candidate subsets in increasing cardinality (lexicographic within one) and
// skipping supersets of hedges already found. Throws resource_limit_error
// when the subset budget is exhausted.
HedgeInstance enumerate_minimal_hedges(const CausalGraph& g, const VertexSet& s,
                                       const VertexSet& within, const EnumerationLimits& limits);

}  // namespace mci

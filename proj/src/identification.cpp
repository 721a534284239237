#include "mci/identification.hpp"

#include <stdexcept>

#include "mci/errors.hpp"

namespace mci {

namespace {

void require_c_component(const CausalGraph& g, const VertexSet& s, const char* where) {
    if (!is_c_component(g, s))
        throw std::invalid_argument(std::string(where) + ": G_[S] must be a c-component");
}

}  // namespace

bool is_hedge(const CausalGraph& g, const VertexSet& s, const VertexSet& f) {
    require_c_component(g, s, "is_hedge");
    if (!s.is_subset_of(f)) throw std::invalid_argument("is_hedge: S must be a subset of F");
    if (f == s) return false;
    return ancestors(g, s, f) == f && c_component_of(g, s, f) == f;
}

VertexSet hedge_hull(const CausalGraph& g, const VertexSet& s, const VertexSet& within) {
    if (s.empty()) return s;
    require_c_component(g, s, "hedge_hull");
    VertexSet f = within;
    while (true) {
        VertexSet f2 = ancestors(g, s, c_component_of(g, s, f));
        if (f2 == f) return f;
        f = std::move(f2);
    }
}

VertexSet hedge_hull_general(const CausalGraph& g, const VertexSet& s, const VertexSet& within) {
    VertexSet out(g.size());
    for (const auto& si : maximal_c_components(g, s)) out |= hedge_hull(g, si, within);
    return out;
}

bool is_identifiable_after(const CausalGraph& g, const VertexSet& s, const VertexSet& a,
                           bool strict) {
    if (a.intersects(s)) {
        if (strict)
            throw std::invalid_argument(
                "is_identifiable_after: intervention intersects the target set");
        return false;
    }
    VertexSet live = g.all_vertices() - a;
    for (const auto& si : maximal_c_components(g, s))
        if (hedge_hull(g, si, live) != si) return false;
    return true;
}

HedgeInstance enumerate_minimal_hedges(const CausalGraph& g, const VertexSet& s,
                                       const VertexSet& within,
                                       const EnumerationLimits& limits) {
    require_c_component(g, s, "enumerate_minimal_hedges");
    if (!s.is_subset_of(within))
        throw std::invalid_argument("enumerate_minimal_hedges: S must be a subset of `within`");

    HedgeInstance out{s, {}};
    std::vector<int> candidates = (within - s).to_vector();
    int m = static_cast<int>(candidates.size());
    std::vector<VertexSet> found_extras;  // hedges as F\S, for the superset skip
    std::uint64_t examined = 0;

    // k-subsets of `candidates` in lexicographic order, size ascending. Any
    // hedge found at a smaller size bars all its supersets, which is exactly
    // the minimality filter.
    std::vector<int> idx;
    for (int k = 1; k <= limits.max_extra && k <= m; ++k) {
        idx.assign(k, 0);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            if (++examined > limits.max_subsets)
                throw resource_limit_error("enumerate_minimal_hedges: subset budget of " +
                                           std::to_string(limits.max_subsets) + " exceeded");
            VertexSet extra(g.size());
            for (int i : idx) extra.add(candidates[i]);
            bool skip = false;
            for (const auto& h : found_extras) {
                if (h.is_subset_of(extra)) {
                    skip = true;
                    break;
                }
            }
            if (!skip && is_hedge(g, s, s | extra)) {
                found_extras.push_back(extra);
                out.hedges.push_back(s | extra);
            }
            // next combination
            int i = k - 1;
            while (i >= 0 && idx[i] == m - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

}  // namespace mci

#include "mci/hitting_set.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <unordered_set>

#include "mci/errors.hpp"

namespace mci {

HittingSetInstance::HittingSetInstance(VertexSet universe, std::vector<VertexSet> sets,
                                       std::vector<Cost> weights)
    : universe_(std::move(universe)), weights_(std::move(weights)) {
    if (static_cast<int>(weights_.size()) != universe_.universe())
        throw std::invalid_argument("hitting set: weights must cover the ambient vertex range");
    std::unordered_set<VertexSet, VertexSet::Hash> seen;
    for (auto& f : sets) {
        if (f.empty())
            throw std::invalid_argument("hitting set: empty set makes the instance infeasible");
        if (!f.is_subset_of(universe_))
            throw std::invalid_argument("hitting set: set not contained in the universe");
        if (seen.insert(f).second) sets_.push_back(std::move(f));
    }
}

Cost HittingSetInstance::weight_of(const VertexSet& a) const {
    Cost total;
    for (int v : a) total += weights_[v];
    return total;
}

bool is_hitting_set(const HittingSetInstance& inst, const VertexSet& a) {
    for (const auto& f : inst.sets())
        if (!f.intersects(a)) return false;
    return true;
}

namespace {

// v1 strictly better than v2 under the max N(v)/w(v) rule; finite weights only.
bool better_ratio(int n1, double w1, int v1, int n2, double w2, int v2) {
    bool z1 = w1 == 0.0, z2 = w2 == 0.0;
    if (z1 != z2) return z1;
    double lhs = z1 ? static_cast<double>(n1) : n1 * w2;
    double rhs = z1 ? static_cast<double>(n2) : n2 * w1;
    if (lhs != rhs) return lhs > rhs;
    return v1 < v2;
}

struct ExactSearch {
    const std::vector<Cost>& weights;
    std::optional<std::pair<Cost, VertexSet>> best;

    // Sum of min weights over a greedily chosen disjoint subfamily; a valid
    // lower bound on the cost of hitting `remaining`.
    Cost lower_bound(const std::vector<VertexSet>& remaining, int ambient) const {
        Cost bound;
        VertexSet used(ambient);
        for (const auto& f : remaining) {
            if (f.intersects(used)) continue;
            Cost mn = Cost::infinity();
            for (int v : f) mn = std::min(mn, weights[v]);
            bound += mn;
            used |= f;
        }
        return bound;
    }

    void run(std::vector<VertexSet> remaining, VertexSet chosen, Cost chosen_cost) {
        if (remaining.empty()) {
            if (!best || chosen_cost < best->first ||
                (chosen_cost == best->first &&
                 VertexSet::lex_compare(chosen, best->second) < 0))
                best = {chosen_cost, std::move(chosen)};
            return;
        }
        Cost bound = chosen_cost + lower_bound(remaining, chosen.universe());
        if (best && bound > best->first) return;

        int pick = -1, pick_n = 0;
        double pick_w = 0.0;
        VertexSet elements(chosen.universe());
        for (const auto& f : remaining) elements |= f;
        for (int v : elements) {
            int n = 0;
            for (const auto& f : remaining) n += f.contains(v);
            double w = weights[v].value();
            if (pick == -1 || better_ratio(n, w, v, pick_n, pick_w, pick)) {
                pick = v;
                pick_n = n;
                pick_w = w;
            }
        }

        // include `pick`
        {
            std::vector<VertexSet> rest;
            for (const auto& f : remaining)
                if (!f.contains(pick)) rest.push_back(f);
            VertexSet c = chosen;
            c.add(pick);
            run(std::move(rest), std::move(c), chosen_cost + weights[pick]);
        }
        // exclude `pick`
        {
            std::vector<VertexSet> rest;
            rest.reserve(remaining.size());
            for (auto& f : remaining) {
                f.remove(pick);
                if (f.empty()) return;  // set no longer coverable on this branch
                rest.push_back(std::move(f));
            }
            run(std::move(rest), std::move(chosen), chosen_cost);
        }
    }
};

VertexSet finite_elements(const HittingSetInstance& inst) {
    VertexSet fin(inst.universe().universe());
    for (int v : inst.universe())
        if (!inst.weights()[v].is_infinite()) fin.add(v);
    return fin;
}

std::vector<VertexSet> restrict_to_finite(const HittingSetInstance& inst, const VertexSet& fin) {
    std::vector<VertexSet> sets;
    sets.reserve(inst.sets().size());
    for (const auto& f : inst.sets()) {
        VertexSet r = f & fin;
        if (r.empty())
            throw infeasible_error(
                "hitting set: a set can only be hit by infinite-weight elements");
        sets.push_back(std::move(r));
    }
    return sets;
}

}  // namespace

VertexSet solve_exact(const HittingSetInstance& inst) {
    int ambient = inst.universe().universe();
    VertexSet fin = finite_elements(inst);
    auto sets = restrict_to_finite(inst, fin);
    ExactSearch search{inst.weights(), std::nullopt};
    search.run(std::move(sets), VertexSet(ambient), Cost::zero());
    return search.best->second;
}

VertexSet solve_greedy(const HittingSetInstance& inst) {
    int ambient = inst.universe().universe();
    VertexSet fin = finite_elements(inst);
    auto remaining = restrict_to_finite(inst, fin);
    VertexSet out(ambient);
    while (!remaining.empty()) {
        int pick = -1, pick_n = 0;
        double pick_w = 0.0;
        VertexSet elements(ambient);
        for (const auto& f : remaining) elements |= f;
        for (int v : elements) {
            int n = 0;
            for (const auto& f : remaining) n += f.contains(v);
            double w = inst.weights()[v].value();
            if (pick == -1 || better_ratio(n, w, v, pick_n, pick_w, pick)) {
                pick = v;
                pick_n = n;
                pick_w = w;
            }
        }
        out.add(pick);
        std::erase_if(remaining, [&](const VertexSet& f) { return f.contains(pick); });
    }
    return out;
}

}  // namespace mci

#include "mci/general_solver.hpp"

#include <chrono>
#include <stdexcept>
#include <unordered_map>

#include "mci/errors.hpp"
#include "mci/heuristics.hpp"

namespace mci {

SetPartitionEnumerator::SetPartitionEnumerator(int k) : k_(k), a_(k, 0), max_(k, 0) {
    if (k < 0) throw std::invalid_argument("partition enumeration needs k >= 0");
}

bool SetPartitionEnumerator::next(std::vector<int>& rgs) {
    if (done_) return false;
    rgs = a_;
    // advance: rightmost position that can still grow within the RGS bound
    for (int i = k_ - 1; i > 0; --i) {
        if (a_[i] <= max_[i - 1]) {
            a_[i] += 1;
            max_[i] = std::max(max_[i - 1], a_[i]);
            for (int j = i + 1; j < k_; ++j) {
                a_[j] = 0;
                max_[j] = max_[i];
            }
            return true;
        }
    }
    done_ = true;
    return true;
}

std::vector<std::vector<int>> SetPartitionEnumerator::blocks_of(const std::vector<int>& rgs) {
    int blocks = 0;
    for (int b : rgs) blocks = std::max(blocks, b + 1);
    std::vector<std::vector<int>> out(blocks);
    for (int i = 0; i < static_cast<int>(rgs.size()); ++i) out[rgs[i]].push_back(i);
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

SolveReport run_subsolver(const CausalGraph& g, const VertexSet& target, Subsolver which,
                          const SolveOptions& opts) {
    switch (which) {
        case Subsolver::Exact:
            return solve_exact_min_intervention(g, target, opts);
        case Subsolver::Greedy:
            return solve_approx_min_intervention(g, target, opts);
        case Subsolver::Heuristic:
            return solve_auto(g, target);
    }
    throw std::logic_error("unknown subsolver");
}

const char* subsolver_name(Subsolver which) {
    switch (which) {
        case Subsolver::Exact:
            return "general-exact";
        case Subsolver::Greedy:
            return "general-greedy";
        case Subsolver::Heuristic:
            return "general-heuristic";
    }
    return "general";
}

}  // namespace

SolveReport solve_general(const CausalGraph& g, const VertexSet& s, Subsolver subsolver,
                          const GeneralOptions& opts) {
    auto start = Clock::now();
    if (s.universe() != g.size())
        throw std::invalid_argument("target set does not match the graph's vertex range");

    SolveReport report;
    report.algorithm = subsolver_name(subsolver);

    auto components = maximal_c_components(g, s);
    int k = static_cast<int>(components.size());
    if (k > opts.max_components)
        throw resource_limit_error(
            "target splits into " + std::to_string(k) + " c-components (cap " +
            std::to_string(opts.max_components) +
            "); partitions grow as the Bell number - consider a plain heuristic solve");

    if (k == 0) {
        report.result.add(VertexSet(g.size()));
        report.wall_ms =
            std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        return report;
    }

    // Block solves keyed by the block's vertex union; many partitions share
    // blocks, so this dominates the partition loop for larger k.
    struct BlockResult {
        VertexSet set;
        Cost cost;
    };
    std::unordered_map<VertexSet, std::optional<BlockResult>, VertexSet::Hash> memo;
    auto solve_block = [&](const VertexSet& target) -> const std::optional<BlockResult>& {
        auto it = memo.find(target);
        if (it == memo.end()) {
            std::optional<BlockResult> r;
            try {
                SolveReport sub = run_subsolver(g, target, subsolver, opts.subsolver_options);
                report.hedges_discovered += sub.hedges_discovered;
                report.hitting_set_calls += sub.hitting_set_calls;
                r = BlockResult{sub.single_set(), sub.cost};
            } catch (const infeasible_error&) {
                // block unsolvable at finite cost; partitions using it are skipped
            }
            it = memo.emplace(target, std::move(r)).first;
        }
        return it->second;
    };

    std::optional<InterventionCollection> best;
    Cost best_cost = Cost::infinity();
    bool best_set_valid = false;

    SetPartitionEnumerator parts(k);
    std::vector<int> rgs;
    while (parts.next(rgs)) {
        InterventionCollection collection;
        Cost cost;
        bool feasible = true;
        for (const auto& block : SetPartitionEnumerator::blocks_of(rgs)) {
            VertexSet target(g.size());
            for (int ci : block) target |= components[ci];
            const auto& solved = solve_block(target);
            if (!solved) {
                feasible = false;
                break;
            }
            collection.add(solved->set);
        }
        if (!feasible) continue;
        cost = collection.aggregate_cost(g);
        if (!best_set_valid || cost < best_cost) {
            best = std::move(collection);
            best_cost = cost;
            best_set_valid = true;
        }
    }

    if (!best_set_valid)
        throw infeasible_error("no partition of the target admits a finite-cost collection");

    report.result = std::move(*best);
    report.cost = best_cost;
    report.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return report;
}

SolveReport solve_singleton_infinite_s(const CausalGraph& g, const VertexSet& s,
                                       bool override_costs, const SolveOptions& opts) {
    if (s.universe() != g.size())
        throw std::invalid_argument("target set does not match the graph's vertex range");
    if (!override_costs) {
        for (int v : s)
            if (!g.cost(v).is_infinite())
                throw std::invalid_argument("solve_singleton_infinite_s: C(s) must be infinite "
                                            "for every target vertex (or pass override_costs)");
        SolveReport r = solve_exact_min_intervention(g, s, opts);
        r.algorithm = "singleton-infinite-s";
        return r;
    }
    std::vector<Cost> costs = g.costs();
    for (int v : s) costs[v] = Cost::infinity();
    SolveReport r = solve_exact_min_intervention(g.with_costs(std::move(costs)), s, opts);
    r.algorithm = "singleton-infinite-s";
    return r;
}

}  // namespace mci

#include "mci/exact_solver.hpp"

#include <cassert>
#include <chrono>
#include <stdexcept>
#include <unordered_set>

#include "mci/errors.hpp"
#include "mci/hitting_set.hpp"
#include "mci/identification.hpp"

namespace mci {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_target(const CausalGraph& g, const VertexSet& s) {
    if (s.universe() != g.size())
        throw std::invalid_argument("target set does not match the graph's vertex range");
}

// Union of PaC over the maximal c-components of G_[S]; every identifying
// intervention must contain it. Never intersects S (a bidirected parent
// inside S would contradict component maximality).
VertexSet forced_pac(const CausalGraph& g, const std::vector<VertexSet>& components) {
    VertexSet forced(components.empty() ? 0 : components.front().universe());
    if (components.empty()) return forced;
    for (const auto& si : components) forced |= pac(g, si);
    return forced;
}

void require_finite(const CausalGraph& g, const VertexSet& forced) {
    for (int v : forced)
        if (g.cost(v).is_infinite())
            throw infeasible_error("no finite-cost solution: non-intervenable vertex " +
                                   g.label(v) + " must be intervened on");
}

int cheapest_vertex(const CausalGraph& g, const VertexSet& candidates) {
    int pick = -1;
    for (int v : candidates)
        if (pick == -1 || g.cost(v) < g.cost(pick)) pick = v;
    return pick;
}

struct DiscoveredHedge {
    VertexSet hedge;      // the hull recorded when it was one removal from collapsing
    int last_removed;
};

// Inner loop of the exact algorithm: peel the cheapest vertex off the hull of
// one component until the next removal would collapse it to S_i, and record
// that last hull as a discovered hedge.
DiscoveredHedge discover_hedge(const CausalGraph& g, const VertexSet& si, const VertexSet& s_all,
                               VertexSet h) {
    while (true) {
        VertexSet candidates = h - s_all;
        assert(!candidates.empty());
        int a = cheapest_vertex(g, candidates);
        VertexSet shrunk = h;
        shrunk.remove(a);
        VertexSet h2 = hedge_hull(g, si, shrunk);
        if (h2 == si) return {std::move(h), a};
        h = std::move(h2);
    }
}

struct HedgePool {
    std::vector<VertexSet> hedges;
    std::unordered_set<VertexSet, VertexSet::Hash> seen;

    bool add(const VertexSet& h) {
        if (!seen.insert(h).second) return false;
        hedges.push_back(h);
        return true;
    }
};

VertexSet solve_pool(const CausalGraph& g, const HedgePool& pool, const VertexSet& s_all,
                     bool greedy) {
    std::vector<VertexSet> to_hit;
    to_hit.reserve(pool.hedges.size());
    VertexSet universe(g.size());
    for (const auto& f : pool.hedges) {
        to_hit.push_back(f - s_all);
        universe |= to_hit.back();
    }
    HittingSetInstance inst(universe, std::move(to_hit), g.costs());
    return greedy ? solve_greedy(inst) : solve_exact(inst);
}

SolveReport run(const CausalGraph& g, const VertexSet& s, const SolveOptions& opts, bool greedy,
                bool defer_hitting_set, const char* name) {
    auto start = Clock::now();
    require_target(g, s);

    SolveReport report;
    report.algorithm = name;

    auto components = maximal_c_components(g, s);
    VertexSet forced = components.empty() ? VertexSet(g.size()) : forced_pac(g, components);
    assert(!forced.intersects(s));
    require_finite(g, forced);

    auto first_open_hull = [&](const VertexSet& removed) -> std::pair<int, VertexSet> {
        VertexSet live = g.all_vertices() - removed - forced;
        for (std::size_t i = 0; i < components.size(); ++i) {
            VertexSet h = hedge_hull(g, components[i], live);
            if (h != components[i]) return {static_cast<int>(i), std::move(h)};
        }
        return {-1, VertexSet(g.size())};
    };

    auto finish = [&](VertexSet a) {
        a |= forced;
        report.cost = g.cost_of(a);
        report.result.add(a);
        report.wall_ms = ms_since(start);
        return report;
    };

    if (first_open_hull(VertexSet(g.size())).first == -1) return finish(VertexSet(g.size()));

    HedgePool pool;
    VertexSet working(g.size());  // hitting-set solution, or accumulated removals when deferring
    while (true) {
        auto [open, hull] = first_open_hull(working);
        if (open == -1) {
            if (!defer_hitting_set) return finish(working);
            VertexSet hit = solve_pool(g, pool, s, greedy);
            report.hitting_set_calls++;
            if (is_identifiable_after(g, s, hit | forced)) return finish(std::move(hit));
            working = std::move(hit);
            continue;
        }
        auto found = discover_hedge(g, components[open], s, std::move(hull));
        bool added = pool.add(found.hedge);
        assert(added);  // new hedges never intersect the current working set
        (void)added;
        if (++report.hedges_discovered > opts.max_hedges)
            throw resource_limit_error("hedge budget of " + std::to_string(opts.max_hedges) +
                                       " exceeded");
        if (defer_hitting_set) {
            working.add(found.last_removed);
        } else {
            working = solve_pool(g, pool, s, greedy);
            report.hitting_set_calls++;
        }
    }
}

}  // namespace

SolveReport solve_exact_min_intervention(const CausalGraph& g, const VertexSet& s,
                                         const SolveOptions& opts) {
    return run(g, s, opts, /*greedy=*/false, /*defer=*/false, "exact");
}

SolveReport solve_approx_min_intervention(const CausalGraph& g, const VertexSet& s,
                                          const SolveOptions& opts) {
    return run(g, s, opts, /*greedy=*/true, /*defer=*/false, "approx");
}

SolveReport solve_exact_fewer_calls(const CausalGraph& g, const VertexSet& s,
                                    const SolveOptions& opts) {
    return run(g, s, opts, /*greedy=*/false, /*defer=*/true, "fewer-calls");
}

}  // namespace mci

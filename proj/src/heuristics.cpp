#include "mci/heuristics.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <stdexcept>

#include "mci/errors.hpp"
#include "mci/flow_cut.hpp"
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

VertexSet forced_pac(const CausalGraph& g, const std::vector<VertexSet>& components) {
    VertexSet forced(g.size());
    for (const auto& si : components) forced |= pac(g, si);
    return forced;
}

void require_finite(const CausalGraph& g, const VertexSet& forced) {
    for (int v : forced)
        if (g.cost(v).is_infinite())
            throw infeasible_error("no finite-cost solution: non-intervenable vertex " +
                                   g.label(v) + " must be intervened on");
}

// Min-weight x-y vertex cut on the auxiliary graph over hull n {x,y}.
// Vertices of S are present but carry infinite weight so they are never cut.
VertexSet cut_on_hull(const CausalGraph& g, const VertexSet& hull, const VertexSet& s_all,
                      const VertexSet& x_side, const VertexSet& y_side, bool undirected) {
    std::vector<int> nodes = hull.to_vector();
    int m = static_cast<int>(nodes.size());
    std::vector<int> local(g.size(), -1);
    for (int i = 0; i < m; ++i) local[nodes[i]] = i;

    CutProblem p;
    p.n = m + 2;
    p.directed = !undirected;
    p.source = m;
    p.sink = m + 1;
    p.weights.assign(p.n, Cost::zero());
    for (int i = 0; i < m; ++i)
        p.weights[i] = s_all.contains(nodes[i]) ? Cost::infinity() : g.cost(nodes[i]);

    if (undirected) {
        for (auto [u, v] : g.bidirected_edges())
            if (hull.contains(u) && hull.contains(v)) p.edges.emplace_back(local[u], local[v]);
    } else {
        for (auto [u, v] : g.directed_edges())
            if (hull.contains(u) && hull.contains(v)) p.edges.emplace_back(local[u], local[v]);
    }
    for (int v : x_side) p.edges.emplace_back(p.source, local[v]);
    for (int v : y_side) p.edges.emplace_back(local[v], p.sink);

    VertexSet cut_local = min_vertex_cut(p);
    VertexSet cut(g.size());
    for (int i : cut_local) cut.add(nodes[i]);
    return cut;
}

SolveReport run_cut_heuristic(const CausalGraph& g, const VertexSet& s, bool undirected,
                              const char* name) {
    auto start = Clock::now();
    require_target(g, s);

    auto components = maximal_c_components(g, s);
    VertexSet forced = forced_pac(g, components);
    require_finite(g, forced);

    VertexSet a = forced;
    for (const auto& si : components) {
        VertexSet hull = hedge_hull(g, si, g.all_vertices() - a);
        if (hull == si) continue;
        VertexSet x_side = undirected ? (parents(g, si) & hull) : (bid_neighbors(g, si) & hull);
        a |= cut_on_hull(g, hull, s, x_side, si, undirected);
    }

    SolveReport report;
    report.algorithm = name;
    report.cost = g.cost_of(a);
    report.result.add(a);
    report.wall_ms = ms_since(start);
    return report;
}

}  // namespace

SolveReport heuristic1(const CausalGraph& g, const VertexSet& s) {
    return run_cut_heuristic(g, s, /*undirected=*/true, "heuristic1");
}

SolveReport heuristic2(const CausalGraph& g, const VertexSet& s) {
    return run_cut_heuristic(g, s, /*undirected=*/false, "heuristic2");
}

SolveReport heuristic_greedy(const CausalGraph& g, const VertexSet& s) {
    auto start = Clock::now();
    require_target(g, s);

    auto components = maximal_c_components(g, s);
    VertexSet forced = forced_pac(g, components);
    require_finite(g, forced);

    VertexSet a = forced;
    for (const auto& si : components) {
        VertexSet hull = hedge_hull(g, si, g.all_vertices() - a);
        while (hull != si) {
            VertexSet candidates = hull - s;
            assert(!candidates.empty());
            int pick = -1;
            Cost pick_score;
            VertexSet pick_hull(g.size());
            for (int v : candidates) {
                VertexSet shrunk = hull;
                shrunk.remove(v);
                VertexSet h2 = hedge_hull(g, si, shrunk);
                Cost score = g.cost(v) + g.cost_of(h2 - s);
                if (pick == -1 || score < pick_score) {
                    pick = v;
                    pick_score = score;
                    pick_hull = std::move(h2);
                }
            }
            a.add(pick);
            hull = std::move(pick_hull);
        }
    }

    SolveReport report;
    report.algorithm = "greedy";
    report.cost = g.cost_of(a);
    report.result.add(a);
    report.wall_ms = ms_since(start);
    return report;
}

VertexSet post_process(const CausalGraph& g, const VertexSet& s, const VertexSet& a) {
    require_target(g, s);
    if (!is_identifiable_after(g, s, a))
        throw std::invalid_argument("post_process: input set must already be identifying");

    VertexSet forced = forced_pac(g, maximal_c_components(g, s));
    VertexSet out = a;
    while (true) {
        std::vector<int> candidates = (out - forced).to_vector();
        // highest cost first, ties to the highest index
        std::stable_sort(candidates.begin(), candidates.end(), [&](int u, int v) {
            if (g.cost(u) != g.cost(v)) return g.cost(v) < g.cost(u);
            return u > v;
        });
        bool removed = false;
        for (int v : candidates) {
            VertexSet trial = out;
            trial.remove(v);
            if (is_identifiable_after(g, s, trial)) {
                out = std::move(trial);
                removed = true;
                break;
            }
        }
        if (!removed) return out;
    }
}

SolveReport solve_auto(const CausalGraph& g, const VertexSet& s, const AutoOptions& opts) {
    require_target(g, s);
    VertexSet forced = forced_pac(g, maximal_c_components(g, s));
    VertexSet hull = hedge_hull_general(g, s, g.all_vertices() - forced);

    long directed = 0, bidirected = 0;
    for (auto [u, v] : g.directed_edges())
        if (hull.contains(u) && hull.contains(v)) ++directed;
    for (auto [u, v] : g.bidirected_edges())
        if (hull.contains(u) && hull.contains(v)) ++bidirected;

    bool prefer_h1 = static_cast<double>(directed) > opts.density_factor * static_cast<double>(bidirected);
    return prefer_h1 ? heuristic1(g, s) : heuristic2(g, s);
}

SolveReport solve_best_of(const CausalGraph& g, const VertexSet& s) {
    SolveReport best = heuristic1(g, s);
    for (auto* f : {&heuristic2, &heuristic_greedy}) {
        SolveReport r = (*f)(g, s);
        if (r.cost < best.cost) best = std::move(r);
    }
    return best;
}

}  // namespace mci

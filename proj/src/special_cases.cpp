#include "mci/special_cases.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
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

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    bool unite(int u, int v) {
        u = find(u);
        v = find(v);
        if (u == v) return false;
        parent[u] = v;
        return true;
    }
};

bool edges_form_forest(int n, const std::vector<std::pair<int, int>>& edges) {
    UnionFind uf(n);
    for (auto [u, v] : edges)
        if (!uf.unite(u, v)) return false;
    return true;
}

// Unique path from x to s in a forest, as the parent chain of a BFS tree
// rooted at s. `neighbors` maps a vertex to the adjacent vertices to follow.
template <typename Neighbors>
std::vector<VertexSet> paths_to(const CausalGraph& g, int s, const VertexSet& within,
                                Neighbors neighbors) {
    std::vector<int> parent(g.size(), -1);
    VertexSet reached(g.size());
    reached.add(s);
    std::vector<int> queue{s};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        for (int v : neighbors(u) & within) {
            if (reached.contains(v)) continue;
            reached.add(v);
            parent[v] = u;
            queue.push_back(v);
        }
    }
    std::vector<VertexSet> path(g.size(), VertexSet(g.size()));
    for (int x : reached) {
        VertexSet p(g.size());
        for (int v = x; v != -1; v = parent[v]) p.add(v);
        path[x] = std::move(p);
    }
    return path;
}

int cheapest_member(const CausalGraph& g, const VertexSet& xs) {
    int pick = -1;
    for (int v : xs)
        if (pick == -1 || g.cost(v) < g.cost(pick)) pick = v;
    return pick;
}

}  // namespace

bool is_doubly_forest(const CausalGraph& g) {
    return edges_form_forest(g.size(), g.directed_edges()) &&
           edges_form_forest(g.size(), g.bidirected_edges());
}

NecClosure nec_closures(const CausalGraph& g, int s, const VertexSet& hull) {
    // Both path families stay inside the hull: a hull vertex lies in some
    // hedge, and forest uniqueness pins its paths to that hedge's.
    auto bid_paths = paths_to(g, s, hull, [&](int u) { return g.bidirected_of(u); });
    auto dir_paths = paths_to(g, s, hull, [&](int u) { return g.children_of(u); });

    NecClosure out;
    out.nec.assign(g.size(), VertexSet(g.size()));
    out.closure.assign(g.size(), VertexSet(g.size()));
    for (int x : hull) out.nec[x] = bid_paths[x] | dir_paths[x];
    for (int x : hull) {
        VertexSet cl(g.size());
        cl.add(x);
        std::vector<int> work{x};
        while (!work.empty()) {
            int y = work.back();
            work.pop_back();
            for (int z : out.nec[y] - cl) {
                cl.add(z);
                work.push_back(z);
            }
        }
        out.closure[x] = std::move(cl);
    }
    return out;
}

SolveReport solve_tree(const CausalGraph& g, int s) {
    auto start = Clock::now();
    if (s < 0 || s >= g.size()) throw std::out_of_range("solve_tree: bad target vertex");
    if (!is_doubly_forest(g))
        throw std::invalid_argument(
            "solve_tree: directed and bidirected edge subgraphs must both be forests; "
            "use the general solver");

    VertexSet target = VertexSet::of(g.size(), {s});
    VertexSet forced = pac(g, target);
    for (int v : forced)
        if (g.cost(v).is_infinite())
            throw infeasible_error("no finite-cost solution: non-intervenable vertex " +
                                   g.label(v) + " must be intervened on");

    SolveReport report;
    report.algorithm = "tree";

    VertexSet hull = hedge_hull(g, target, g.all_vertices() - forced);
    VertexSet a = forced;
    if (hull != target) {
        NecClosure nc = nec_closures(g, s, hull);
        std::vector<VertexSet> pool;
        for (int x : hull - target) {
            const VertexSet& cl = nc.closure[x];
            if (std::find(pool.begin(), pool.end(), cl) == pool.end()) pool.push_back(cl);
        }
        // keep inclusion-minimal closures; survivors intersect only in {s}
        std::vector<VertexSet> minimal;
        for (const auto& f : pool) {
            bool dominated = false;
            for (const auto& other : pool)
                if (other != f && other.is_subset_of(f)) {
                    dominated = true;
                    break;
                }
            if (!dominated) minimal.push_back(f);
        }
        for (const auto& f : minimal) {
            int pick = cheapest_member(g, f - target);
            if (g.cost(pick).is_infinite())
                throw infeasible_error(
                    "no finite-cost solution: a hedge contains only non-intervenable vertices");
            a.add(pick);
        }
    }

    report.cost = g.cost_of(a);
    report.result.add(a);
    report.wall_ms = ms_since(start);
    return report;
}

std::vector<std::pair<int, int>> bounded_hedge_conflict_edges(const CausalGraph& g,
                                                              const VertexSet& s) {
    VertexSet forced = pac(g, s);
    VertexSet hull = hedge_hull(g, s, g.all_vertices() - forced);
    std::vector<int> candidates = (hull - s).to_vector();
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        for (std::size_t j = i + 1; j < candidates.size(); ++j) {
            VertexSet f = s;
            f.add(candidates[i]);
            f.add(candidates[j]);
            if (is_hedge(g, s, f)) edges.emplace_back(candidates[i], candidates[j]);
        }
    }
    return edges;
}

SolveReport solve_bounded_hedge2(const CausalGraph& g, const VertexSet& s,
                                 const BoundedHedgeOptions& opts) {
    auto start = Clock::now();
    if (s.universe() != g.size())
        throw std::invalid_argument("target set does not match the graph's vertex range");
    if (!is_c_component(g, s))
        throw std::invalid_argument("solve_bounded_hedge2: G_[S] must be a c-component");

    VertexSet forced = pac(g, s);
    for (int v : forced)
        if (g.cost(v).is_infinite())
            throw infeasible_error("no finite-cost solution: non-intervenable vertex " +
                                   g.label(v) + " must be intervened on");
    VertexSet hull = hedge_hull(g, s, g.all_vertices() - forced);

    if ((hull - s).count() <= opts.guard_hull_limit) {
        auto minimal = enumerate_minimal_hedges(g, s, hull, {.max_extra = 3});
        for (const auto& f : minimal.hedges)
            if ((f - s).count() >= 3)
                throw std::invalid_argument(
                    "solve_bounded_hedge2: found a minimal hedge of size >= 3");
    }

    auto conflict = bounded_hedge_conflict_edges(g, s);

    SolveReport report;
    report.algorithm = "bounded-hedge2";
    VertexSet a = forced;

    if (!conflict.empty()) {
        // Orient every conflict edge from the Pa(S)\Bid(S) side to the
        // Bid(S)\Pa(S) side and solve the vertex cover as an x-y vertex cut.
        VertexSet pa_side = parents(g, s) - bid_neighbors(g, s);
        VertexSet bid_side = bid_neighbors(g, s) - parents(g, s);
        VertexSet involved(g.size());
        for (auto& [u, v] : conflict) {
            if (pa_side.contains(v) && bid_side.contains(u)) std::swap(u, v);
            if (!pa_side.contains(u) || !bid_side.contains(v))
                throw std::logic_error("size-2 hedge conflict graph is not bipartite");
            involved.add(u);
            involved.add(v);
        }
        std::vector<int> nodes = involved.to_vector();
        std::vector<int> local(g.size(), -1);
        for (std::size_t i = 0; i < nodes.size(); ++i) local[nodes[i]] = static_cast<int>(i);

        CutProblem p;
        p.n = static_cast<int>(nodes.size()) + 2;
        p.directed = true;
        p.source = p.n - 2;
        p.sink = p.n - 1;
        p.weights.assign(p.n, Cost::zero());
        for (std::size_t i = 0; i < nodes.size(); ++i) p.weights[i] = g.cost(nodes[i]);
        for (auto [u, v] : conflict) p.edges.emplace_back(local[u], local[v]);
        for (int u : involved & pa_side) p.edges.emplace_back(p.source, local[u]);
        for (int v : involved & bid_side) p.edges.emplace_back(local[v], p.sink);

        VertexSet cover_local = min_vertex_cut(p);
        for (int i : cover_local) a.add(nodes[i]);
    }

    report.cost = g.cost_of(a);
    report.result.add(a);
    report.wall_ms = ms_since(start);
    return report;
}

SolveReport solve_special_costs(const CausalGraph& g, const VertexSet& s) {
    auto start = Clock::now();
    if (s.universe() != g.size())
        throw std::invalid_argument("target set does not match the graph's vertex range");

    std::vector<int> order = (ancestors(g, s, g.all_vertices()) - s).to_vector();
    std::sort(order.begin(), order.end(), [&](int u, int v) {
        if (g.cost(u) != g.cost(v)) return g.cost(u) < g.cost(v);
        return u < v;
    });
    Cost prefix;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        prefix += g.cost(order[i]);
        if (!(prefix < g.cost(order[i + 1])))
            throw std::invalid_argument(
                "solve_special_costs: costs must satisfy C({v_1..v_i}) < C(v_{i+1}) after "
                "sorting (strictly separated costs)");
    }

    SolveReport report;
    report.algorithm = "special-costs";

    VertexSet locked(g.size());
    if (!is_identifiable_after(g, s, locked)) {
        while (true) {
            VertexSet trial = locked;
            int stop = -1;
            for (int v : order) {
                trial.add(v);
                if (is_identifiable_after(g, s, trial)) {
                    stop = v;
                    break;
                }
            }
            if (stop == -1)
                throw std::logic_error("special costs: full ancestor prefix not identifying");
            locked.add(stop);
            if (is_identifiable_after(g, s, locked)) break;
        }
    }

    report.cost = g.cost_of(locked);
    if (report.cost.is_infinite())
        throw infeasible_error("no finite-cost solution exists for this target");
    report.result.add(locked);
    report.wall_ms = ms_since(start);
    return report;
}

}  // namespace mci

// Acceptance suite: executes every acceptance criterion at its stated
// tolerance and prints one pass/fail line per criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mci/bench.hpp"
#include "mci/exact_solver.hpp"
#include "mci/general_solver.hpp"
#include "mci/heuristics.hpp"
#include "mci/identification.hpp"
#include "mci/special_cases.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace mci;
using namespace mci::fixtures;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
    void note(const std::string& text) {
        if (ok) detail = text;
    }
};

// Random c-component target among the upper part of the causal order; richer
// than the benchmark rule (which nearly always yields singletons at small n)
// so the oracle comparisons exercise multi-vertex targets too.
VertexSet sample_target(const CausalGraph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    int n = g.size();
    int pool = std::max(2, n / 3);
    for (int attempt = 0; attempt < 200; ++attempt) {
        VertexSet s(n);
        for (int v = n - pool; v < n; ++v)
            if (rng() % 5 < 2) s.add(v);
        if (s.empty()) continue;
        if (is_c_component(g, s)) return s;
    }
    VertexSet s(n);
    s.add(n - 1);
    return s;
}

Check criterion1_oracle_optimality() {
    Check c;
    for (int i = 0; i < 200; ++i) {
        int n = 4 + i % 9;  // 4..12
        CausalGraph g = gen_erdos_renyi_admg(n, 0.35, 0.25, split_seed(101, i));
        VertexSet s = sample_target(g, split_seed(102, i));
        auto oracle = oracles::min_cost_intervention(g, s);
        SolveReport r = solve_exact_min_intervention(g, s);
        if (!(r.cost == oracle.cost)) {
            c.fail("instance " + std::to_string(i) + ": exact cost " + r.cost.to_string() +
                   " != brute-force " + oracle.cost.to_string());
            return c;
        }
        if (!is_identifiable_after(g, s, r.single_set())) {
            c.fail("instance " + std::to_string(i) + ": result not identifying");
            return c;
        }
    }
    c.note("200 instances, exact == brute force");
    return c;
}

Check criterion2_hull_correctness() {
    Check c;
    for (int i = 0; i < 200; ++i) {
        int n = 4 + i % 6;  // 4..9, so |V\S| <= 8
        CausalGraph g = gen_erdos_renyi_admg(n, 0.35, 0.3, split_seed(201, i));
        VertexSet s = sample_target(g, split_seed(202, i));
        VertexSet expected = s;
        for (const auto& f : oracles::all_hedges(g, s, g.all_vertices())) expected |= f;
        if (hedge_hull(g, s, g.all_vertices()) != expected) {
            c.fail("instance " + std::to_string(i) + ": hull != union of enumerated hedges");
            return c;
        }
    }
    c.note("200 instances, hull == union of all hedges");
    return c;
}

Check criterion3_heuristic_soundness() {
    Check c;
    for (int i = 0; i < 500; ++i) {
        int n = 10 + i % 41;  // 10..50
        CausalGraph g = gen_erdos_renyi_admg(n, 0.35, 0.25, split_seed(301, i));
        auto s = pick_target(g, split_seed(302, i), 1000);
        if (!s) {
            c.fail("instance " + std::to_string(i) + ": no c-component target found");
            return c;
        }
        SolveReport results[] = {heuristic1(g, *s), heuristic2(g, *s), heuristic_greedy(g, *s),
                                 solve_approx_min_intervention(g, *s)};
        for (const auto& r : results) {
            if (!is_identifiable_after(g, *s, r.single_set())) {
                c.fail("instance " + std::to_string(i) + ": " + r.algorithm + " unsound");
                return c;
            }
        }
    }
    c.note("500 instances x 4 algorithms, all outputs identify");
    return c;
}

Check criterion4_wmvc_roundtrip() {
    Check c;
    std::mt19937_64 rng(40404);
    for (int i = 0; i < 50; ++i) {
        WeightedGraph h;
        h.n = 2 + static_cast<int>(rng() % 8);  // 2..9
        for (int u = 0; u < h.n; ++u)
            for (int v = u + 1; v < h.n; ++v)
                if (rng() % 100 < 35) h.edges.emplace_back(u, v);
        for (int v = 0; v < h.n; ++v) h.weights.push_back(1.0 + static_cast<double>(rng() % 4));
        WmvcReduction red = reduce_wmvc(h);
        SolveReport r = solve_exact_min_intervention(
            red.graph, VertexSet::of(red.graph.size(), {red.target}));
        double cover = oracles::min_vertex_cover_weight(h);
        if (!(r.cost == Cost::finite(cover))) {
            c.fail("graph " + std::to_string(i) + ": intervention cost " + r.cost.to_string() +
                   " != min cover weight " + std::to_string(cover));
            return c;
        }
    }
    WeightedGraph k3;
    k3.n = 3;
    k3.edges = {{0, 1}, {0, 2}, {1, 2}};
    k3.weights = {1, 1, 1};
    WmvcReduction red = reduce_wmvc(k3);
    SolveReport r =
        solve_exact_min_intervention(red.graph, VertexSet::of(red.graph.size(), {red.target}));
    if (!(r.cost == Cost::finite(2))) {
        c.fail("K3 fixture: expected cost 2, got " + r.cost.to_string());
        return c;
    }
    c.note("50 random graphs + K3, reduction cost == min vertex cover weight");
    return c;
}

Check criterion5_paper_fixtures() {
    Check c;
    CausalGraph g1 = fig1();
    VertexSet s1 = VertexSet::of(g1.size(), {F1_S1, F1_S2});
    SolveReport r1 = solve_exact_min_intervention(g1, s1);
    if (r1.single_set() != VertexSet::of(g1.size(), {F1_V2})) {
        c.fail("fig1 target {s1,s2} did not solve to {v2}");
        return c;
    }

    CausalGraph g2 = fig2();
    VertexSet s2 = VertexSet::of(g2.size(), {F2_S1, F2_S2, F2_S3});
    SolveReport r2 = solve_general(g2, s2, Subsolver::Exact);
    InterventionCollection expected;
    expected.add(VertexSet::of(g2.size(), {F2_S1}));
    expected.add(VertexSet::of(g2.size(), {F2_S2}));
    if (!(r2.cost == Cost::finite(2)) || !(r2.result == expected)) {
        c.fail("fig2 general solve: expected {{s1},{s2}} at cost 2, got cost " +
               r2.cost.to_string());
        return c;
    }

    SolveReport r3 = solve_singleton_infinite_s(g2, s2);
    if (r3.cost < Cost::finite(10)) {
        c.fail("fig2 with C(S)=inf: singleton cost " + r3.cost.to_string() + " < 10");
        return c;
    }
    c.note("fig1 -> {v2}; fig2 -> {{s1},{s2}} cost 2; C(S)=inf singleton cost " +
           r3.cost.to_string());
    return c;
}

CausalGraph random_doubly_forest(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> directed, bidirected;
    std::vector<Cost> costs;
    for (int v = 1; v < n; ++v) {
        if (rng() % 10 < 7) directed.emplace_back(v, static_cast<int>(rng() % v));
        if (rng() % 10 < 7) bidirected.emplace_back(v, static_cast<int>(rng() % v));
    }
    for (int v = 0; v < n; ++v)
        costs.push_back(Cost::finite(1.0 + static_cast<double>(rng() % 4)));
    return CausalGraph(n, std::move(directed), std::move(bidirected), std::move(costs));
}

Check criterion6_special_cases() {
    Check c;
    for (int i = 0; i < 100; ++i) {
        CausalGraph g = random_doubly_forest(5 + i % 8, split_seed(601, i));
        SolveReport tree = solve_tree(g, 0);
        SolveReport exact = solve_exact_min_intervention(g, VertexSet::of(g.size(), {0}));
        if (!(tree.cost == exact.cost)) {
            c.fail("tree instance " + std::to_string(i) + ": " + tree.cost.to_string() +
                   " != " + exact.cost.to_string());
            return c;
        }
    }
    for (int i = 0; i < 100; ++i) {
        int n = 5 + i % 8;
        CausalGraph base = gen_erdos_renyi_admg(n, 0.35, 0.25, split_seed(602, i));
        std::vector<Cost> costs(n);
        for (int v = 0; v < n; ++v) costs[v] = Cost::finite(std::pow(2.0, v + 1));
        CausalGraph g = base.with_costs(std::move(costs));
        VertexSet s = sample_target(g, split_seed(603, i));
        SolveReport special = solve_special_costs(g, s);
        SolveReport exact = solve_exact_min_intervention(g, s);
        if (!(special.cost == exact.cost)) {
            c.fail("special-cost instance " + std::to_string(i) + ": " +
                   special.cost.to_string() + " != " + exact.cost.to_string());
            return c;
        }
    }
    for (int i = 0; i < 100; ++i) {
        CausalGraph g = gen_erdos_renyi_admg(9, 0.3, 0.25, split_seed(604, i));
        VertexSet s = sample_target(g, split_seed(605, i));
        auto edges = bounded_hedge_conflict_edges(g, s);
        // bipartite: every edge joins Pa(S)\Bid(S) to Bid(S)\Pa(S)
        VertexSet pa_side = parents(g, s) - bid_neighbors(g, s);
        VertexSet bid_side = bid_neighbors(g, s) - parents(g, s);
        for (auto [a, b] : edges) {
            bool ab = pa_side.contains(a) && bid_side.contains(b);
            bool ba = pa_side.contains(b) && bid_side.contains(a);
            if (ab == ba) {
                c.fail("conflict graph instance " + std::to_string(i) + " not bipartite");
                return c;
            }
        }
    }
    c.note("tree (100) and special-cost (100) match exact; conflict graphs bipartite (100)");
    return c;
}

Check criterion7_regret_protocol() {
    Check c;
    std::ostringstream summary;
    for (int n : {10, 15, 20}) {
        ExperimentConfig cfg;
        cfg.n = n;
        cfg.trials = 40;
        cfg.seed = 700 + n;
        cfg.roster = {"exact", "approx", "heuristic1", "heuristic2", "greedy"};
        auto records = run_regret_experiment(cfg);
        double exact_wall = 0.0;
        std::vector<double> heuristic_walls;
        for (const auto& r : records) {
            if (r.algorithm == "exact") {
                if (r.regret != 0.0) {
                    c.fail("n=" + std::to_string(n) + " trial " + std::to_string(r.trial) +
                           ": exact regret nonzero");
                    return c;
                }
                exact_wall += r.wall_ms;
            } else if (r.regret < 0.0) {
                c.fail("n=" + std::to_string(n) + ": negative regret for " + r.algorithm);
                return c;
            }
        }
        auto summaries = summarize_regrets(records, cfg.seed);
        summary << " n=" << n << ":";
        for (const auto& s : summaries) {
            summary << " " << s.algorithm << "=" << s.mean_regret;
            if (n == 20 && (s.algorithm == "heuristic1" || s.algorithm == "heuristic2" ||
                            s.algorithm == "greedy")) {
                double exact_mean = exact_wall / cfg.trials;
                if (!(s.mean_wall_ms < exact_mean)) {
                    c.fail("n=20: " + s.algorithm + " mean wall " +
                           std::to_string(s.mean_wall_ms) + " ms not below exact " +
                           std::to_string(exact_mean) + " ms");
                    return c;
                }
            }
        }
        // CSV emission is part of the protocol
        std::ostringstream csv;
        write_regret_csv(csv, cfg, records);
        if (csv.str().find("exact") == std::string::npos) {
            c.fail("CSV emission failed");
            return c;
        }
    }
    c.note("mean regrets:" + summary.str() + "; heuristics faster than exact at n=20");
    return c;
}

Check criterion8_hedge_economy() {
    Check c;
    ExperimentConfig cfg;
    cfg.n = 10;
    cfg.trials = 50;
    cfg.seed = 808;
    auto records = count_hedges_vs_discovered(cfg);
    double ratio_sum = 0.0;
    int with_hedges = 0;
    for (const auto& r : records) {
        if (r.discovered > r.total_hedges) {
            c.fail("trial " + std::to_string(r.trial) + ": discovered " +
                   std::to_string(r.discovered) + " > total " + std::to_string(r.total_hedges));
            return c;
        }
        if (r.total_hedges > 0) {
            ratio_sum += static_cast<double>(r.discovered) / static_cast<double>(r.total_hedges);
            ++with_hedges;
        }
    }
    std::ostringstream note;
    note << "50 instances, discovered <= total on all; mean discovered/total = "
         << (with_hedges ? ratio_sum / with_hedges : 0.0) << " over " << with_hedges
         << " instances with hedges";
    c.note(note.str());
    return c;
}

Check criterion9_complexity_smoke() {
    Check c;
    CausalGraph g = gen_erdos_renyi_admg(200, 0.35, 0.25, 909);
    auto s = pick_target(g, 910, 1000);
    if (!s) {
        c.fail("no target found at n=200");
        return c;
    }
    auto t0 = Clock::now();
    VertexSet hull = hedge_hull_general(g, *s, g.all_vertices());
    double hull_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    if (hull_ms >= 1000.0) {
        c.fail("hedge hull took " + std::to_string(hull_ms) + " ms (budget 1000)");
        return c;
    }
    double h1_ms, h2_ms, gr_ms;
    {
        auto t = Clock::now();
        heuristic1(g, *s);
        h1_ms = std::chrono::duration<double, std::milli>(Clock::now() - t).count();
    }
    {
        auto t = Clock::now();
        heuristic2(g, *s);
        h2_ms = std::chrono::duration<double, std::milli>(Clock::now() - t).count();
    }
    {
        auto t = Clock::now();
        heuristic_greedy(g, *s);
        gr_ms = std::chrono::duration<double, std::milli>(Clock::now() - t).count();
    }
    for (double ms : {h1_ms, h2_ms, gr_ms}) {
        if (ms >= 5000.0) {
            c.fail("a heuristic took " + std::to_string(ms) + " ms (budget 5000)");
            return c;
        }
    }
    std::ostringstream note;
    note << "n=200: hull " << hull_ms << " ms, heuristic1 " << h1_ms << " ms, heuristic2 "
         << h2_ms << " ms, greedy " << gr_ms << " ms";
    c.note(note.str());
    return c;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Check()> run;
    };
    std::vector<Criterion> criteria = {
        {1, "oracle optimality of the exact solver", criterion1_oracle_optimality},
        {2, "hedge-hull equals exhaustive hedge union", criterion2_hull_correctness},
        {3, "heuristic soundness", criterion3_heuristic_soundness},
        {4, "vertex-cover reduction round trip", criterion4_wmvc_roundtrip},
        {5, "figure fixtures", criterion5_paper_fixtures},
        {6, "special-case solver agreement", criterion6_special_cases},
        {7, "regret experiment protocol", criterion7_regret_protocol},
        {8, "hedge-discovery economy", criterion8_hedge_economy},
        {9, "complexity smoke tests", criterion9_complexity_smoke},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        auto t0 = Clock::now();
        Check result;
        try {
            result = criterion.run();
        } catch (const std::exception& e) {
            result.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        std::printf("[%s] criterion %d: %s (%.1fs)%s%s\n", result.ok ? "PASS" : "FAIL",
                    criterion.id, criterion.name, secs, result.detail.empty() ? "" : " - ",
                    result.detail.c_str());
        std::fflush(stdout);
        if (!result.ok) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}

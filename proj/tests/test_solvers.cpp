#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mci/bench.hpp"
#include "mci/errors.hpp"
#include "mci/exact_solver.hpp"
#include "mci/heuristics.hpp"
#include "mci/identification.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace mci;
using namespace mci::fixtures;

namespace {
VertexSet vs(const CausalGraph& g, std::initializer_list<int> xs) {
    return VertexSet::of(g.size(), xs);
}
}  // namespace

TEST_CASE("fig1 exact solve returns the forced parent") {
    CausalGraph g = fig1();
    VertexSet s = vs(g, {F1_S1, F1_S2});
    SolveReport r = solve_exact_min_intervention(g, s);
    CHECK(r.single_set() == vs(g, {F1_V2}));
    CHECK(r.cost == g.cost(F1_V2));
    CHECK(is_identifiable_after(g, s, r.single_set()));
    // hull inside G_[V \ PaC(S)] is already S, so the solver exits before
    // any hedge is discovered
    CHECK(r.hedges_discovered == 0);
    CHECK(r.hitting_set_calls == 0);
}

TEST_CASE("already-identifiable target costs nothing") {
    CausalGraph g(3, {{0, 1}, {1, 2}}, {{0, 1}}, std::vector<Cost>(3, Cost::finite(1)));
    VertexSet s = VertexSet::of(3, {2});  // no bidirected edge at 2
    SolveReport r = solve_exact_min_intervention(g, s);
    CHECK(r.single_set().empty());
    CHECK(r.cost == Cost::zero());

    // whole-vertex-set target: Q[V] = P(V)
    SolveReport all = solve_exact_min_intervention(g, g.all_vertices());
    CHECK(all.single_set().empty());
    CHECK(all.cost == Cost::zero());
}

TEST_CASE("approx and fewer-calls are trivial on already-identifiable targets") {
    CausalGraph g(3, {{0, 1}, {1, 2}}, {{0, 1}}, std::vector<Cost>(3, Cost::finite(1)));
    VertexSet s = VertexSet::of(3, {2});
    CHECK(solve_approx_min_intervention(g, s).single_set().empty());
    CHECK(solve_exact_fewer_calls(g, s).single_set().empty());
}

TEST_CASE("infinite costs: exact agrees with brute force on value and feasibility") {
    int feasible = 0, infeasible_count = 0;
    for (int round = 0; round < 60; ++round) {
        CausalGraph base = gen_erdos_renyi_admg(8, 0.35, 0.3, 20000 + round);
        std::mt19937_64 rng(round);
        std::vector<Cost> costs = base.costs();
        for (auto& c : costs)
            if (rng() % 4 == 0) c = Cost::infinity();
        CausalGraph g = base.with_costs(std::move(costs));
        auto s = pick_target(g, round, 100);
        if (!s) continue;
        auto oracle = oracles::min_cost_intervention(g, *s);
        if (oracle.cost.is_infinite()) {
            CHECK_THROWS_AS(solve_exact_min_intervention(g, *s), infeasible_error);
            ++infeasible_count;
        } else {
            SolveReport r = solve_exact_min_intervention(g, *s);
            CHECK(r.cost == oracle.cost);
            CHECK(!r.cost.is_infinite());
            ++feasible;
        }
    }
    CHECK(feasible > 0);
    CHECK(infeasible_count > 0);
}

TEST_CASE("exact matches brute force on random instances") {
    int checked = 0;
    for (int round = 0; checked < 80; ++round) {
        REQUIRE(round < 400);
        int n = 5 + round % 6;
        CausalGraph g = gen_erdos_renyi_admg(n, 0.35, 0.25, 5000 + round);
        auto s = pick_target(g, round, 100);
        if (!s) continue;
        auto expect = oracles::min_cost_intervention(g, *s);
        SolveReport r = solve_exact_min_intervention(g, *s);
        CHECK(r.cost == expect.cost);
        CHECK(is_identifiable_after(g, *s, r.single_set()));
        CHECK(g.cost_of(r.single_set()) == r.cost);
        ++checked;
    }
}

TEST_CASE("exact handles non-c-component targets optimally") {
    int checked = 0;
    for (int round = 0; checked < 50; ++round) {
        REQUIRE(round < 500);
        CausalGraph g = gen_erdos_renyi_admg(8, 0.35, 0.25, 6000 + round);
        std::mt19937_64 rng(round);
        VertexSet s(g.size());
        for (int v = 5; v < 8; ++v)
            if (rng() % 2) s.add(v);
        if (s.empty() || maximal_c_components(g, s).size() < 2) continue;
        auto expect = oracles::min_cost_intervention(g, s);
        SolveReport r = solve_exact_min_intervention(g, s);
        CHECK(r.cost == expect.cost);
        CHECK(is_identifiable_after(g, s, r.single_set()));
        ++checked;
    }
}

TEST_CASE("discovered hedges all pass is_hedge and lie in the hull") {
    for (int round = 0; round < 30; ++round) {
        CausalGraph g = gen_erdos_renyi_admg(10, 0.35, 0.25, 7000 + round);
        auto s = pick_target(g, round, 100);
        if (!s) continue;
        SolveReport r = solve_exact_min_intervention(g, *s);
        VertexSet forced = pac(g, *s);
        VertexSet hull = hedge_hull_general(g, *s, g.all_vertices());
        CHECK(r.single_set().is_subset_of(hull | forced));
        CHECK(forced.is_subset_of(r.single_set()));
    }
}

TEST_CASE("approx mode is sound and never beats exact") {
    for (int round = 0; round < 60; ++round) {
        CausalGraph g = gen_erdos_renyi_admg(10, 0.35, 0.25, 8000 + round);
        auto s = pick_target(g, round, 100);
        if (!s) continue;
        SolveReport exact = solve_exact_min_intervention(g, *s);
        SolveReport approx = solve_approx_min_intervention(g, *s);
        CHECK(is_identifiable_after(g, *s, approx.single_set()));
        CHECK(exact.cost <= approx.cost);
    }
}

TEST_CASE("fewer-calls variant returns the same optimum") {
    CausalGraph g1 = fig1();
    VertexSet s1 = vs(g1, {F1_S1, F1_S2});
    CHECK(solve_exact_fewer_calls(g1, s1).single_set() == vs(g1, {F1_V2}));

    for (int round = 0; round < 200; ++round) {
        CausalGraph g = gen_erdos_renyi_admg(5 + round % 8, 0.35, 0.25, 9000 + round);
        auto s = pick_target(g, round, 100);
        if (!s) continue;
        SolveReport a = solve_exact_min_intervention(g, *s);
        SolveReport b = solve_exact_fewer_calls(g, *s);
        CHECK(a.cost == b.cost);
        CHECK(is_identifiable_after(g, *s, b.single_set()));
    }
}

TEST_CASE("hedge budget trips a resource error") {
    // dense instance with a tiny budget
    CausalGraph g = gen_erdos_renyi_admg(14, 0.4, 0.35, 123);
    auto s = pick_target(g, 3, 100);
    REQUIRE(s.has_value());
    SolveReport free_run = solve_exact_min_intervention(g, *s);
    if (free_run.hedges_discovered > 0)
        CHECK_THROWS_AS(solve_exact_min_intervention(g, *s, {.max_hedges = 0}),
                        resource_limit_error);
}

TEST_CASE("infinite forced vertex is infeasible") {
    // 1 -> 0 with 1 <-> 0: PaC({0}) = {1}; make 1 non-intervenable
    std::vector<Cost> costs{Cost::finite(1), Cost::infinity()};
    CausalGraph g(2, {{1, 0}}, {{0, 1}}, costs);
    CHECK_THROWS_AS(solve_exact_min_intervention(g, VertexSet::of(2, {0})), infeasible_error);
    CHECK_THROWS_AS(heuristic1(g, VertexSet::of(2, {0})), infeasible_error);
}

TEST_CASE("heuristics solve fig1") {
    CausalGraph g = fig1();
    VertexSet s = vs(g, {F1_S1, F1_S2});
    CHECK(heuristic1(g, s).single_set() == vs(g, {F1_V2}));
    CHECK(heuristic2(g, s).single_set() == vs(g, {F1_V2}));
    CHECK(heuristic_greedy(g, s).single_set() == vs(g, {F1_V2}));
    CHECK(solve_auto(g, s).single_set() == vs(g, {F1_V2}));
    CHECK(solve_best_of(g, s).single_set() == vs(g, {F1_V2}));
}

TEST_CASE("heuristics are sound and no cheaper than exact") {
    for (int round = 0; round < 60; ++round) {
        CausalGraph g = gen_erdos_renyi_admg(11, 0.35, 0.25, 11000 + round);
        auto s = pick_target(g, round, 100);
        if (!s) continue;
        SolveReport exact = solve_exact_min_intervention(g, *s);
        for (const auto& r : {heuristic1(g, *s), heuristic2(g, *s), heuristic_greedy(g, *s)}) {
            CHECK(is_identifiable_after(g, *s, r.single_set()));
            CHECK(exact.cost <= r.cost);
            VertexSet forced = pac(g, *s);
            CHECK(forced.is_subset_of(r.single_set()));
            CHECK(r.single_set().is_subset_of(hedge_hull_general(g, *s, g.all_vertices()) |
                                              forced));
        }
    }
}

TEST_CASE("heuristics handle non-c-component targets") {
    int checked = 0;
    for (int round = 0; checked < 40; ++round) {
        REQUIRE(round < 400);
        CausalGraph g = gen_erdos_renyi_admg(12, 0.3, 0.2, 12000 + round);
        std::mt19937_64 rng(round);
        VertexSet s(g.size());
        for (int v = 8; v < 12; ++v)
            if (rng() % 2) s.add(v);
        if (s.empty() || maximal_c_components(g, s).size() < 2) continue;
        for (const auto& r : {heuristic1(g, s), heuristic2(g, s), heuristic_greedy(g, s)})
            CHECK(is_identifiable_after(g, s, r.single_set()));
        ++checked;
    }
}

TEST_CASE("post_process prunes to the minimal fig1 answer") {
    CausalGraph g = fig1();
    VertexSet s = vs(g, {F1_S1, F1_S2});
    VertexSet bloated = vs(g, {F1_V1, F1_V2});
    CHECK(post_process(g, s, bloated) == vs(g, {F1_V2}));

    // optimal input is left alone and the operation is idempotent
    CHECK(post_process(g, s, vs(g, {F1_V2})) == vs(g, {F1_V2}));
    VertexSet once = post_process(g, s, bloated);
    CHECK(post_process(g, s, once) == once);

    CHECK_THROWS_AS(post_process(g, s, VertexSet(g.size())), std::invalid_argument);
}

TEST_CASE("post_process never raises cost and keeps identifiability") {
    for (int round = 0; round < 40; ++round) {
        CausalGraph g = gen_erdos_renyi_admg(10, 0.35, 0.25, 13000 + round);
        auto s = pick_target(g, round, 100);
        if (!s) continue;
        SolveReport h = heuristic1(g, *s);
        VertexSet pruned = post_process(g, *s, h.single_set());
        CHECK(pruned.is_subset_of(h.single_set()));
        CHECK(is_identifiable_after(g, *s, pruned));
        CHECK(g.cost_of(pruned) <= h.cost);
    }
}

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mci/graph.hpp"
#include "mci/report.hpp"

namespace mci {

// Trial RNG streams are split from the base seed with splitmix64 so trials
// are independent and individually reproducible; all sampling goes through
// hand-rolled draws on top of mt19937_64, which keeps runs byte-identical
// across standard libraries.
std::uint64_t split_seed(std::uint64_t base, std::uint64_t stream);

struct ExperimentConfig {
    int n = 10;
    double p = 0.35;
    double q = 0.25;
    std::vector<double> cost_choices = {1, 2, 3, 4};
    int trials = 40;
    std::uint64_t seed = 0;
    std::vector<std::string> roster = {"exact", "approx", "heuristic1", "heuristic2", "greedy"};
    int s_pick_retries = 1000;  // retries for a c-component S before resampling the graph
    bool measure_time = true;   // false zeroes wall_ms so CSV bytes are reproducible
    int jobs = 1;
};

// Erdos-Renyi semi-Markovian graph over a fixed causal order 0<1<...<n-1:
// for each pair u<v (u ascending, then v), first a directed-edge draw with
// probability p, then an independent bidirected draw with probability q;
// costs drawn uniformly from `cost_choices` afterwards, vertex by vertex.
CausalGraph gen_erdos_renyi_admg(int n, double p, double q, std::uint64_t seed,
                                 const std::vector<double>& cost_choices = {1, 2, 3, 4});

// Random target among the last max(1, ceil(5% n)) vertices of the causal
// order such that G_[S] is a c-component; nullopt when the retry cap runs out.
std::optional<VertexSet> pick_target(const CausalGraph& g, std::uint64_t seed, int retries);

// Weighted undirected graph, the source problem of the hardness reduction.
struct WeightedGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<double> weights;
    std::vector<std::string> names;  // optional
};

struct WmvcReduction {
    CausalGraph graph;
    int target;  // the sink vertex s; solving Q[{s}] solves the vertex cover
};

// Gadget construction: per edge {x,y} (x<y) two fresh vertices u,w, directed
// arcs u->x, x->y, y->w, w->s and bidirected edges from u to each of
// {x,y,w,s}; gadget vertices and s cost z = |V_H| * max(omega) + 1.
WmvcReduction reduce_wmvc(const WeightedGraph& h);

struct RegretRecord {
    int trial = 0;
    std::uint64_t instance_seed = 0;
    std::string algorithm;
    Cost cost;
    Cost optimal_cost;
    double regret = 0.0;
    double wall_ms = 0.0;
    long hedges_discovered = 0;
    long hitting_set_calls = 0;
};

// Runs the roster on `trials` random instances; regret is measured against
// the exact solver's cost (computed on the side when "exact" is not in the
// roster).
std::vector<RegretRecord> run_regret_experiment(const ExperimentConfig& cfg);

// Header: trial,n,p,q,seed,algorithm,cost,optimal_cost,regret,wall_ms,
// hedges_discovered,hitting_set_calls
void write_regret_csv(std::ostream& out, const ExperimentConfig& cfg,
                      const std::vector<RegretRecord>& records);

struct RegretSummary {
    std::string algorithm;
    double mean_regret = 0.0;
    double ci_low = 0.0;   // 95% percentile bootstrap, 1000 resamples
    double ci_high = 0.0;
    double mean_wall_ms = 0.0;
};

std::vector<RegretSummary> summarize_regrets(const std::vector<RegretRecord>& records,
                                             std::uint64_t seed = 0);

struct HedgeCountRecord {
    int trial = 0;
    std::uint64_t instance_seed = 0;
    long total_hedges = 0;  // counted exhaustively after removing PaC(S)
    long discovered = 0;    // exact solver's hedges_discovered
};

// Exhaustive hedge count: all F with S strictly inside F within `within`.
// The caller keeps |hull \ S| small; enumeration is 2^|hull\S|.
long count_all_hedges(const CausalGraph& g, const VertexSet& s, const VertexSet& within);

// Instances are resampled until the hull allows exhaustive counting
// (|hull \ S| <= 18).
std::vector<HedgeCountRecord> count_hedges_vs_discovered(const ExperimentConfig& cfg);

// Header: trial,n,p,q,seed,total_hedges,discovered_hedges,ratio
void write_hedge_csv(std::ostream& out, const ExperimentConfig& cfg,
                     const std::vector<HedgeCountRecord>& records);

}  // namespace mci

#include "mci/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <mutex>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>

#include "mci/errors.hpp"
#include "mci/exact_solver.hpp"
#include "mci/heuristics.hpp"
#include "mci/identification.hpp"

namespace mci {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool bernoulli(std::mt19937_64& rng, double p) { return next_unit(rng) < p; }

int uniform_int(std::mt19937_64& rng, int n) {
    auto bound = static_cast<std::uint64_t>(n);
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return static_cast<int>(x % bound);
}

}  // namespace

std::uint64_t split_seed(std::uint64_t base, std::uint64_t stream) {
    return splitmix64(base ^ (stream * 0x9E3779B97F4A7C15ull + 0xD1B54A32D192ED03ull));
}

CausalGraph gen_erdos_renyi_admg(int n, double p, double q, std::uint64_t seed,
                                 const std::vector<double>& cost_choices) {
    if (n < 0) throw std::invalid_argument("gen: n must be non-negative");
    if (p < 0 || p > 1 || q < 0 || q > 1)
        throw std::invalid_argument("gen: p and q must lie in [0,1]");
    if (cost_choices.empty()) throw std::invalid_argument("gen: empty cost domain");

    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> directed, bidirected;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (bernoulli(rng, p)) directed.emplace_back(u, v);
            if (bernoulli(rng, q)) bidirected.emplace_back(u, v);
        }
    }
    std::vector<Cost> costs(n);
    for (int v = 0; v < n; ++v)
        costs[v] = Cost::finite(cost_choices[uniform_int(rng, static_cast<int>(cost_choices.size()))]);
    return CausalGraph(n, std::move(directed), std::move(bidirected), std::move(costs));
}

std::optional<VertexSet> pick_target(const CausalGraph& g, std::uint64_t seed, int retries) {
    int n = g.size();
    if (n == 0) return std::nullopt;
    int pool = std::max(1, static_cast<int>(std::ceil(0.05 * n)));
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < retries; ++attempt) {
        VertexSet s(n);
        for (int v = n - pool; v < n; ++v)
            if (bernoulli(rng, 0.5)) s.add(v);
        if (s.empty()) continue;
        if (is_c_component(g, s)) return s;
    }
    return std::nullopt;
}

WmvcReduction reduce_wmvc(const WeightedGraph& h) {
    if (h.n < 0) throw std::invalid_argument("reduce_wmvc: bad vertex count");
    if (static_cast<int>(h.weights.size()) != h.n)
        throw std::invalid_argument("reduce_wmvc: weights must have one entry per vertex");
    if (!h.names.empty() && static_cast<int>(h.names.size()) != h.n)
        throw std::invalid_argument("reduce_wmvc: names, when given, must cover every vertex");
    for (double w : h.weights)
        if (!(w >= 0.0) || !std::isfinite(w))
            throw std::invalid_argument("reduce_wmvc: weights must be finite and non-negative");

    std::vector<std::pair<int, int>> edges;
    for (auto [x, y] : h.edges) {
        if (x < 0 || x >= h.n || y < 0 || y >= h.n)
            throw std::out_of_range("reduce_wmvc: edge index out of range");
        if (x == y) throw std::invalid_argument("reduce_wmvc: self loop");
        edges.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("reduce_wmvc: duplicate edge");

    int m = static_cast<int>(edges.size());
    int n = h.n + 2 * m + 1;
    int sink = n - 1;
    double max_w = 0.0;
    for (double w : h.weights) max_w = std::max(max_w, w);
    double z = h.n * max_w + 1.0;

    std::vector<std::pair<int, int>> directed, bidirected;
    for (int e = 0; e < m; ++e) {
        auto [x, y] = edges[e];
        int u = h.n + 2 * e;
        int w = h.n + 2 * e + 1;
        directed.push_back({u, x});
        directed.push_back({x, y});
        directed.push_back({y, w});
        directed.push_back({w, sink});
        bidirected.push_back({u, x});
        bidirected.push_back({u, y});
        bidirected.push_back({u, w});
        bidirected.push_back({u, sink});
    }
    // u/w vertices are fresh per edge and H-edges are deduped, so no arc or
    // bidirected edge is ever inserted twice
    std::vector<Cost> costs(n, Cost::finite(z));
    for (int v = 0; v < h.n; ++v) costs[v] = Cost::finite(h.weights[v]);

    std::vector<std::string> names(n);
    for (int v = 0; v < h.n; ++v)
        names[v] = h.names.empty() ? "x" + std::to_string(v) : h.names[v];
    for (int e = 0; e < m; ++e) {
        names[h.n + 2 * e] = "u" + std::to_string(e);
        names[h.n + 2 * e + 1] = "w" + std::to_string(e);
    }
    names[sink] = "s";

    return {CausalGraph(n, std::move(directed), std::move(bidirected), std::move(costs),
                        std::move(names)),
            sink};
}

namespace {

bool known_algorithm(const std::string& name) {
    static const char* names[] = {"exact",      "approx",     "fewer-calls", "heuristic1",
                                  "heuristic2", "greedy",     "auto",        "best-of"};
    for (const char* n : names)
        if (name == n) return true;
    return false;
}

SolveReport run_algorithm(const std::string& name, const CausalGraph& g, const VertexSet& s) {
    if (name == "exact") return solve_exact_min_intervention(g, s);
    if (name == "approx") return solve_approx_min_intervention(g, s);
    if (name == "fewer-calls") return solve_exact_fewer_calls(g, s);
    if (name == "heuristic1") return heuristic1(g, s);
    if (name == "heuristic2") return heuristic2(g, s);
    if (name == "greedy") return heuristic_greedy(g, s);
    if (name == "auto") return solve_auto(g, s);
    if (name == "best-of") return solve_best_of(g, s);
    throw std::invalid_argument("unknown algorithm: " + name);
}

struct Instance {
    CausalGraph graph;
    VertexSet target;
    std::uint64_t seed;
};

Instance sample_instance(const ExperimentConfig& cfg, int trial) {
    std::uint64_t graph_seed = split_seed(cfg.seed, static_cast<std::uint64_t>(trial));
    for (int attempt = 0; attempt < 100; ++attempt) {
        CausalGraph g = gen_erdos_renyi_admg(cfg.n, cfg.p, cfg.q, graph_seed, cfg.cost_choices);
        auto s = pick_target(g, split_seed(graph_seed, 1), cfg.s_pick_retries);
        if (s) return {std::move(g), std::move(*s), graph_seed};
        graph_seed = split_seed(graph_seed, 2);
    }
    throw resource_limit_error("could not sample a target that is a c-component");
}

double regret_of(Cost cost, Cost optimal) {
    if (cost == optimal) return 0.0;
    if (optimal.is_zero()) return std::numeric_limits<double>::infinity();
    return (cost.value() - optimal.value()) / optimal.value();
}

template <typename Fn>
void for_each_trial(int trials, int jobs, Fn&& fn) {
    if (jobs <= 1) {
        for (int t = 0; t < trials; ++t) fn(t);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        try {
            for (int t = next.fetch_add(1); t < trials; t = next.fetch_add(1)) fn(t);
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next.store(trials);  // drain remaining work
        }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < std::min(jobs, trials); ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<RegretRecord> run_regret_experiment(const ExperimentConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("bench: trials must be >= 1");
    for (const auto& name : cfg.roster)
        if (!known_algorithm(name)) throw std::invalid_argument("unknown algorithm: " + name);
    std::vector<std::vector<RegretRecord>> per_trial(cfg.trials);

    for_each_trial(cfg.trials, cfg.jobs, [&](int t) {
        Instance inst = sample_instance(cfg, t);

        std::vector<SolveReport> reports;
        reports.reserve(cfg.roster.size());
        for (const auto& name : cfg.roster)
            reports.push_back(run_algorithm(name, inst.graph, inst.target));

        Cost optimal;
        auto exact_it = std::find(cfg.roster.begin(), cfg.roster.end(), "exact");
        if (exact_it != cfg.roster.end())
            optimal = reports[exact_it - cfg.roster.begin()].cost;
        else
            optimal = solve_exact_min_intervention(inst.graph, inst.target).cost;

        for (std::size_t i = 0; i < reports.size(); ++i) {
            const SolveReport& r = reports[i];
            RegretRecord rec;
            rec.trial = t;
            rec.instance_seed = inst.seed;
            rec.algorithm = cfg.roster[i];
            rec.cost = r.cost;
            rec.optimal_cost = optimal;
            rec.regret = regret_of(r.cost, optimal);
            rec.wall_ms = cfg.measure_time ? r.wall_ms : 0.0;
            rec.hedges_discovered = r.hedges_discovered;
            rec.hitting_set_calls = r.hitting_set_calls;
            per_trial[t].push_back(std::move(rec));
        }
    });

    std::vector<RegretRecord> out;
    for (auto& batch : per_trial)
        for (auto& rec : batch) out.push_back(std::move(rec));
    return out;
}

namespace {

std::string format_double(double v) {
    if (std::isinf(v)) return "inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

void write_regret_csv(std::ostream& out, const ExperimentConfig& cfg,
                      const std::vector<RegretRecord>& records) {
    out << "trial,n,p,q,seed,algorithm,cost,optimal_cost,regret,wall_ms,hedges_discovered,"
           "hitting_set_calls\n";
    for (const auto& r : records) {
        out << r.trial << ',' << cfg.n << ',' << format_double(cfg.p) << ','
            << format_double(cfg.q) << ',' << r.instance_seed << ',' << r.algorithm << ','
            << r.cost.to_string() << ',' << r.optimal_cost.to_string() << ','
            << format_double(r.regret) << ',' << format_double(r.wall_ms) << ','
            << r.hedges_discovered << ',' << r.hitting_set_calls << '\n';
    }
}

std::vector<RegretSummary> summarize_regrets(const std::vector<RegretRecord>& records,
                                             std::uint64_t seed) {
    std::vector<std::string> order;
    for (const auto& r : records)
        if (std::find(order.begin(), order.end(), r.algorithm) == order.end())
            order.push_back(r.algorithm);

    std::vector<RegretSummary> out;
    for (std::size_t ai = 0; ai < order.size(); ++ai) {
        std::vector<double> regrets;
        double wall = 0.0;
        for (const auto& r : records) {
            if (r.algorithm != order[ai]) continue;
            regrets.push_back(r.regret);
            wall += r.wall_ms;
        }
        RegretSummary s;
        s.algorithm = order[ai];
        s.mean_regret = 0.0;
        for (double r : regrets) s.mean_regret += r;
        s.mean_regret /= static_cast<double>(regrets.size());
        s.mean_wall_ms = wall / static_cast<double>(regrets.size());

        const int resamples = 1000;
        std::mt19937_64 rng(split_seed(seed, 900000 + ai));
        std::vector<double> means(resamples);
        for (int b = 0; b < resamples; ++b) {
            double acc = 0.0;
            for (std::size_t i = 0; i < regrets.size(); ++i)
                acc += regrets[uniform_int(rng, static_cast<int>(regrets.size()))];
            means[b] = acc / static_cast<double>(regrets.size());
        }
        std::sort(means.begin(), means.end());
        s.ci_low = means[static_cast<int>(0.025 * (resamples - 1))];
        s.ci_high = means[static_cast<int>(0.975 * (resamples - 1))];
        out.push_back(std::move(s));
    }
    return out;
}

long count_all_hedges(const CausalGraph& g, const VertexSet& s, const VertexSet& within) {
    VertexSet hull = hedge_hull(g, s, within);
    std::vector<int> extras = (hull - s).to_vector();
    int m = static_cast<int>(extras.size());
    if (m > 25)
        throw resource_limit_error("count_all_hedges: 2^" + std::to_string(m) +
                                   " subsets is past the exhaustive budget");
    long total = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        VertexSet f = s;
        for (int i = 0; i < m; ++i)
            if (mask & (std::uint64_t{1} << i)) f.add(extras[i]);
        if (is_hedge(g, s, f)) ++total;
    }
    return total;
}

std::vector<HedgeCountRecord> count_hedges_vs_discovered(const ExperimentConfig& cfg) {
    std::vector<HedgeCountRecord> out(cfg.trials);
    for_each_trial(cfg.trials, cfg.jobs, [&](int t) {
        std::uint64_t graph_seed = split_seed(cfg.seed, static_cast<std::uint64_t>(t));
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 100)
                throw resource_limit_error("could not sample an instance with a countable hull");
            CausalGraph g =
                gen_erdos_renyi_admg(cfg.n, cfg.p, cfg.q, graph_seed, cfg.cost_choices);
            auto s = pick_target(g, split_seed(graph_seed, 1), cfg.s_pick_retries);
            if (s) {
                VertexSet live = g.all_vertices() - pac(g, *s);
                VertexSet hull = hedge_hull(g, *s, live);
                if ((hull - *s).count() <= 18) {
                    HedgeCountRecord rec;
                    rec.trial = t;
                    rec.instance_seed = graph_seed;
                    rec.total_hedges = count_all_hedges(g, *s, live);
                    rec.discovered = solve_exact_min_intervention(g, *s).hedges_discovered;
                    out[t] = rec;
                    break;
                }
            }
            graph_seed = split_seed(graph_seed, 2);
        }
    });
    return out;
}

void write_hedge_csv(std::ostream& out, const ExperimentConfig& cfg,
                     const std::vector<HedgeCountRecord>& records) {
    out << "trial,n,p,q,seed,total_hedges,discovered_hedges,ratio\n";
    for (const auto& r : records) {
        double ratio = r.total_hedges == 0
                           ? 0.0
                           : static_cast<double>(r.discovered) / static_cast<double>(r.total_hedges);
        out << r.trial << ',' << cfg.n << ',' << format_double(cfg.p) << ','
            << format_double(cfg.q) << ',' << r.instance_seed << ',' << r.total_hedges << ','
            << r.discovered << ',' << format_double(ratio) << '\n';
    }
}

}  // namespace mci

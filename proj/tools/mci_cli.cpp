#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mci/bench.hpp"
#include "mci/errors.hpp"
#include "mci/exact_solver.hpp"
#include "mci/general_solver.hpp"
#include "mci/graph_io.hpp"
#include "mci/heuristics.hpp"
#include "mci/identification.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitResource = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

mci::CausalGraph load_graph_or_die(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    try {
        std::stringstream stream(text);
        return mci::load_graph(stream);
    } catch (const nlohmann::json::parse_error& e) {
        // byte offset -> line/column
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw InputError(path + ":" + std::to_string(line) + ":" + std::to_string(col) +
                         ": JSON parse error: " + e.what());
    } catch (const std::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::vector<std::string> split_commas(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

mci::VertexSet parse_vertex_list(const mci::CausalGraph& g, const std::string& csv,
                                 const char* what) {
    mci::VertexSet s(g.size());
    for (const auto& token : split_commas(csv)) {
        int v = g.find_vertex(token);
        if (v < 0) throw InputError(std::string(what) + ": unknown vertex '" + token + "'");
        s.add(v);
    }
    return s;
}

std::string set_to_string(const mci::CausalGraph& g, const mci::VertexSet& s) {
    std::string out = "{";
    bool first = true;
    for (int v : s) {
        if (!first) out += ",";
        out += g.label(v);
        first = false;
    }
    return out + "}";
}

nlohmann::json set_to_json(const mci::CausalGraph& g, const mci::VertexSet& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (int v : s) arr.push_back(g.label(v));
    return arr;
}

void print_report(const mci::CausalGraph& g, const mci::SolveReport& r, bool as_json) {
    if (as_json) {
        nlohmann::json j;
        j["algorithm"] = r.algorithm;
        j["sets"] = nlohmann::json::array();
        for (const auto& s : r.result.sets) j["sets"].push_back(set_to_json(g, s));
        j["cost"] = r.cost.is_infinite() ? nlohmann::json("inf") : nlohmann::json(r.cost.value());
        j["hedges_discovered"] = r.hedges_discovered;
        j["hitting_set_calls"] = r.hitting_set_calls;
        j["wall_ms"] = r.wall_ms;
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "algorithm: " << r.algorithm << "\n";
    if (r.result.sets.size() == 1) {
        std::cout << "intervention: " << set_to_string(g, r.result.sets.front()) << "\n";
    } else {
        std::cout << "collection (" << r.result.sets.size() << " sets):\n";
        for (const auto& s : r.result.sets) std::cout << "  " << set_to_string(g, s) << "\n";
    }
    std::cout << "cost: " << r.cost.to_string() << "\n";
    std::cout << "hedges discovered: " << r.hedges_discovered
              << ", hitting-set calls: " << r.hitting_set_calls << "\n";
    std::cout << "wall time: " << r.wall_ms << " ms\n";
}

mci::CausalGraph apply_infinite_s(const mci::CausalGraph& g, const mci::VertexSet& s) {
    std::vector<mci::Cost> costs = g.costs();
    for (int v : s) costs[v] = mci::Cost::infinity();
    return g.with_costs(std::move(costs));
}

int cmd_solve(const std::string& graph_path, const std::string& target_csv,
              const std::string& algo, const std::string& general_sub, bool infinite_s,
              bool post, bool as_json, long max_hedges, int exact_below, double auto_factor,
              int max_components) {
    mci::CausalGraph g = load_graph_or_die(graph_path);
    mci::VertexSet target = parse_vertex_list(g, target_csv, "--target");
    if (infinite_s) g = apply_infinite_s(g, target);

    mci::SolveOptions sopts{max_hedges};
    mci::SolveReport report;
    if (algo == "exact") {
        report = mci::solve_exact_min_intervention(g, target, sopts);
    } else if (algo == "approx") {
        report = mci::solve_approx_min_intervention(g, target, sopts);
    } else if (algo == "fewer-calls") {
        report = mci::solve_exact_fewer_calls(g, target, sopts);
    } else if (algo == "heuristic1") {
        report = mci::heuristic1(g, target);
    } else if (algo == "heuristic2") {
        report = mci::heuristic2(g, target);
    } else if (algo == "greedy") {
        report = mci::heuristic_greedy(g, target);
    } else if (algo == "best-of") {
        report = mci::solve_best_of(g, target);
    } else if (algo == "auto") {
        mci::VertexSet forced(g.size());
        for (const auto& si : mci::maximal_c_components(g, target)) forced |= mci::pac(g, si);
        mci::VertexSet hull = mci::hedge_hull_general(g, target, g.all_vertices() - forced);
        if ((hull - target).count() <= exact_below)
            report = mci::solve_exact_min_intervention(g, target, sopts);
        else
            report = mci::solve_auto(g, target, {auto_factor});
    } else if (algo == "general") {
        mci::Subsolver sub = mci::Subsolver::Exact;
        if (general_sub == "greedy")
            sub = mci::Subsolver::Greedy;
        else if (general_sub == "heuristic")
            sub = mci::Subsolver::Heuristic;
        else if (general_sub != "exact")
            throw InputError("--general-sub must be exact, greedy or heuristic");
        report = mci::solve_general(g, target, sub, {max_components, sopts});
    } else {
        throw InputError("unknown --algo: " + algo);
    }

    if (post) {
        if (report.result.sets.size() != 1)
            throw InputError("--post-process applies to single-set algorithms only");
        mci::VertexSet pruned = mci::post_process(g, target, report.result.sets.front());
        report.result.sets.front() = pruned;
        report.cost = g.cost_of(pruned);
    }

    print_report(g, report, as_json);
    return kExitOk;
}

int cmd_hull(const std::string& graph_path, const std::string& target_csv, bool as_json) {
    mci::CausalGraph g = load_graph_or_die(graph_path);
    mci::VertexSet target = parse_vertex_list(g, target_csv, "--target");

    nlohmann::json j = nlohmann::json::array();
    for (const auto& si : mci::maximal_c_components(g, target)) {
        mci::VertexSet hull = mci::hedge_hull(g, si, g.all_vertices());
        mci::VertexSet forced = mci::pac(g, si);
        if (as_json) {
            nlohmann::json block;
            block["component"] = set_to_json(g, si);
            block["hull"] = set_to_json(g, hull);
            block["pac"] = set_to_json(g, forced);
            block["identifiable"] = (hull == si);
            j.push_back(block);
        } else {
            std::cout << "component " << set_to_string(g, si) << ":\n";
            std::cout << "  hull: " << set_to_string(g, hull)
                      << (hull == si ? "  (no hedge formed)" : "") << "\n";
            std::cout << "  pac:  " << set_to_string(g, forced) << "\n";
        }
    }
    if (as_json) std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& graph_path, const std::string& target_csv,
               const std::string& set_csv) {
    mci::CausalGraph g = load_graph_or_die(graph_path);
    mci::VertexSet target = parse_vertex_list(g, target_csv, "--target");
    mci::VertexSet a = parse_vertex_list(g, set_csv, "--set");
    bool ok = mci::is_identifiable_after(g, target, a);
    std::cout << (ok ? "identifiable" : "not identifiable") << "\n";
    return ok ? kExitOk : kExitInfeasible;
}

int cmd_gen(int n, double p, double q, std::uint64_t seed, const std::string& costs_csv,
            const std::string& out_path) {
    std::vector<double> choices;
    for (const auto& tok : split_commas(costs_csv)) choices.push_back(std::stod(tok));
    mci::CausalGraph g = mci::gen_erdos_renyi_admg(n, p, q, seed, choices);
    if (out_path.empty())
        mci::save_graph(g, std::cout);
    else
        mci::save_graph_file(g, out_path);
    return kExitOk;
}

int cmd_reduce_wmvc(const std::string& in_path, const std::string& out_path) {
    std::ifstream in(in_path);
    if (!in) throw InputError("cannot open file: " + in_path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(in_path + ": JSON parse error: " + e.what());
    }
    mci::WeightedGraph h;
    try {
        h.n = j.at("n").get<int>();
        for (const auto& e : j.at("edges")) h.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        for (const auto& w : j.at("weights")) h.weights.push_back(w.get<double>());
        if (j.contains("names"))
            for (const auto& s : j.at("names")) h.names.push_back(s.get<std::string>());
    } catch (const nlohmann::json::exception& e) {
        throw InputError(in_path + ": expected {\"n\",\"edges\",\"weights\"}: " + e.what());
    }
    mci::WmvcReduction red = mci::reduce_wmvc(h);
    if (out_path.empty()) {
        mci::save_graph(red.graph, std::cout);
        std::cerr << "target: " << red.graph.label(red.target) << " (index " << red.target
                  << ")\n";
    } else {
        mci::save_graph_file(red.graph, out_path);
        std::cout << "target: " << red.graph.label(red.target) << " (index " << red.target
                  << ")\n";
    }
    return kExitOk;
}

int cmd_bench(const std::string& mode, int n, double p, double q, int trials,
              std::uint64_t seed, const std::string& algos_csv, const std::string& out_path,
              int jobs, bool no_timing) {
    mci::ExperimentConfig cfg;
    cfg.n = n;
    cfg.p = p;
    cfg.q = q;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.jobs = jobs;
    cfg.measure_time = !no_timing;
    if (!algos_csv.empty()) cfg.roster = split_commas(algos_csv);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw InputError("cannot open output file: " + out_path);
        out = &file;
    }

    if (mode == "regret") {
        auto records = mci::run_regret_experiment(cfg);
        mci::write_regret_csv(*out, cfg, records);
        for (const auto& s : mci::summarize_regrets(records, cfg.seed)) {
            std::cerr << s.algorithm << ": mean regret " << s.mean_regret << " (95% CI ["
                      << s.ci_low << ", " << s.ci_high << "]), mean wall " << s.mean_wall_ms
                      << " ms\n";
        }
    } else if (mode == "hedges") {
        auto records = mci::count_hedges_vs_discovered(cfg);
        mci::write_hedge_csv(*out, cfg, records);
    } else {
        throw InputError("--mode must be regret or hedges");
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum-cost intervention design for causal effect identification"};
    app.require_subcommand(1);

    std::string graph_path, target_csv, set_csv, algo = "exact", general_sub = "exact";
    std::string out_path, algos_csv, mode = "regret", costs_csv = "1,2,3,4";
    bool infinite_s = false, post = false, as_json = false, no_timing = false;
    long max_hedges = 1'000'000;
    int exact_below = 16, max_components = 12;
    double auto_factor = 1.0;
    int n = 10, trials = 40, jobs = 1;
    double p = 0.35, q = 0.25;
    std::uint64_t seed = 0;

    auto* solve = app.add_subcommand("solve", "compute a min-cost intervention for Q[S]");
    solve->add_option("graph", graph_path, "graph JSON file")->required();
    solve->add_option("--target", target_csv, "target vertices S (names or indices)")->required();
    solve->add_option("--algo", algo,
                      "exact|approx|fewer-calls|heuristic1|heuristic2|greedy|best-of|auto|general");
    solve->add_option("--general-sub", general_sub, "subsolver for --algo general");
    solve->add_flag("--infinite-s", infinite_s, "treat target vertices as non-intervenable");
    solve->add_flag("--post-process", post, "greedily prune the returned set");
    solve->add_flag("--json", as_json, "machine-readable output");
    solve->add_option("--max-hedges", max_hedges, "hedge discovery budget");
    solve->add_option("--exact-below", exact_below, "auto: run exact when |hull\\S| <= k");
    solve->add_option("--auto-factor", auto_factor, "auto: directed/bidirected density factor");
    solve->add_option("--max-components", max_components, "general: partition cap");

    auto* hull = app.add_subcommand("hull", "print hedge hull and PaC per c-component");
    hull->add_option("graph", graph_path, "graph JSON file")->required();
    hull->add_option("--target", target_csv, "target vertices")->required();
    hull->add_flag("--json", as_json, "machine-readable output");

    auto* verify = app.add_subcommand("verify", "check that a set identifies Q[S]");
    verify->add_option("graph", graph_path, "graph JSON file")->required();
    verify->add_option("--target", target_csv, "target vertices")->required();
    verify->add_option("--set", set_csv, "intervention set (may be empty)");

    auto* gen = app.add_subcommand("gen", "generate a random semi-Markovian graph");
    gen->add_option("--n", n, "vertex count")->required();
    gen->add_option("--p", p, "directed edge probability");
    gen->add_option("--q", q, "bidirected edge probability");
    gen->add_option("--seed", seed, "rng seed");
    gen->add_option("--costs", costs_csv, "cost domain, comma separated");
    gen->add_option("--out", out_path, "output file (default stdout)");

    auto* reduce = app.add_subcommand("reduce-wmvc", "build the vertex-cover gadget graph");
    reduce->add_option("input", graph_path, "weighted graph JSON {n,edges,weights}")->required();
    reduce->add_option("--out", out_path, "output graph file (default stdout)");

    auto* bench = app.add_subcommand("bench", "regret/runtime experiments on random graphs");
    bench->add_option("--mode", mode, "regret|hedges");
    bench->add_option("--n", n, "vertex count")->required();
    bench->add_option("--p", p, "directed edge probability");
    bench->add_option("--q", q, "bidirected edge probability");
    bench->add_option("--trials", trials, "trial count");
    bench->add_option("--seed", seed, "base seed");
    bench->add_option("--algos", algos_csv, "roster, comma separated");
    bench->add_option("--out", out_path, "CSV output file (default stdout)");
    bench->add_option("--jobs", jobs, "parallel trials");
    bench->add_flag("--no-timing", no_timing, "zero wall_ms for byte-reproducible CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (solve->parsed())
            return cmd_solve(graph_path, target_csv, algo, general_sub, infinite_s, post,
                             as_json, max_hedges, exact_below, auto_factor, max_components);
        if (hull->parsed()) return cmd_hull(graph_path, target_csv, as_json);
        if (verify->parsed()) return cmd_verify(graph_path, target_csv, set_csv);
        if (gen->parsed()) return cmd_gen(n, p, q, seed, costs_csv, out_path);
        if (reduce->parsed()) return cmd_reduce_wmvc(graph_path, out_path);
        if (bench->parsed())
            return cmd_bench(mode, n, p, q, trials, seed, algos_csv, out_path, jobs, no_timing);
    } catch (const mci::infeasible_error& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const mci::resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}

#include "mci/graph_io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace mci {

namespace {

using nlohmann::ordered_json;

std::vector<std::pair<int, int>> parse_edges(const ordered_json& j, const char* key) {
    std::vector<std::pair<int, int>> edges;
    if (!j.contains(key)) return edges;
    const auto& arr = j.at(key);
    if (!arr.is_array()) throw std::invalid_argument(std::string(key) + " must be an array");
    for (const auto& e : arr) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw std::invalid_argument(std::string(key) +
                                        " entries must be [u,v] integer pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return edges;
}

Cost parse_cost(const ordered_json& c) {
    if (c.is_string()) {
        if (c.get<std::string>() == "inf") return Cost::infinity();
        throw std::invalid_argument("cost string must be \"inf\"");
    }
    if (!c.is_number()) throw std::invalid_argument("cost must be a number or \"inf\"");
    double v = c.get<double>();
    if (!(v >= 0.0) || !std::isfinite(v))
        throw std::invalid_argument("cost must be finite and non-negative");
    return Cost::finite(v);
}

}  // namespace

CausalGraph load_graph(std::istream& in) {
    ordered_json j = ordered_json::parse(in);  // parse_error carries the byte offset
    if (!j.is_object()) throw std::invalid_argument("graph file must be a JSON object");
    if (!j.contains("n") || !j.at("n").is_number_integer())
        throw std::invalid_argument("graph file needs an integer field \"n\"");
    int n = j.at("n").get<int>();

    std::vector<std::string> names;
    if (j.contains("names")) {
        for (const auto& s : j.at("names")) {
            if (!s.is_string()) throw std::invalid_argument("names must be strings");
            names.push_back(s.get<std::string>());
        }
    }

    auto directed = parse_edges(j, "directed");
    auto bidirected = parse_edges(j, "bidirected");

    if (!j.contains("costs")) throw std::invalid_argument("graph file needs a \"costs\" array");
    std::vector<Cost> costs;
    for (const auto& c : j.at("costs")) costs.push_back(parse_cost(c));

    return CausalGraph(n, std::move(directed), std::move(bidirected), std::move(costs),
                       std::move(names));
}

CausalGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    return load_graph(in);
}

void save_graph(const CausalGraph& g, std::ostream& out) {
    ordered_json j;
    j["n"] = g.size();
    if (g.has_names()) j["names"] = g.names();
    auto edges_json = [](const std::vector<std::pair<int, int>>& edges) {
        ordered_json arr = ordered_json::array();
        for (auto& [u, v] : edges) arr.push_back({u, v});
        return arr;
    };
    j["directed"] = edges_json(g.directed_edges());
    j["bidirected"] = edges_json(g.bidirected_edges());
    ordered_json costs = ordered_json::array();
    for (int v = 0; v < g.size(); ++v) {
        Cost c = g.cost(v);
        if (c.is_infinite())
            costs.push_back("inf");
        else if (c.value() == std::floor(c.value()) && std::abs(c.value()) < 1e15)
            costs.push_back(static_cast<long long>(c.value()));
        else
            costs.push_back(c.value());
    }
    j["costs"] = costs;
    out << j.dump(2) << "\n";
}

void save_graph_file(const CausalGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    save_graph(g, out);
}

}  // namespace mci

#include "mci/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <queue>
#include <set>
#include <stdexcept>

#include "mci/cost.hpp"

namespace mci {

namespace {

void check_index(int v, int n, const char* what) {
    if (v < 0 || v >= n)
        throw std::out_of_range(std::string(what) + " index " + std::to_string(v) +
                                " out of range [0," + std::to_string(n) + ")");
}

}  // namespace

CausalGraph::CausalGraph(int n, std::vector<std::pair<int, int>> directed,
                         std::vector<std::pair<int, int>> bidirected, std::vector<Cost> costs,
                         std::vector<std::string> names)
    : n_(n),
      directed_(std::move(directed)),
      bidirected_(std::move(bidirected)),
      costs_(std::move(costs)),
      names_(std::move(names)) {
    if (n_ < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (static_cast<int>(costs_.size()) != n_)
        throw std::invalid_argument("costs must have one entry per vertex");
    if (!names_.empty() && static_cast<int>(names_.size()) != n_)
        throw std::invalid_argument("names, when given, must have one entry per vertex");

    pa_.assign(n_, VertexSet(n_));
    ch_.assign(n_, VertexSet(n_));
    bid_.assign(n_, VertexSet(n_));

    for (auto& [u, v] : directed_) {
        check_index(u, n_, "directed edge");
        check_index(v, n_, "directed edge");
        if (u == v) throw std::invalid_argument("directed self-loop on vertex " + std::to_string(u));
        if (ch_[u].contains(v))
            throw std::invalid_argument("duplicate directed edge " + std::to_string(u) + "->" +
                                        std::to_string(v));
        ch_[u].add(v);
        pa_[v].add(u);
    }
    for (auto& e : bidirected_) {
        auto [u, v] = e;
        check_index(u, n_, "bidirected edge");
        check_index(v, n_, "bidirected edge");
        if (u == v)
            throw std::invalid_argument("bidirected self-loop on vertex " + std::to_string(u));
        if (u > v) e = {v, u};
        if (bid_[u].contains(v))
            throw std::invalid_argument("duplicate bidirected edge " + std::to_string(e.first) +
                                        "<->" + std::to_string(e.second));
        bid_[u].add(v);
        bid_[v].add(u);
    }

    std::sort(directed_.begin(), directed_.end());
    std::sort(bidirected_.begin(), bidirected_.end());

    // Kahn's algorithm; leftover vertices sit on a directed cycle.
    std::vector<int> indeg(n_, 0);
    for (auto& [u, v] : directed_) indeg[v]++;
    std::queue<int> q;
    for (int v = 0; v < n_; ++v)
        if (indeg[v] == 0) q.push(v);
    int seen = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        ++seen;
        for (int v : ch_[u])
            if (--indeg[v] == 0) q.push(v);
    }
    if (seen != n_) throw std::invalid_argument("directed edges contain a cycle");
}

Cost CausalGraph::cost_of(const VertexSet& xs) const {
    Cost total;
    for (int v : xs) total += costs_[v];
    return total;
}

std::string CausalGraph::label(int v) const {
    if (has_names()) return names_[v];
    return std::to_string(v);
}

int CausalGraph::find_vertex(const std::string& token) const {
    if (has_names()) {
        for (int v = 0; v < n_; ++v)
            if (names_[v] == token) return v;
    }
    try {
        size_t pos = 0;
        int v = std::stoi(token, &pos);
        if (pos == token.size() && v >= 0 && v < n_) return v;
    } catch (const std::exception&) {
    }
    return -1;
}

CausalGraph CausalGraph::with_costs(std::vector<Cost> costs) const {
    return CausalGraph(n_, directed_, bidirected_, std::move(costs), names_);
}

bool operator==(const CausalGraph& a, const CausalGraph& b) {
    return a.n_ == b.n_ && a.directed_ == b.directed_ && a.bidirected_ == b.bidirected_ &&
           a.costs_ == b.costs_ && a.names_ == b.names_;
}

VertexSet make_vertex_set(const CausalGraph& g, std::span<const int> vertices) {
    VertexSet s(g.size());
    for (int v : vertices) {
        check_index(v, g.size(), "vertex");
        s.add(v);
    }
    return s;
}

VertexSet parents(const CausalGraph& g, const VertexSet& x) {
    VertexSet out(g.size());
    for (int v : x) out |= g.parents_of(v);
    out -= x;
    return out;
}

VertexSet bid_neighbors(const CausalGraph& g, const VertexSet& x) {
    VertexSet out(g.size());
    for (int v : x) out |= g.bidirected_of(v);
    out -= x;
    return out;
}

VertexSet pac(const CausalGraph& g, const VertexSet& x) {
    return parents(g, x) & bid_neighbors(g, x);
}

VertexSet ancestors(const CausalGraph& g, const VertexSet& s, const VertexSet& within) {
    if (!s.is_subset_of(within))
        throw std::invalid_argument("ancestors: S must be a subset of `within`");
    VertexSet reached = s;
    VertexSet frontier = s;
    while (!frontier.empty()) {
        VertexSet next(g.size());
        for (int v : frontier) next |= g.parents_of(v);
        next &= within;
        next -= reached;
        reached |= next;
        frontier = std::move(next);
    }
    return reached;
}

VertexSet c_component_of(const CausalGraph& g, const VertexSet& s, const VertexSet& within) {
    if (!s.is_subset_of(within))
        throw std::invalid_argument("c_component_of: S must be a subset of `within`");
    VertexSet reached = s;
    VertexSet frontier = s;
    while (!frontier.empty()) {
        VertexSet next(g.size());
        for (int v : frontier) next |= g.bidirected_of(v);
        next &= within;
        next -= reached;
        reached |= next;
        frontier = std::move(next);
    }
    return reached;
}

bool is_c_component(const CausalGraph& g, const VertexSet& x) {
    if (x.empty()) return true;
    VertexSet seed(g.size());
    seed.add(x.first());
    return c_component_of(g, seed, x) == x;
}

std::vector<VertexSet> maximal_c_components(const CausalGraph& g, const VertexSet& x) {
    std::vector<VertexSet> out;
    VertexSet left = x;
    while (!left.empty()) {
        VertexSet seed(g.size());
        seed.add(left.first());
        out.push_back(c_component_of(g, seed, x));
        left -= out.back();
    }
    return out;
}

VertexSet ancestral_target(const CausalGraph& g, const VertexSet& s, const VertexSet& t) {
    if (s.intersects(t)) throw std::invalid_argument("ancestral_target: S and T must be disjoint");
    return ancestors(g, s, g.all_vertices() - t);
}

}  // namespace mci

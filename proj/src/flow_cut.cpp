#include "mci/flow_cut.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "mci/errors.hpp"

namespace mci {

namespace {

struct Dinic {
    struct Arc {
        int to;
        double cap;
    };
    std::vector<Arc> arcs;                 // arc 2i/2i+1 are a residual pair
    std::vector<std::vector<int>> adj;
    std::vector<int> level, it;

    explicit Dinic(int n) : adj(n), level(n), it(n) {}

    int add_arc(int u, int v, double cap) {
        int id = static_cast<int>(arcs.size());
        arcs.push_back({v, cap});
        arcs.push_back({u, 0.0});
        adj[u].push_back(id);
        adj[v].push_back(id + 1);
        return id;
    }

    bool bfs(int s, int t) {
        std::fill(level.begin(), level.end(), -1);
        std::queue<int> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int id : adj[u]) {
                const Arc& a = arcs[id];
                if (a.cap > 0.0 && level[a.to] == -1) {
                    level[a.to] = level[u] + 1;
                    q.push(a.to);
                }
            }
        }
        return level[t] != -1;
    }

    double dfs(int u, int t, double pushed) {
        if (u == t) return pushed;
        for (int& i = it[u]; i < static_cast<int>(adj[u].size()); ++i) {
            int id = adj[u][i];
            Arc& a = arcs[id];
            if (a.cap > 0.0 && level[a.to] == level[u] + 1) {
                double got = dfs(a.to, t, std::min(pushed, a.cap));
                if (got > 0.0) {
                    a.cap -= got;
                    arcs[id ^ 1].cap += got;
                    return got;
                }
            }
        }
        return 0.0;
    }

    double max_flow(int s, int t) {
        double flow = 0.0;
        while (bfs(s, t)) {
            std::fill(it.begin(), it.end(), 0);
            while (double got = dfs(s, t, 1e300)) flow += got;
        }
        return flow;
    }

    VertexSet residual_reachable(int s, int n_nodes) {
        VertexSet r(n_nodes);
        std::queue<int> q;
        r.add(s);
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int id : adj[u]) {
                const Arc& a = arcs[id];
                if (a.cap > 0.0 && !r.contains(a.to)) {
                    r.add(a.to);
                    q.push(a.to);
                }
            }
        }
        return r;
    }
};

}  // namespace

VertexSet min_vertex_cut(const CutProblem& p) {
    if (p.n <= 0) throw std::invalid_argument("min_vertex_cut: empty problem");
    if (static_cast<int>(p.weights.size()) != p.n)
        throw std::invalid_argument("min_vertex_cut: weights must cover all vertices");
    if (p.source == p.sink || p.source < 0 || p.source >= p.n || p.sink < 0 || p.sink >= p.n)
        throw std::invalid_argument("min_vertex_cut: bad terminals");
    for (auto [u, v] : p.edges) {
        if (u < 0 || u >= p.n || v < 0 || v >= p.n)
            throw std::out_of_range("min_vertex_cut: edge index out of range");
        bool adjacent = (u == p.source && v == p.sink) ||
                        (!p.directed && u == p.sink && v == p.source);
        if (adjacent)
            throw std::invalid_argument("min_vertex_cut: terminals must not be adjacent");
    }

    double finite_sum = 0.0;
    for (int v = 0; v < p.n; ++v)
        if (v != p.source && v != p.sink && !p.weights[v].is_infinite())
            finite_sum += p.weights[v].value();
    const double big = finite_sum + 1.0;

    // Split v into entry node 2v and exit node 2v+1; terminals keep a single
    // role (source acts as its exit, sink as its entry).
    auto entry = [&](int v) { return 2 * v; };
    auto exit_ = [&](int v) { return 2 * v + 1; };
    Dinic net(2 * p.n);
    for (int v = 0; v < p.n; ++v) {
        if (v == p.source || v == p.sink) continue;
        double cap = p.weights[v].is_infinite() ? big : p.weights[v].value();
        net.add_arc(entry(v), exit_(v), cap);
    }
    for (auto [u, v] : p.edges) {
        net.add_arc(exit_(u), entry(v), big);
        if (!p.directed) net.add_arc(exit_(v), entry(u), big);
    }

    double flow = net.max_flow(exit_(p.source), entry(p.sink));
    if (flow >= big - 0.5)
        throw infeasible_error("min_vertex_cut: every cut requires an infinite-weight vertex");

    VertexSet reach = net.residual_reachable(exit_(p.source), 2 * p.n);
    VertexSet cut(p.n);
    for (int v = 0; v < p.n; ++v) {
        if (v == p.source || v == p.sink) continue;
        if (reach.contains(entry(v)) && !reach.contains(exit_(v))) cut.add(v);
    }
    return cut;
}

}  // namespace mci

// Copyright (c) spannerlab contributors.
// SPDX-License-Identifier: Apache-2.0
#include "spannerlab/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>
#include <set>
#include <stdexcept>

#include "spannerlab/errors.hpp"

namespace spannerlab {

namespace {
constexpr double kLenTol = 1e-9;
}

DiGraph::DiGraph(int n, const std::vector<EdgeSpec>& specs) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    edges_.reserve(specs.size());
    out_.assign(static_cast<std::size_t>(n), {});
    in_.assign(static_cast<std::size_t>(n), {});
    std::set<std::pair<int, int>> seen;
    unit_length_ = true;
    for (const EdgeSpec& s : specs) {
        if (s.src < 0 || s.src >= n || s.dst < 0 || s.dst >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (s.src == s.dst) throw std::invalid_argument("self-loops are not allowed");
        if (!seen.insert({s.src, s.dst}).second)
            throw std::invalid_argument("parallel edges are not allowed");
        if (!(s.length >= 0.0) || !std::isfinite(s.length))
            throw std::invalid_argument("edge length must be finite and nonnegative");
        if (!(s.cost >= 0.0) || !std::isfinite(s.cost))
            throw std::invalid_argument("edge cost must be finite and nonnegative");
        const int id = static_cast<int>(edges_.size());
        edges_.push_back(Edge{id, s.src, s.dst, s.length, s.cost});
        if (s.length != 1.0) unit_length_ = false;
    }
    for (const Edge& e : edges_) {
        out_[static_cast<std::size_t>(e.src)].push_back(e.id);
        in_[static_cast<std::size_t>(e.dst)].push_back(e.id);
    }
    auto by_dst = [this](int a, int b) {
        return std::pair(edges_[a].dst, a) < std::pair(edges_[b].dst, b);
    };
    auto by_src = [this](int a, int b) {
        return std::pair(edges_[a].src, a) < std::pair(edges_[b].src, b);
    };
    for (auto& v : out_) std::sort(v.begin(), v.end(), by_dst);
    for (auto& v : in_) std::sort(v.begin(), v.end(), by_src);
}

std::optional<int> DiGraph::edge_between(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return std::nullopt;
    const auto& outs = out_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(outs.begin(), outs.end(), v, [this](int eid, int target) {
        return edges_[static_cast<std::size_t>(eid)].dst < target;
    });
    if (it != outs.end() && edges_[static_cast<std::size_t>(*it)].dst == v) return *it;
    return std::nullopt;
}

double DiGraph::total_cost() const {
    double c = 0.0;
    for (const Edge& e : edges_) c += e.cost;
    return c;
}

std::vector<int> Path::vertex_sequence(const DiGraph& g) const {
    std::vector<int> seq;
    seq.reserve(edge_ids.size() + 1);
    seq.push_back(demand.first);
    for (int eid : edge_ids) seq.push_back(g.edge(eid).dst);
    return seq;
}

std::vector<double> shortest_distances(const DiGraph& g, int source, bool reversed) {
    const int n = g.vertex_count();
    if (source < 0 || source >= n) throw std::invalid_argument("invalid source vertex");
    std::vector<double> dist(static_cast<std::size_t>(n), kInf);
    dist[static_cast<std::size_t>(source)] = 0.0;
    auto neighbors = [&](int v) -> const std::vector<int>& {
        return reversed ? g.in_edges(v) : g.out_edges(v);
    };
    auto head = [&](const Edge& e) { return reversed ? e.src : e.dst; };

    if (g.unit_length()) {
        std::queue<int> q;
        q.push(source);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int eid : neighbors(v)) {
                int w = head(g.edge(eid));
                if (dist[static_cast<std::size_t>(w)] == kInf) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1.0;
                    q.push(w);
                }
            }
        }
        return dist;
    }

    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.push({0.0, source});
    std::vector<char> done(static_cast<std::size_t>(n), 0);
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (done[static_cast<std::size_t>(v)]) continue;
        done[static_cast<std::size_t>(v)] = 1;
        for (int eid : neighbors(v)) {
            const Edge& e = g.edge(eid);
            int w = head(e);
            double nd = d + e.length;
            if (nd < dist[static_cast<std::size_t>(w)]) {
                dist[static_cast<std::size_t>(w)] = nd;
                pq.push({nd, w});
            }
        }
    }
    return dist;
}

std::vector<int> arborescence(const DiGraph& g, int root, ArborescenceDirection dir) {
    const int n = g.vertex_count();
    if (root < 0 || root >= n) throw std::invalid_argument("invalid root vertex");
    const bool out = dir == ArborescenceDirection::Out;
    // dist[w] = d(root,w) for Out, d(w,root) for In.
    std::vector<double> dist = shortest_distances(g, root, /*reversed=*/!out);
    std::vector<int> tree;
    for (int w = 0; w < n; ++w) {
        if (w == root || dist[static_cast<std::size_t>(w)] == kInf) continue;
        // Parent edge: deterministic argmin over tight incoming edges.
        int best = -1;
        std::pair<int, int> best_key{0, 0};
        const auto& cands = out ? g.in_edges(w) : g.out_edges(w);
        for (int eid : cands) {
            const Edge& e = g.edge(eid);
            int pred = out ? e.src : e.dst;
            double through = dist[static_cast<std::size_t>(pred)] + e.length;
            if (std::abs(through - dist[static_cast<std::size_t>(w)]) <= kLenTol) {
                std::pair<int, int> key{pred, eid};
                if (best < 0 || key < best_key) {
                    best = eid;
                    best_key = key;
                }
            }
        }
        if (best >= 0) tree.push_back(best);
    }
    std::sort(tree.begin(), tree.end());
    return tree;
}

namespace {

struct StretchDfs {
    const DiGraph& g;
    int target;
    double budget;
    std::size_t cap;
    bool count_only;
    const std::vector<double>& dist_to_target;
    std::vector<char> on_path;
    std::vector<int> stack_edges;
    std::vector<Path>* out = nullptr;
    std::size_t found = 0;
    Demand demand;
    bool overflowed = false;

    void run(int v, double len) {
        if (overflowed) return;
        if (v == target && !stack_edges.empty()) {
            ++found;
            if (found > cap) {
                overflowed = true;
                return;
            }
            if (!count_only) out->push_back(Path{demand, stack_edges, len});
            return;  // simple paths cannot revisit the target
        }
        for (int eid : g.out_edges(v)) {  // sorted by neighbor id => lexicographic emission
            const Edge& e = g.edge(eid);
            if (on_path[static_cast<std::size_t>(e.dst)]) continue;
            double nl = len + e.length;
            double rest = dist_to_target[static_cast<std::size_t>(e.dst)];
            if (rest == kInf || nl + rest > budget + kLenTol) continue;
            on_path[static_cast<std::size_t>(e.dst)] = 1;
            stack_edges.push_back(eid);
            run(e.dst, nl);
            stack_edges.pop_back();
            on_path[static_cast<std::size_t>(e.dst)] = 0;
            if (overflowed) return;
        }
    }
};

std::size_t stretch_paths_impl(const DiGraph& g, Demand demand, double k, std::size_t cap,
                               std::vector<Path>* out) {
    auto [u, v] = demand;
    if (!g.edge_between(u, v)) throw std::invalid_argument("demand must be an edge of the graph");
    if (k < 1.0) throw std::invalid_argument("stretch factor k must be >= 1");
    if (cap < 1) throw std::invalid_argument("max_paths must be >= 1");
    std::vector<double> to_v = shortest_distances(g, v, /*reversed=*/true);
    std::vector<double> from_u = shortest_distances(g, u, /*reversed=*/false);
    double d = from_u[static_cast<std::size_t>(v)];
    double budget = k * d;
    StretchDfs dfs{g,  v,  budget, cap, out == nullptr, to_v, std::vector<char>(
        static_cast<std::size_t>(g.vertex_count()), 0), {}, out, 0, demand, false};
    dfs.on_path[static_cast<std::size_t>(u)] = 1;
    dfs.run(u, 0.0);
    if (dfs.overflowed) {
        if (out != nullptr) throw PathOverflow(cap);
        return cap + 1;  // count mode saturates instead of throwing
    }
    return dfs.found;
}

}  // namespace

std::vector<Path> enumerate_stretch_paths(const DiGraph& g, Demand demand, double k,
                                          std::size_t max_paths) {
    std::vector<Path> paths;
    stretch_paths_impl(g, demand, k, max_paths, &paths);
    return paths;
}

std::size_t count_stretch_paths(const DiGraph& g, Demand demand, double k, std::size_t cap) {
    return stretch_paths_impl(g, demand, k, cap, nullptr);
}

DemandContext support_set(const DiGraph& g, Demand demand, double k) {
    auto [u, v] = demand;
    if (!g.edge_between(u, v)) throw std::invalid_argument("demand must be an edge of the graph");
    if (k < 1.0) throw std::invalid_argument("stretch factor k must be >= 1");
    std::vector<double> from_u = shortest_distances(g, u, /*reversed=*/false);
    std::vector<double> to_v = shortest_distances(g, v, /*reversed=*/true);
    double d = from_u[static_cast<std::size_t>(v)];
    DemandContext ctx;
    ctx.demand = demand;
    ctx.dist = d;
    ctx.stretch_budget = k * d;
    for (int w = 0; w < g.vertex_count(); ++w) {
        double a = from_u[static_cast<std::size_t>(w)];
        double b = to_v[static_cast<std::size_t>(w)];
        if (a == kInf || b == kInf) continue;
        if (a + b <= ctx.stretch_budget + kLenTol) ctx.support_vertices.push_back(w);
    }
    return ctx;
}

}  // namespace spannerlab

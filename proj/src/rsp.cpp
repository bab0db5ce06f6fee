// Copyright (c) spannerlab contributors.
// SPDX-License-Identifier: Apache-2.0
#include "spannerlab/rsp.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>
#include <stdexcept>

#include "spannerlab/errors.hpp"

namespace spannerlab {

namespace {

constexpr double kTol = 1e-9;

struct Mask {
    std::vector<char> vertex;
    std::vector<char> edge;

    Mask(const DiGraph& g, const RSPQuery& q)
        : vertex(static_cast<std::size_t>(g.vertex_count()), 0),
          edge(static_cast<std::size_t>(g.edge_count()), 0) {
        for (int v : q.forbidden_vertices) vertex.at(static_cast<std::size_t>(v)) = 1;
        for (int e : q.forbidden_edges) edge.at(static_cast<std::size_t>(e)) = 1;
    }
    bool allows(const Edge& e) const {
        return !edge[static_cast<std::size_t>(e.id)] && !vertex[static_cast<std::size_t>(e.src)] &&
               !vertex[static_cast<std::size_t>(e.dst)];
    }
    bool allows_vertex(int v) const { return !vertex[static_cast<std::size_t>(v)]; }
};

void validate_query(const RSPQuery& q) {
    if (q.g == nullptr) throw std::invalid_argument("rsp query missing graph");
    const DiGraph& g = *q.g;
    if (q.source < 0 || q.source >= g.vertex_count() || q.target < 0 ||
        q.target >= g.vertex_count() || q.source == q.target)
        throw std::invalid_argument("rsp query endpoints invalid");
    if (q.weight.size() != static_cast<std::size_t>(g.edge_count()))
        throw std::invalid_argument("rsp weight vector size mismatch");
    for (std::size_t i = 0; i < q.weight.size(); ++i) {
        double w = q.weight[i];
        if (!(w >= 0.0) || !std::isfinite(w))
            throw std::invalid_argument("rsp weights must be finite and nonnegative (w[" +
                                        std::to_string(i) + "]=" + std::to_string(w) + ")");
    }
}

// Masked Dijkstra under the given per-edge values; fills parent edge ids.
std::vector<double> masked_dijkstra(const DiGraph& g, const Mask& mask, int source,
                                    const std::vector<double>& value, std::vector<int>* parent) {
    std::vector<double> dist(static_cast<std::size_t>(g.vertex_count()), kInf);
    if (parent) parent->assign(static_cast<std::size_t>(g.vertex_count()), -1);
    if (!mask.allows_vertex(source)) return dist;
    dist[static_cast<std::size_t>(source)] = 0.0;
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.push({0.0, source});
    std::vector<char> done(static_cast<std::size_t>(g.vertex_count()), 0);
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (done[static_cast<std::size_t>(v)]) continue;
        done[static_cast<std::size_t>(v)] = 1;
        for (int eid : g.out_edges(v)) {
            const Edge& e = g.edge(eid);
            if (!mask.allows(e)) continue;
            double nd = d + value[static_cast<std::size_t>(eid)];
            if (nd < dist[static_cast<std::size_t>(e.dst)] - 1e-15) {
                dist[static_cast<std::size_t>(e.dst)] = nd;
                if (parent) (*parent)[static_cast<std::size_t>(e.dst)] = eid;
                pq.push({nd, e.dst});
            }
        }
    }
    return dist;
}

Path path_from_parents(const DiGraph& g, int source, int target, const std::vector<int>& parent) {
    std::vector<int> rev;
    int cur = target;
    while (cur != source) {
        int eid = parent[static_cast<std::size_t>(cur)];
        rev.push_back(eid);
        cur = g.edge(eid).src;
    }
    std::reverse(rev.begin(), rev.end());
    double len = 0.0;
    for (int eid : rev) len += g.edge(eid).length;
    return Path{{source, target}, rev, len};
}

std::vector<double> edge_lengths(const DiGraph& g) {
    std::vector<double> len(static_cast<std::size_t>(g.edge_count()));
    for (const Edge& e : g.edges()) len[static_cast<std::size_t>(e.id)] = e.length;
    return len;
}

double path_weight(const Path& p, const std::vector<double>& weight) {
    double w = 0.0;
    for (int eid : p.edge_ids) w += weight[static_cast<std::size_t>(eid)];
    return w;
}

}  // namespace

std::optional<RSPResult> rsp_exact_hop(const RSPQuery& q) {
    validate_query(q);
    const DiGraph& g = *q.g;
    if (!g.unit_length()) throw std::invalid_argument("rsp_exact_hop requires a unit-length graph");
    Mask mask(g, q);
    if (!mask.allows_vertex(q.source) || !mask.allows_vertex(q.target)) return std::nullopt;
    const int n = g.vertex_count();
    const int h = static_cast<int>(std::floor(q.budget + kTol));
    if (h < 1) return std::nullopt;

    // dp[j][v]: min weight over walks of <= j hops. Strictly-better acceptance
    // keeps parent chains cycle-free, so reconstruction yields a simple path.
    const std::size_t nn = static_cast<std::size_t>(n);
    std::vector<std::vector<double>> dp(static_cast<std::size_t>(h) + 1,
                                        std::vector<double>(nn, kInf));
    std::vector<std::vector<int>> par(static_cast<std::size_t>(h) + 1, std::vector<int>(nn, -1));
    dp[0][static_cast<std::size_t>(q.source)] = 0.0;
    for (int j = 1; j <= h; ++j) {
        dp[static_cast<std::size_t>(j)] = dp[static_cast<std::size_t>(j - 1)];
        for (int v = 0; v < n; ++v) {
            for (int eid : g.in_edges(v)) {  // sorted by source id: lexicographic ties
                const Edge& e = g.edge(eid);
                if (!mask.allows(e)) continue;
                double base = dp[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(e.src)];
                if (base == kInf) continue;
                double cand = base + q.weight[static_cast<std::size_t>(eid)];
                if (cand < dp[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)] - 1e-15) {
                    dp[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)] = cand;
                    par[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)] = eid;
                }
            }
        }
    }
    if (dp[static_cast<std::size_t>(h)][static_cast<std::size_t>(q.target)] == kInf)
        return std::nullopt;
    // Fewest hops realizing the optimal weight.
    int j = h;
    while (j > 0 && dp[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(q.target)] ==
                        dp[static_cast<std::size_t>(h)][static_cast<std::size_t>(q.target)])
        --j;
    std::vector<int> rev;
    int cur = q.target;
    int jj = j;
    while (cur != q.source) {
        while (par[static_cast<std::size_t>(jj)][static_cast<std::size_t>(cur)] < 0) --jj;
        int eid = par[static_cast<std::size_t>(jj)][static_cast<std::size_t>(cur)];
        rev.push_back(eid);
        cur = g.edge(eid).src;
        --jj;
    }
    std::reverse(rev.begin(), rev.end());
    Path p{{q.source, q.target}, rev, static_cast<double>(rev.size())};
    return RSPResult{p, path_weight(p, q.weight)};
}

std::optional<RSPResult> rsp_exact_pareto(const RSPQuery& q) {
    validate_query(q);
    const DiGraph& g = *q.g;
    Mask mask(g, q);
    if (!mask.allows_vertex(q.source) || !mask.allows_vertex(q.target)) return std::nullopt;

    std::vector<double> len = edge_lengths(g);
    std::vector<double> to_target(static_cast<std::size_t>(g.vertex_count()), kInf);
    {
        // Masked reverse Dijkstra on lengths for budget pruning.
        std::vector<double> dist(static_cast<std::size_t>(g.vertex_count()), kInf);
        using Item = std::pair<double, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        if (mask.allows_vertex(q.target)) {
            dist[static_cast<std::size_t>(q.target)] = 0.0;
            pq.push({0.0, q.target});
        }
        std::vector<char> done(static_cast<std::size_t>(g.vertex_count()), 0);
        while (!pq.empty()) {
            auto [d, v] = pq.top();
            pq.pop();
            if (done[static_cast<std::size_t>(v)]) continue;
            done[static_cast<std::size_t>(v)] = 1;
            for (int eid : g.in_edges(v)) {
                const Edge& e = g.edge(eid);
                if (!mask.allows(e)) continue;
                double nd = d + e.length;
                if (nd < dist[static_cast<std::size_t>(e.src)] - 1e-15) {
                    dist[static_cast<std::size_t>(e.src)] = nd;
                    pq.push({nd, e.src});
                }
            }
        }
        to_target = dist;
    }

    struct Label {
        double length, weight;
        int vertex;
        int parent_label;  // index into labels
        int via_edge;
    };
    std::vector<Label> labels;
    std::vector<std::vector<int>> at_vertex(static_cast<std::size_t>(g.vertex_count()));
    auto dominated = [&](int v, double length, double weight) {
        for (int li : at_vertex[static_cast<std::size_t>(v)]) {
            const Label& l = labels[static_cast<std::size_t>(li)];
            if (l.length <= length + 1e-15 && l.weight <= weight + 1e-15) return true;
        }
        return false;
    };

    using QItem = std::tuple<double, double, int, int>;  // weight, length, vertex, label index
    std::priority_queue<QItem, std::vector<QItem>, std::greater<>> pq;
    labels.push_back(Label{0.0, 0.0, q.source, -1, -1});
    at_vertex[static_cast<std::size_t>(q.source)].push_back(0);
    pq.push({0.0, 0.0, q.source, 0});
    int best = -1;
    while (!pq.empty()) {
        auto [w, l, v, li] = pq.top();
        pq.pop();
        const Label lab = labels[static_cast<std::size_t>(li)];
        if (lab.length != l || lab.weight != w) continue;  // stale
        if (v == q.target) {
            best = li;
            break;  // min weight reached (weights nonnegative)
        }
        for (int eid : g.out_edges(v)) {
            const Edge& e = g.edge(eid);
            if (!mask.allows(e)) continue;
            double nl = l + e.length;
            double nw = w + q.weight[static_cast<std::size_t>(eid)];
            if (to_target[static_cast<std::size_t>(e.dst)] == kInf ||
                nl + to_target[static_cast<std::size_t>(e.dst)] > q.budget + kTol)
                continue;
            if (dominated(e.dst, nl, nw)) continue;
            // Drop labels this one dominates.
            auto& lst = at_vertex[static_cast<std::size_t>(e.dst)];
            lst.erase(std::remove_if(lst.begin(), lst.end(),
                                     [&](int other) {
                                         const Label& o = labels[static_cast<std::size_t>(other)];
                                         return nl <= o.length && nw <= o.weight;
                                     }),
                      lst.end());
            int nid = static_cast<int>(labels.size());
            labels.push_back(Label{nl, nw, e.dst, li, eid});
            lst.push_back(nid);
            pq.push({nw, nl, e.dst, nid});
        }
    }
    if (best < 0) return std::nullopt;
    std::vector<int> rev;
    for (int li = best; labels[static_cast<std::size_t>(li)].parent_label >= 0;
         li = labels[static_cast<std::size_t>(li)].parent_label)
        rev.push_back(labels[static_cast<std::size_t>(li)].via_edge);
    std::reverse(rev.begin(), rev.end());
    double plen = 0.0;
    for (int eid : rev) plen += g.edge(eid).length;
    Path p{{q.source, q.target}, rev, plen};
    return RSPResult{p, path_weight(p, q.weight)};
}

namespace {

// Scaled DP over (weight grid, vertex) minimizing true length. Returns per
// grid level the min length, with parents for reconstruction.
struct ScaledDp {
    const DiGraph& g;
    const Mask& mask;
    const RSPQuery& q;
    std::vector<long long> scaled;  // per edge
    int levels;                     // grid levels 0..levels
    std::vector<std::vector<double>> len;
    std::vector<std::vector<int>> par;

    ScaledDp(const DiGraph& g_, const Mask& m_, const RSPQuery& q_, double theta, int levels_)
        : g(g_), mask(m_), q(q_), levels(levels_) {
        scaled.resize(static_cast<std::size_t>(g.edge_count()));
        for (int e = 0; e < g.edge_count(); ++e)
            scaled[static_cast<std::size_t>(e)] =
                static_cast<long long>(std::floor(q.weight[static_cast<std::size_t>(e)] / theta));
        const std::size_t nn = static_cast<std::size_t>(g.vertex_count());
        len.assign(static_cast<std::size_t>(levels) + 1, std::vector<double>(nn, kInf));
        par.assign(static_cast<std::size_t>(levels) + 1, std::vector<int>(nn, -1));
        len[0][static_cast<std::size_t>(q.source)] = 0.0;
        for (int w = 0; w <= levels; ++w) {
            if (w > 0) {
                len[static_cast<std::size_t>(w)] = len[static_cast<std::size_t>(w - 1)];
                // Edges with positive grid weight enter from lower levels.
                for (int v = 0; v < g.vertex_count(); ++v) {
                    for (int eid : g.in_edges(v)) {
                        const Edge& e = g.edge(eid);
                        if (!mask.allows(e)) continue;
                        long long sw = scaled[static_cast<std::size_t>(eid)];
                        if (sw == 0 || sw > w) continue;
                        double base =
                            len[static_cast<std::size_t>(w - sw)][static_cast<std::size_t>(e.src)];
                        if (base == kInf) continue;
                        double cand = base + e.length;
                        if (cand <
                            len[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)] - 1e-15) {
                            len[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)] = cand;
                            par[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)] = eid;
                        }
                    }
                }
            }
            // Zero-grid edges propagate within the level (Bellman-Ford rounds).
            for (int round = 0; round < g.vertex_count(); ++round) {
                bool changed = false;
                for (const Edge& e : g.edges()) {
                    if (!mask.allows(e)) continue;
                    if (scaled[static_cast<std::size_t>(e.id)] != 0) continue;
                    double base = len[static_cast<std::size_t>(w)][static_cast<std::size_t>(e.src)];
                    if (base == kInf) continue;
                    double cand = base + e.length;
                    if (cand <
                        len[static_cast<std::size_t>(w)][static_cast<std::size_t>(e.dst)] - 1e-15) {
                        len[static_cast<std::size_t>(w)][static_cast<std::size_t>(e.dst)] = cand;
                        par[static_cast<std::size_t>(w)][static_cast<std::size_t>(e.dst)] = e.id;
                        changed = true;
                    }
                }
                if (!changed) break;
            }
        }
    }

    // Smallest grid level whose min length meets the budget.
    int feasible_level(double budget) const {
        for (int w = 0; w <= levels; ++w)
            if (len[static_cast<std::size_t>(w)][static_cast<std::size_t>(q.target)] <=
                budget + kTol * (1.0 + budget))
                return w;
        return -1;
    }

    Path reconstruct(int level) const {
        std::vector<int> rev;
        int cur = q.target;
        int w = level;
        while (cur != q.source) {
            while (par[static_cast<std::size_t>(w)][static_cast<std::size_t>(cur)] < 0) --w;
            int eid = par[static_cast<std::size_t>(w)][static_cast<std::size_t>(cur)];
            rev.push_back(eid);
            cur = g.edge(eid).src;
            w -= static_cast<int>(scaled[static_cast<std::size_t>(eid)]);
        }
        std::reverse(rev.begin(), rev.end());
        double plen = 0.0;
        for (int eid : rev) plen += g.edge(eid).length;
        return Path{{q.source, q.target}, rev, plen};
    }
};

}  // namespace

RSPResult rsp_fptas(const RSPQuery& q) {
    validate_query(q);
    if (!(q.epsilon > 0.0)) throw std::invalid_argument("rsp_fptas requires epsilon > 0");
    const DiGraph& g = *q.g;
    Mask mask(g, q);

    // Budget feasibility, ignoring weights.
    std::vector<int> parent;
    std::vector<double> len = edge_lengths(g);
    std::vector<double> dist = masked_dijkstra(g, mask, q.source, len, &parent);
    if (dist[static_cast<std::size_t>(q.target)] > q.budget + kTol * (1.0 + q.budget))
        throw NoFeasiblePath("no path within length budget");

    // A zero-weight budget-feasible path is exactly optimal.
    {
        std::vector<double> blocked = len;
        for (int e = 0; e < g.edge_count(); ++e)
            if (q.weight[static_cast<std::size_t>(e)] > 0.0)
                blocked[static_cast<std::size_t>(e)] = kInf;
        // Hide positive-weight edges behind an extra edge mask.
        RSPQuery qq = q;
        for (int e = 0; e < g.edge_count(); ++e)
            if (q.weight[static_cast<std::size_t>(e)] > 0.0) qq.forbidden_edges.push_back(e);
        Mask zmask(g, qq);
        std::vector<int> zpar;
        std::vector<double> zdist = masked_dijkstra(g, zmask, q.source, len, &zpar);
        if (zdist[static_cast<std::size_t>(q.target)] <= q.budget + kTol * (1.0 + q.budget)) {
            Path p = path_from_parents(g, q.source, q.target, zpar);
            return RSPResult{p, path_weight(p, q.weight)};
        }
    }

    const int S = std::max(1, g.vertex_count() - 1);
    double total = 0.0;
    for (const Edge& e : g.edges())
        if (mask.allows(e)) total += q.weight[static_cast<std::size_t>(e.id)];
    double V = std::max(total, 1e-300);

    // Bracket OPT within [V/2, 2V] using unit-epsilon tests.
    const int kMaxHalvings = 2048;
    for (int it = 0; it < kMaxHalvings; ++it) {
        double theta = (V / 2.0) / static_cast<double>(S);
        ScaledDp dp(g, mask, q, theta, S);
        if (dp.feasible_level(q.budget) < 0) break;  // OPT > V/2
        V /= 2.0;
    }
    const double L = V / 2.0;

    // Final grid: theta = eps*L/S, levels enough to cover weight 2V = 4L.
    const double theta = q.epsilon * L / static_cast<double>(S);
    const int levels = static_cast<int>(std::ceil(4.0 * static_cast<double>(S) / q.epsilon)) + S + 1;
    ScaledDp dp(g, mask, q, theta, levels);
    int level = dp.feasible_level(q.budget);
    if (level < 0) throw NumericalFailure("rsp_fptas: final grid missed a feasible path");
    Path p = dp.reconstruct(level);
    return RSPResult{p, path_weight(p, q.weight)};
}

}  // namespace spannerlab

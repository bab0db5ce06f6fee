// Copyright (c) spannerlab contributors.
// SPDX-License-Identifier: Apache-2.0
#include "spannerlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "spannerlab/errors.hpp"
#include "spannerlab/instances.hpp"
#include "spannerlab/subsets.hpp"

namespace spannerlab {

namespace {

constexpr double kStretchSlack = 1e-12;

// Subgraph distances from source, with optional vertex/edge masks.
std::vector<double> sub_distances(const DiGraph& g, const std::vector<char>& edge_in,
                                  const std::vector<char>& vertex_dead, int source) {
    const int n = g.vertex_count();
    std::vector<double> dist(static_cast<std::size_t>(n), kInf);
    if (vertex_dead[static_cast<std::size_t>(source)]) return dist;
    dist[static_cast<std::size_t>(source)] = 0.0;
    if (g.unit_length()) {
        std::queue<int> q;
        q.push(source);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int eid : g.out_edges(v)) {
                if (!edge_in[static_cast<std::size_t>(eid)]) continue;
                const Edge& e = g.edge(eid);
                if (vertex_dead[static_cast<std::size_t>(e.dst)]) continue;
                if (dist[static_cast<std::size_t>(e.dst)] == kInf) {
                    dist[static_cast<std::size_t>(e.dst)] = dist[static_cast<std::size_t>(v)] + 1.0;
                    q.push(e.dst);
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
        for (int eid : g.out_edges(v)) {
            if (!edge_in[static_cast<std::size_t>(eid)]) continue;
            const Edge& e = g.edge(eid);
            if (vertex_dead[static_cast<std::size_t>(e.dst)]) continue;
            double nd = d + e.length;
            if (nd < dist[static_cast<std::size_t>(e.dst)]) {
                dist[static_cast<std::size_t>(e.dst)] = nd;
                pq.push({nd, e.dst});
            }
        }
    }
    return dist;
}

// Core check under masks: demands are the surviving edges of g.
VerifyReport verify_masked(const DiGraph& g, double k, const std::vector<char>& edge_in,
                           const std::vector<char>& vertex_dead,
                           const std::vector<char>& edge_dead) {
    VerifyReport rep;
    rep.valid = true;
    rep.realized_stretch = 1.0;

    // Demands grouped by source; one masked sweep per source in the base
    // graph (for d_G\F) and one in the spanner subgraph.
    std::vector<char> all_edges(static_cast<std::size_t>(g.edge_count()), 1);
    for (int e = 0; e < g.edge_count(); ++e)
        if (edge_dead[static_cast<std::size_t>(e)]) all_edges[static_cast<std::size_t>(e)] = 0;
    std::vector<char> spanner_edges(static_cast<std::size_t>(g.edge_count()), 0);
    for (int e = 0; e < g.edge_count(); ++e)
        if (edge_in[static_cast<std::size_t>(e)] && !edge_dead[static_cast<std::size_t>(e)])
            spanner_edges[static_cast<std::size_t>(e)] = 1;

    std::vector<char> source_used(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const Edge& e : g.edges()) {
        if (edge_dead[static_cast<std::size_t>(e.id)]) continue;
        if (vertex_dead[static_cast<std::size_t>(e.src)] ||
            vertex_dead[static_cast<std::size_t>(e.dst)])
            continue;
        source_used[static_cast<std::size_t>(e.src)] = 1;
    }
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (!source_used[static_cast<std::size_t>(u)]) continue;
        auto base = sub_distances(g, all_edges, vertex_dead, u);
        auto sub = sub_distances(g, spanner_edges, vertex_dead, u);
        for (int eid : g.out_edges(u)) {
            if (edge_dead[static_cast<std::size_t>(eid)]) continue;
            const Edge& e = g.edge(eid);
            if (vertex_dead[static_cast<std::size_t>(e.dst)]) continue;
            double d = base[static_cast<std::size_t>(e.dst)];
            double ds = sub[static_cast<std::size_t>(e.dst)];
            double stretch = ds == kInf ? kInf : (d == 0.0 ? 1.0 : ds / d);
            if (stretch > rep.realized_stretch) {
                rep.realized_stretch = stretch;
                rep.worst_edge = {e.src, e.dst};
            }
            if (ds > k * d + kStretchSlack * (1.0 + k * d)) rep.valid = false;
        }
    }
    return rep;
}

std::vector<char> to_mask(std::size_t size, const std::vector<int>& ids) {
    std::vector<char> m(size, 0);
    for (int i : ids) m.at(static_cast<std::size_t>(i)) = 1;
    return m;
}

}  // namespace

VerifyReport verify_spanner(const DiGraph& g, double k, const std::vector<int>& edge_set) {
    std::vector<char> edge_in = to_mask(static_cast<std::size_t>(g.edge_count()), edge_set);
    std::vector<char> vdead(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<char> edead(static_cast<std::size_t>(g.edge_count()), 0);
    return verify_masked(g, k, edge_in, vdead, edead);
}

VerifyReport verify_ft(const DiGraph& g, double k, const std::vector<int>& edge_set,
                       FaultModel fault, std::uint64_t max_fault_sets) {
    const int universe =
        fault.kind == FaultKind::Vertex ? g.vertex_count() : g.edge_count();
    if (bounded_subset_count(universe, fault.r) > max_fault_sets)
        throw FaultBudgetTooLarge("fault-set enumeration too large");
    std::vector<char> edge_in = to_mask(static_cast<std::size_t>(g.edge_count()), edge_set);

    VerifyReport rep;
    rep.valid = true;
    rep.realized_stretch = 1.0;
    for_each_bounded_subset(universe, fault.r, [&](const std::vector<int>& f) {
        std::vector<char> vdead(static_cast<std::size_t>(g.vertex_count()), 0);
        std::vector<char> edead(static_cast<std::size_t>(g.edge_count()), 0);
        if (fault.kind == FaultKind::Vertex)
            for (int v : f) vdead[static_cast<std::size_t>(v)] = 1;
        else
            for (int e : f) edead[static_cast<std::size_t>(e)] = 1;
        VerifyReport sub = verify_masked(g, k, edge_in, vdead, edead);
        if (sub.realized_stretch > rep.realized_stretch) {
            rep.realized_stretch = sub.realized_stretch;
            rep.worst_edge = sub.worst_edge;
        }
        if (!sub.valid) {
            rep.valid = false;
            rep.worst_edge = sub.worst_edge;
            rep.realized_stretch = sub.realized_stretch;
            rep.failing_fault = f;
            return true;  // first failing fault set
        }
        return false;
    });
    return rep;
}

BruteForceResult brute_force_opt(const DiGraph& g, double k, std::optional<FaultModel> fault,
                                 int max_edges) {
    const int m = g.edge_count();
    if (m > max_edges) throw TooLarge("brute_force_opt: too many edges");

    // Forced edges: demands whose only stretch-k path is the direct edge.
    std::uint64_t forced = 0;
    for (const Edge& e : g.edges()) {
        if (count_stretch_paths(g, {e.src, e.dst}, k, 2) == 1) forced |= 1ULL << e.id;
    }

    auto valid = [&](const std::vector<int>& subset) {
        if (fault) return verify_ft(g, k, subset, *fault).valid;
        return verify_spanner(g, k, subset).valid;
    };

    BruteForceResult best;
    bool have = false;
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        if ((mask & forced) != forced) continue;
        double cost = 0.0;
        std::vector<int> subset;
        for (int e = 0; e < m; ++e)
            if (mask & (1ULL << e)) {
                cost += g.edge(e).cost;
                subset.push_back(e);
            }
        if (have && cost > best.value + 1e-12) continue;
        bool tie = have && std::abs(cost - best.value) <= 1e-12;
        if (tie && best.witness <= subset) continue;
        if (!valid(subset)) continue;
        best.value = cost;
        best.witness = subset;
        have = true;
    }
    if (!have) throw Infeasible("no edge subset is a valid spanner");
    return best;
}

int brute_force_minrep(const MinRepInstance& mr, int max_vertices) {
    const int n = mr.num_vertices();
    if (n > max_vertices) throw TooLarge("brute_force_minrep: instance too large");
    const int half = mr.side_groups();
    const int q = mr.group_size;

    // For every superedge (i,j) precompute the matched vertex-id pairs.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pair_masks;
    std::vector<std::vector<std::pair<int, int>>> super_pairs;
    for (int i = 0; i < half; ++i)
        for (int j = 0; j < half; ++j) {
            std::vector<std::pair<int, int>> pairs;
            for (int t = 0; t < q; ++t)
                pairs.push_back({mr.u_vertex(i, t), mr.v_vertex(j, mr.matchings[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(t)])});
            super_pairs.push_back(std::move(pairs));
        }

    int bestv = n + 1;
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        int size = __builtin_popcountll(mask);
        if (size >= bestv) continue;
        bool covers = true;
        for (const auto& pairs : super_pairs) {
            bool got = false;
            for (auto [u, v] : pairs)
                if ((mask >> u & 1ULL) && (mask >> v & 1ULL)) {
                    got = true;
                    break;
                }
            if (!got) {
                covers = false;
                break;
            }
        }
        if (covers) bestv = size;
    }
    return bestv;
}

int brute_force_setcover(int num_elements, const std::vector<std::uint64_t>& sets,
                         int max_sets) {
    const int s = static_cast<int>(sets.size());
    if (s > max_sets) throw TooLarge("brute_force_setcover: too many sets");
    if (num_elements > 63) throw TooLarge("brute_force_setcover: too many elements");
    const std::uint64_t full = num_elements == 0 ? 0 : (1ULL << num_elements) - 1;
    std::uint64_t reachable = 0;
    for (std::uint64_t st : sets) reachable |= st;
    if ((reachable & full) != full) throw Infeasible("some element is uncoverable");

    int best = s + 1;
    for (std::uint64_t mask = 0; mask < (1ULL << s); ++mask) {
        int size = __builtin_popcountll(mask);
        if (size >= best) continue;
        std::uint64_t got = 0;
        for (int i = 0; i < s; ++i)
            if (mask >> i & 1ULL) got |= sets[static_cast<std::size_t>(i)];
        if ((got & full) == full) best = size;
    }
    return best;
}

}  // namespace spannerlab

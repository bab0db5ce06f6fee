// Copyright (c) spannerlab contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spannerlab {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// One directed edge. Ids are dense 0..m-1 in insertion order.
struct Edge {
    int id;
    int src;
    int dst;
    double length;
    double cost;
};

/// Input form of an edge, before ids are assigned.
struct EdgeSpec {
    int src;
    int dst;
    double length = 1.0;
    double cost = 1.0;
};

using Demand = std::pair<int, int>;

/// Immutable directed graph with nonnegative edge lengths and costs.
/// No self-loops, no parallel edges. Safe to share across threads.
class DiGraph {
  public:
    DiGraph(int n, const std::vector<EdgeSpec>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool unit_length() const { return unit_length_; }

    const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Edge ids leaving / entering v, sorted by neighbor vertex id.
    const std::vector<int>& out_edges(int v) const { return out_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& in_edges(int v) const { return in_[static_cast<std::size_t>(v)]; }

    std::optional<int> edge_between(int u, int v) const;

    double total_cost() const;

  private:
    int n_;
    std::vector<Edge> edges_;
    bool unit_length_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

/// Simple path for one demand; edges chain src -> ... -> dst.
struct Path {
    Demand demand;
    std::vector<int> edge_ids;
    double total_length = 0.0;

    std::vector<int> vertex_sequence(const DiGraph& g) const;
};

/// Per-demand context: distance, stretch budget and the support set N_{u,v}.
struct DemandContext {
    Demand demand;
    double dist = 0.0;
    double stretch_budget = 0.0;
    std::vector<int> support_vertices;  // sorted
};

enum class ArborescenceDirection { In, Out };

/// Single-source shortest distances; kInf for unreachable vertices.
/// reversed=true gives distances TO source.
std::vector<double> shortest_distances(const DiGraph& g, int source, bool reversed = false);

/// Shortest-path tree edges rooted at root, covering exactly the vertices that
/// reach (In) or are reachable from (Out) the root. Deterministic: ties broken
/// by smallest predecessor vertex id, then smallest edge id.
std::vector<int> arborescence(const DiGraph& g, int root, ArborescenceDirection dir);

/// All simple u->v paths of length <= k*d_G(u,v), in lexicographic order of
/// their vertex sequences. Throws PathOverflow if more than max_paths exist.
std::vector<Path> enumerate_stretch_paths(const DiGraph& g, Demand demand, double k,
                                          std::size_t max_paths);

/// Counts stretch-k paths without materializing them, stopping at cap+1.
std::size_t count_stretch_paths(const DiGraph& g, Demand demand, double k, std::size_t cap);

/// N_{u,v} = { w : d(u,w) + d(w,v) <= k*d(u,v) }, from two shortest-path sweeps.
DemandContext support_set(const DiGraph& g, Demand demand, double k);

}  // namespace spannerlab

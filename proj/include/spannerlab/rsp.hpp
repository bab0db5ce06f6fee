// Copyright (c) spannerlab contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "spannerlab/graph.hpp"

namespace spannerlab {

/// Restricted shortest path: minimize a second edge weighting subject to a
/// length budget under the original edge lengths, optionally avoiding a set
/// of vertices or edges (fault masking).
struct RSPQuery {
    const DiGraph* g = nullptr;
    int source = 0;
    int target = 0;
    double budget = 0.0;                  // length budget T (hop bound in exact-hop mode)
    std::vector<double> weight;           // per-edge minimize weighting, size m
    std::vector<int> forbidden_vertices;  // masked, not copied out of the graph
    std::vector<int> forbidden_edges;
    double epsilon = 0.0;  // FPTAS parameter; 0 selects the exact hop mode
};

struct RSPResult {
    Path path;
    double weight = 0.0;
};

/// Exact DP over (hops, vertex) states for unit-length graphs; the budget is
/// read as an integer hop bound. Ties broken by fewer hops, then smallest
/// predecessor. Returns nullopt when no allowed path meets the bound.
std::optional<RSPResult> rsp_exact_hop(const RSPQuery& q);

/// (1+epsilon) approximation for arbitrary nonnegative lengths: geometric
/// bracketing of the optimal weight, then one scaled DP over
/// (weight grid, vertex). The length budget is never relaxed.
/// Throws NoFeasiblePath if no allowed path meets the budget at all.
RSPResult rsp_fptas(const RSPQuery& q);

/// Exact oracle for arbitrary lengths via Pareto label correction over
/// (length, weight) pairs. Worst-case exponential labels; intended for the
/// moderate instances handled by the feasibility checker and exact solver.
std::optional<RSPResult> rsp_exact_pareto(const RSPQuery& q);

}  // namespace spannerlab

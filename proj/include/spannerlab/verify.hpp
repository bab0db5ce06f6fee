// Copyright (c) spannerlab contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spannerlab/fault.hpp"
#include "spannerlab/graph.hpp"

namespace spannerlab {

struct VerifyReport {
    bool valid = false;
    Demand worst_edge{-1, -1};
    double realized_stretch = 0.0;
    std::optional<std::vector<int>> failing_fault;  // vertex or edge ids
};

/// Checks d_{G'}(u,v) <= k*d_G(u,v) for every edge demand (u,v); checking the
/// edges is sufficient for the full spanner property.
VerifyReport verify_spanner(const DiGraph& g, double k, const std::vector<int>& edge_set);

/// Runs verify_spanner on (G\F, edge_set\F) for every fault set |F| <= fault.r,
/// demands restricted to edges surviving F. Throws FaultBudgetTooLarge when the
/// enumeration would exceed max_fault_sets.
VerifyReport verify_ft(const DiGraph& g, double k, const std::vector<int>& edge_set,
                       FaultModel fault, std::uint64_t max_fault_sets = 2'000'000);

struct BruteForceResult {
    double value = 0.0;  // total cost of the optimum (size under unit costs)
    std::vector<int> witness;
};

/// Exact minimum spanner (or fault-tolerant spanner) by edge-subset
/// enumeration, lexicographically smallest witness among the minimizers.
/// Throws TooLarge beyond max_edges.
BruteForceResult brute_force_opt(const DiGraph& g, double k,
                                 std::optional<FaultModel> fault = std::nullopt,
                                 int max_edges = 14);

struct MinRepInstance;  // defined in instances.hpp

/// Exact Min-Rep optimum by vertex-subset enumeration (|U ∪ V| <= max_vertices).
int brute_force_minrep(const MinRepInstance& mr, int max_vertices = 20);

/// Exact set cover by subset enumeration over <= max_sets sets; elements are
/// 0..num_elements-1 and each set is a bitmask. Throws Infeasible when some
/// element is uncoverable.
int brute_force_setcover(int num_elements, const std::vector<std::uint64_t>& sets,
                         int max_sets = 20);

}  // namespace spannerlab

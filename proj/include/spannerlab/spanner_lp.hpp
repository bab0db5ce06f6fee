// Copyright (c) spannerlab contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spannerlab/fault.hpp"
#include "spannerlab/graph.hpp"

namespace spannerlab {

struct FlowPath {
    std::vector<int> vertices;  // u, ..., v
    double flow = 0.0;
};

/// Flow block for one demand, optionally under a fault set.
struct DemandFlows {
    Demand demand{-1, -1};
    std::optional<std::vector<int>> fault;  // sorted element ids, when FT
    std::vector<FlowPath> paths;

    double total_flow() const {
        double s = 0.0;
        for (const FlowPath& p : paths) s += p.flow;
        return s;
    }
};

enum class SolveMode { Exact, Colgen };

/// Fractional relaxation solution: per-edge capacities plus per-demand flow
/// decompositions over stretch-k paths (per fault set in the FT variant).
struct FractionalSolution {
    std::vector<double> x;  // indexed by edge id
    std::vector<DemandFlows> flows;
    double objective = 0.0;
    SolveMode mode = SolveMode::Exact;
    double epsilon = 0.0;
    double k = 0.0;
};

struct CutCertificate {
    Demand demand{-1, -1};
    std::vector<std::pair<int, double>> y;  // sparse edge -> cut value
    double value = 0.0;
};

struct FeasibilityVerdict {
    bool feasible = false;
    std::optional<CutCertificate> violation;
};

/// Optimal solution of the flow LP with a full flow decomposition. Requires
/// every demand's stretch-k path count to be at most max_paths.
FractionalSolution solve_lp_exact(const DiGraph& g, double k, std::size_t max_paths = 100000);

/// (1+epsilon)-approximate solution by column generation: restricted master
/// seeded with the direct-edge paths, new columns priced per demand through
/// the restricted-shortest-path oracle against the master duals.
FractionalSolution solve_lp_colgen(const DiGraph& g, double k, double epsilon);

/// Min fractional cut per demand (lazy cut generation); feasible iff every
/// demand's cut is >= 1 - 1e-6, otherwise returns the violating demand/cut.
FeasibilityVerdict check_fractional_feasibility(const DiGraph& g, double k,
                                                const std::vector<double>& x);

/// Fault-tolerant LP over enumerated fault sets |F| <= fault.r (unit lengths,
/// r <= r_max), one shared set of capacities, per-(F, demand) flow blocks.
/// epsilon = 0 prices to optimality.
FractionalSolution solve_ft_lp(const DiGraph& g, double k, FaultModel fault, double epsilon,
                               int r_max = 2);

struct InterdictionSolution {
    FaultKind kind = FaultKind::Vertex;
    std::vector<int> faults;        // chosen vertex or edge ids
    std::vector<double> y;          // rounded fractional cut, per edge
    double cut_value = 0.0;         // sum_e x_e * y_e
    int fault_budget_used = 0;
    double lp_value = 0.0;          // relaxation optimum before rounding
};

/// Bicriteria interdiction: solves the relaxation of the interdiction MIP for
/// one demand by lazy stretch-k path rows, then threshold-rounds the fault
/// variables and inflates the cut. Unit lengths only.
InterdictionSolution interdiction_oracle(const DiGraph& g, double k,
                                         const std::vector<double>& x, Demand demand,
                                         FaultModel fault, double epsilon);

/// Stretch-budget hop bound for a surviving demand on a unit-length graph.
int unit_hop_budget(double k);

}  // namespace spannerlab

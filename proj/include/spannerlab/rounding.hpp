// Copyright (c) spannerlab contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spannerlab/fault.hpp"
#include "spannerlab/graph.hpp"
#include "spannerlab/spanner_lp.hpp"

namespace spannerlab {

enum class RoundingMode { GeneralK, ThreeSpanner, TwoSpanner, TwoSpannerBoundedDegree };

struct RoundingConfig {
    double k = 2.0;
    std::uint64_t seed = 0;
    int trials = -1;     // repetitions for the 3-spanner scheme; -1 = formula default
    double C = -1.0;     // rho constant; -1 = mode default (1 for k=3, 6 for k=2)
    double C1 = 1.0;     // FT 3-spanner trial constant
    double C2 = 1.0;     // FT 3-spanner rho constant
    double epsilon = 0.0;
    std::optional<FaultModel> fault;
    RoundingMode mode = RoundingMode::GeneralK;
    std::optional<int> sampling_rounds;  // override for the general-k scheme
};

struct SpannerSolution {
    std::vector<int> edges;               // sorted edge ids
    std::vector<std::string> provenance;  // aligned with edges: which stage added it
    double size = 0.0;
    double cost = 0.0;
    double lp_objective = 0.0;
    std::uint64_t seed = 0;
    std::string algorithm;
    std::map<std::string, double> params;
};

/// Threshold-plus-arborescence rounding for general stretch k.
SpannerSolution round_general_k(const DiGraph& g, const FractionalSolution& frac,
                                const RoundingConfig& cfg);

/// Failure-sampling variant: elements die with probability r/(k+r) before each
/// arborescence round; the threshold and round count balance at t = l.
SpannerSolution round_general_k_ft(const DiGraph& g, const FractionalSolution& frac,
                                   const RoundingConfig& cfg);

/// Two-threshold vertex rounding for unit-length 3-spanner, repeated trials.
SpannerSolution round_3spanner(const DiGraph& g, const FractionalSolution& frac,
                               const RoundingConfig& cfg);

/// Same per-trial rule with fault-tolerant trial/rho parameters.
SpannerSolution round_3spanner_ft(const DiGraph& g, const FractionalSolution& frac,
                                  const RoundingConfig& cfg);

/// Single-threshold rounding for 2-spanner (works with edge costs); the
/// bounded-degree mode uses rho = C log(max degree).
SpannerSolution round_2spanner(const DiGraph& g, const FractionalSolution& frac,
                               const RoundingConfig& cfg);

/// 2-spanner rounding with rho inflated by the fault budget r.
SpannerSolution round_2spanner_ft(const DiGraph& g, const FractionalSolution& frac,
                                  const RoundingConfig& cfg);

// Per-edge inclusion rules, exposed for rule-level tests.
bool three_spanner_e1_rule(double tu, double tu2, double tv, double tv2, double rho_x);
bool three_spanner_e2_rule(double tu, double tu2, double tv, double tv2, double rho_x);
bool two_spanner_rule(double tu, double tv, double rho_x);

/// threshold t (== the round count at the balance point) for the FT general-k
/// scheme; throws ParameterOverflow when (k+r)^(k+r) leaves double range.
double ft_general_threshold(int n, double k, int r);

}  // namespace spannerlab

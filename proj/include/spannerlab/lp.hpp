// Copyright (c) spannerlab contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

namespace spannerlab {

enum class Sense { LE, GE, EQ };

struct LPRow {
    std::vector<int> idx;
    std::vector<double> val;
    Sense sense = Sense::GE;
    double rhs = 0.0;
};

/// Minimization LP over variables with bounds (default [0, inf)).
class LinearProgram {
  public:
    explicit LinearProgram(int num_vars);

    int num_vars() const { return num_vars_; }
    int num_rows() const { return static_cast<int>(rows_.size()); }

    void set_objective(int var, double coeff);
    void set_bounds(int var, double lo, double hi);
    int add_row(std::vector<int> idx, std::vector<double> val, Sense sense, double rhs);

    const std::vector<double>& objective() const { return obj_; }
    const std::vector<LPRow>& rows() const { return rows_; }
    const std::vector<double>& lower_bounds() const { return lo_; }
    const std::vector<double>& upper_bounds() const { return hi_; }

    void validate() const;  // throws std::invalid_argument on malformed input

  private:
    int num_vars_;
    std::vector<double> obj_;
    std::vector<LPRow> rows_;
    std::vector<double> lo_, hi_;
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPSolution {
    LPStatus status = LPStatus::Infeasible;
    std::vector<double> x;
    std::vector<double> dual;  // one per row; >=0 for GE, <=0 for LE, free for EQ
    double objective = 0.0;
    double dual_objective = 0.0;
    double feasibility_residual = 0.0;
    double complementary_slackness_residual = 0.0;
    long iterations = 0;
};

inline constexpr double kLpFeasTol = 1e-9;
inline constexpr double kLpDualityTol = 1e-6;  // relative

/// Two-phase primal simplex on a dense tableau. Dantzig pricing with a Bland
/// fallback after a degenerate-pivot streak. Deterministic given its input.
/// Throws NumericalFailure if the retry budget is exhausted.
LPSolution solve_lp(const LinearProgram& lp);

}  // namespace spannerlab

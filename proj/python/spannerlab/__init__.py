# Copyright (c) spannerlab contributors.
# SPDX-License-Identifier: Apache-2.0
"""Flow-LP relaxations, randomized rounding and verification for directed k-spanners."""

from spannerlab._core import (  # noqa: F401
    CertificateInfeasibleError,
    DiGraph,
    FaultBudgetError,
    FractionalSolution,
    GapInstance,
    InfeasibleError,
    NoFeasiblePathError,
    PathOverflowError,
    SpannerSolution,
    TooLargeError,
    VerifyReport,
    brute_force_opt,
    brute_force_setcover,
    build_minrep_gap_instance,
    build_setcover_gap_instance,
    check_fractional_feasibility,
    format_graph,
    gen_random_digraph,
    gen_synthetic_minrep,
    interdiction_oracle,
    parse_graph,
    round_spanner,
    rsp,
    solve_ft_lp,
    solve_lp_colgen,
    solve_lp_exact,
    verify_ft,
    verify_spanner,
)

__version__ = "0.1.0"

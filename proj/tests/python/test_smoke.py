# Copyright (c) spannerlab contributors.
# SPDX-License-Identifier: Apache-2.0
"""Smoke tests for the python bindings: one pass over every exposed operation."""

import math
import os
import subprocess

import pytest

import spannerlab as sl


def triangle():
    return sl.DiGraph(3, [(0, 1), (1, 2), (0, 2)])


def test_graph_basics():
    g = triangle()
    assert g.n == 3 and g.m == 3
    assert g.unit_length
    assert g.edge_between(0, 1) == 0
    assert g.edge_between(1, 0) is None
    text = sl.format_graph(g)
    assert sl.parse_graph(text).m == 3


def test_exact_lp_and_rounding():
    g = triangle()
    frac = sl.solve_lp_exact(g, 2.0)
    assert frac.mode == "exact"
    assert math.isclose(frac.objective, 2.0, abs_tol=1e-9)
    feasible, violation = sl.check_fractional_feasibility(g, 2.0, frac.x)
    assert feasible and violation is None

    sol = sl.round_spanner(g, frac, mode="2spanner", k=2.0, seed=1)
    rep = sl.verify_spanner(g, 2.0, sol.edges)
    assert rep.valid
    assert rep.stretch <= 2.0 + 1e-9

    opt, witness = sl.brute_force_opt(g, 2.0)
    assert opt == 2.0 and witness == [0, 1]


def test_colgen_tracks_exact():
    g = sl.gen_random_digraph(10, 0.3, seed=5)
    exact = sl.solve_lp_exact(g, 3.0)
    cg = sl.solve_lp_colgen(g, 3.0, 0.01)
    assert cg.mode == "colgen"
    assert cg.objective <= 1.01 * exact.objective + 1e-9


def test_ft_pipeline():
    g = sl.DiGraph(4, [(0, 1), (1, 3), (0, 2), (2, 3), (0, 3)])
    frac = sl.solve_ft_lp(g, 2.0, "vertex", 1)
    assert math.isclose(frac.objective, 4.0, abs_tol=1e-6)
    sol = sl.round_spanner(g, frac, mode="2spanner", k=2.0, seed=3, fault=("vertex", 1))
    rep = sl.verify_ft(g, 2.0, sol.edges, "vertex", 1)
    assert rep.valid


def test_rsp_modes():
    g = sl.DiGraph(5, [(0, 1), (1, 4), (0, 2), (2, 3), (3, 4)])
    weights = [2.0, 3.0, 0.0, 0.0, 1.0]
    path, w = sl.rsp(g, 0, 4, 2, weights)
    assert w == 5.0 and path == [0, 1, 4]
    path, w = sl.rsp(g, 0, 4, 3, weights)
    assert w == 1.0 and path == [0, 2, 3, 4]
    assert sl.rsp(g, 0, 4, 1, weights) is None
    path, w = sl.rsp(g, 0, 4, 3, weights, epsilon=0.1)
    assert w <= 1.1 + 1e-9


def test_gap_instances():
    gap = sl.build_setcover_gap_instance(3)
    assert gap.params["n"] == 79.0
    assert math.isclose(gap.cost_bound, 248.0)
    assert math.isclose(gap.certificate.objective, 184.0)
    cert = gap.certificate_dict()
    assert cert["mode"] == "exact"
    sets = [int(s) for s in cert["meta"]["setcover"]["sets"]]
    assert sl.brute_force_setcover(7, sets) == 3

    small = sl.build_minrep_gap_instance(r=4, q=4, k=5, seed=2)
    assert small.params["n"] == 2 * small.params["n_minrep"]
    ok, _ = sl.check_fractional_feasibility(small.graph, 5.0, small.certificate.x)
    assert ok


def test_interdiction():
    g = sl.DiGraph(4, [(0, 1), (1, 3), (0, 2), (2, 3)])
    out = sl.interdiction_oracle(g, 2.0, [1.0] * 4, (0, 3), "vertex", 1, epsilon=1.0)
    assert out["budget_used"] <= 4
    assert out["cut_value"] <= 2.0 * out["lp_value"] + 1e-9


def test_errors_are_typed():
    g = triangle()
    with pytest.raises(sl.PathOverflowError):
        sl.solve_lp_exact(g, 2.0, max_paths=1)
    with pytest.raises(sl.FaultBudgetError):
        sl.solve_ft_lp(g, 2.0, "vertex", 3)


def test_cli_binary_if_available():
    cli = os.environ.get("SPANNERLAB_CLI")
    if not cli or not os.path.exists(cli):
        pytest.skip("CLI binary not exported")
    out = subprocess.run([cli, "--show-config"], capture_output=True, text=True, check=True)
    assert "SPANNERLAB_" in out.stdout

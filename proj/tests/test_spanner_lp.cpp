// Copyright (c) spannerlab contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "spannerlab/errors.hpp"
#include "spannerlab/instances.hpp"
#include "spannerlab/lp.hpp"
#include "spannerlab/spanner_lp.hpp"
#include "spannerlab/verify.hpp"

using namespace spannerlab;

namespace {

DiGraph triangle() { return DiGraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

// max-min capacity over a demand's stretch paths (bottleneck oracle)
double bottleneck(const DiGraph& g, Demand d, double k, const std::vector<double>& x) {
    auto paths = enumerate_stretch_paths(g, d, k, 200000);
    double best = 0.0;
    for (const Path& p : paths) {
        double mn = kInf;
        for (int e : p.edge_ids) mn = std::min(mn, x[static_cast<std::size_t>(e)]);
        best = std::max(best, mn);
    }
    return best;
}

// all simple paths between an arbitrary vertex pair within a hop bound
void pair_paths_rec(const DiGraph& g, int cur, int target, int hops_left,
                    std::vector<int>& edges, std::vector<char>& used,
                    std::vector<std::vector<int>>& out) {
    if (cur == target && !edges.empty()) {
        out.push_back(edges);
        return;
    }
    if (hops_left == 0) return;
    for (int eid : g.out_edges(cur)) {
        const Edge& e = g.edge(eid);
        if (used[static_cast<std::size_t>(e.dst)]) continue;
        used[static_cast<std::size_t>(e.dst)] = 1;
        edges.push_back(eid);
        pair_paths_rec(g, e.dst, target, hops_left - 1, edges, used, out);
        edges.pop_back();
        used[static_cast<std::size_t>(e.dst)] = 0;
    }
}

std::vector<std::vector<int>> pair_paths(const DiGraph& g, Demand d, int hop_budget) {
    std::vector<std::vector<int>> out;
    std::vector<int> edges;
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
    used[static_cast<std::size_t>(d.first)] = 1;
    pair_paths_rec(g, d.first, d.second, hop_budget, edges, used, out);
    return out;
}

void check_solution_invariants(const DiGraph& g, double k, const FractionalSolution& frac) {
    REQUIRE(frac.x.size() == static_cast<std::size_t>(g.edge_count()));
    for (double v : frac.x) CHECK(v >= -1e-12);
    // per demand: one unit of flow, per-demand capacities, stretch respected
    for (const DemandFlows& df : frac.flows) {
        CHECK(df.total_flow() >= 1.0 - 1e-9);
        std::map<int, double> on_edge;
        for (const FlowPath& p : df.paths) {
            REQUIRE(p.vertices.size() >= 2);
            CHECK(p.vertices.front() == df.demand.first);
            CHECK(p.vertices.back() == df.demand.second);
            double len = 0.0;
            std::set<int> distinct(p.vertices.begin(), p.vertices.end());
            CHECK(distinct.size() == p.vertices.size());  // simple
            for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
                auto eid = g.edge_between(p.vertices[i], p.vertices[i + 1]);
                REQUIRE(eid.has_value());
                len += g.edge(*eid).length;
                on_edge[*eid] += p.flow;
            }
            // stretch budget vs k*d_G
            auto dist = shortest_distances(g, df.demand.first);
            CHECK(len <= k * dist[static_cast<std::size_t>(df.demand.second)] + 1e-9);
        }
        for (auto [e, f] : on_edge) CHECK(f <= frac.x[static_cast<std::size_t>(e)] + 1e-9);
    }
}

}  // namespace

TEST_CASE("exact solve: triangle k=2") {
    DiGraph g = triangle();
    auto frac = solve_lp_exact(g, 2.0);
    CHECK(frac.objective == doctest::Approx(2.0));
    CHECK(frac.x[0] == doctest::Approx(1.0));
    CHECK(frac.x[1] == doctest::Approx(1.0));
    CHECK(frac.x[2] == doctest::Approx(0.0).epsilon(1e-6));
    check_solution_invariants(g, 2.0, frac);
}

TEST_CASE("exact solve: directed cycle k=1 takes every edge") {
    const int n = 6;
    std::vector<EdgeSpec> es;
    for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
    DiGraph g(n, es);
    auto frac = solve_lp_exact(g, 1.0);
    CHECK(frac.objective == doctest::Approx(n));
    for (double v : frac.x) CHECK(v == doctest::Approx(1.0));
}

TEST_CASE("exact solve: single edge") {
    DiGraph g(2, {{0, 1}});
    auto frac = solve_lp_exact(g, 3.0);
    CHECK(frac.objective == doctest::Approx(1.0));
}

TEST_CASE("exact solve respects max_paths") {
    DiGraph g = triangle();
    CHECK_THROWS_AS(solve_lp_exact(g, 2.0, 1), PathOverflow);
}

TEST_CASE("relaxation soundness and the spanner-path lemma on tiny graphs") {
    int tested = 0;
    for (std::uint64_t seed = 1; seed <= 60 && tested < 25; ++seed) {
        DiGraph g = gen_random_digraph(6, 0.3, LengthModel::unit(), seed);
        if (g.edge_count() == 0 || g.edge_count() > 12) continue;
        ++tested;
        for (double k : {2.0, 3.0}) {
            auto frac = solve_lp_exact(g, k);
            auto brute = brute_force_opt(g, k);
            CHECK(frac.objective <= brute.value + 1e-6);
            check_solution_invariants(g, k, frac);
            // Lemma: some stretch-k path has every edge above 1/|N|^2.
            for (const Edge& e : g.edges()) {
                auto ctx = support_set(g, {e.src, e.dst}, k);
                double bound = 1.0 / std::pow(static_cast<double>(ctx.support_vertices.size()), 2);
                CHECK(bottleneck(g, {e.src, e.dst}, k, frac.x) >= bound - 1e-9);
            }
        }
    }
    CHECK(tested >= 10);
}

TEST_CASE("weighted graphs: exact solve agrees with brute force") {
    int tested = 0;
    for (std::uint64_t seed = 100; seed <= 160 && tested < 10; ++seed) {
        DiGraph g = gen_random_digraph(5, 0.35, LengthModel::uniform(1.0, 3.0), seed);
        if (g.edge_count() == 0 || g.edge_count() > 12) continue;
        ++tested;
        auto frac = solve_lp_exact(g, 2.0);
        auto brute = brute_force_opt(g, 2.0);
        CHECK(frac.objective <= brute.value + 1e-6);
        check_solution_invariants(g, 2.0, frac);
    }
    CHECK(tested >= 5);
}

TEST_CASE("feasibility checker verdicts") {
    DiGraph g = triangle();
    auto frac = solve_lp_exact(g, 2.0);
    CHECK(check_fractional_feasibility(g, 2.0, frac.x).feasible);

    std::vector<double> ones(3, 1.0);
    CHECK(check_fractional_feasibility(g, 2.0, ones).feasible);

    std::vector<double> bad{1.0, 0.0, 1.0};  // kill x_{vw}
    auto verdict = check_fractional_feasibility(g, 2.0, bad);
    CHECK_FALSE(verdict.feasible);
    REQUIRE(verdict.violation.has_value());
    CHECK(verdict.violation->demand == Demand{1, 2});
    REQUIRE(verdict.violation->y.size() == 1);
    CHECK(verdict.violation->y[0].first == 1);
    CHECK(verdict.violation->y[0].second == doctest::Approx(1.0));
    CHECK(verdict.violation->value == doctest::Approx(0.0));
}

TEST_CASE("feasibility holds for solver outputs on random instances") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        DiGraph g = gen_random_digraph(8, 0.25, LengthModel::unit(), seed);
        if (g.edge_count() == 0) continue;
        auto frac = solve_lp_exact(g, 3.0);
        CHECK(check_fractional_feasibility(g, 3.0, frac.x).feasible);
    }
}

TEST_CASE("column generation: triangle within 1+eps") {
    DiGraph g = triangle();
    auto frac = solve_lp_colgen(g, 2.0, 0.01);
    CHECK(frac.objective <= 2.02);
    CHECK(frac.objective >= 2.0 - 1e-9);
    check_solution_invariants(g, 2.0, frac);
}

TEST_CASE("column generation: chain needs one pricing round") {
    DiGraph g(4, {{0, 1}, {1, 2}, {2, 3}});
    auto frac = solve_lp_colgen(g, 1.0, 0.01);
    CHECK(frac.objective == doctest::Approx(3.0));
}

TEST_CASE("column generation tracks the exact optimum") {
    int tested = 0;
    for (std::uint64_t seed = 1; seed <= 40 && tested < 12; ++seed) {
        DiGraph g = gen_random_digraph(9, 0.25, LengthModel::unit(), seed);
        if (g.edge_count() == 0) continue;
        ++tested;
        for (double k : {2.0, 3.0}) {
            auto exact = solve_lp_exact(g, k);
            auto cg = solve_lp_colgen(g, k, 0.01);
            CHECK(cg.objective <= 1.01 * exact.objective + 1e-9);
            CHECK(cg.objective >= exact.objective - 1e-7);
            check_solution_invariants(g, k, cg);
        }
    }
    CHECK(tested >= 8);
}

TEST_CASE("column generation on weighted lengths") {
    for (std::uint64_t seed = 200; seed <= 210; ++seed) {
        DiGraph g = gen_random_digraph(7, 0.3, LengthModel::uniform(1.0, 2.0), seed);
        if (g.edge_count() == 0 || g.edge_count() > 14) continue;
        auto exact = solve_lp_exact(g, 2.0);
        auto cg = solve_lp_colgen(g, 2.0, 0.05);
        CHECK(cg.objective <= 1.05 * exact.objective + 1e-9);
        CHECK(cg.objective >= exact.objective - 1e-7);
    }
}

TEST_CASE("determinism of the solvers") {
    DiGraph g = gen_random_digraph(8, 0.3, LengthModel::unit(), 99);
    auto a = solve_lp_exact(g, 3.0);
    auto b = solve_lp_exact(g, 3.0);
    CHECK(a.objective == b.objective);
    CHECK(a.x == b.x);
    auto c = solve_lp_colgen(g, 3.0, 0.01);
    auto d = solve_lp_colgen(g, 3.0, 0.01);
    CHECK(c.objective == d.objective);
    CHECK(c.x == d.x);
}

TEST_CASE("fault-tolerant LP: diamond forces the side edges") {
    DiGraph g(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}, {0, 3}});
    auto frac = solve_ft_lp(g, 2.0, FaultModel{FaultKind::Vertex, 1}, 0.0);
    CHECK(frac.objective == doctest::Approx(4.0));
    CHECK(frac.x[0] == doctest::Approx(1.0));
    CHECK(frac.x[1] == doctest::Approx(1.0));
    CHECK(frac.x[2] == doctest::Approx(1.0));
    CHECK(frac.x[3] == doctest::Approx(1.0));
    CHECK(frac.x[4] == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("fault-tolerant LP with r=0 matches the exact solver") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        DiGraph g = gen_random_digraph(7, 0.3, LengthModel::unit(), seed);
        if (g.edge_count() == 0) continue;
        auto exact = solve_lp_exact(g, 2.0);
        auto ft = solve_ft_lp(g, 2.0, FaultModel{FaultKind::Vertex, 0}, 0.0);
        CHECK(std::abs(ft.objective - exact.objective) <= 1e-6 * (1.0 + exact.objective));
    }
}

TEST_CASE("fault-tolerant LP: single edge under edge faults") {
    DiGraph g(2, {{0, 1}});
    auto frac = solve_ft_lp(g, 2.0, FaultModel{FaultKind::Edge, 1}, 0.0);
    CHECK(frac.objective == doctest::Approx(1.0));
}

TEST_CASE("fault-tolerant LP guards") {
    DiGraph g = triangle();
    CHECK_THROWS_AS(solve_ft_lp(g, 2.0, FaultModel{FaultKind::Vertex, 3}, 0.0),
                    FaultBudgetTooLarge);
    DiGraph w(3, {{0, 1, 2.0}, {1, 2, 1.0}, {0, 2, 1.0}});
    CHECK_THROWS_AS(solve_ft_lp(w, 2.0, FaultModel{FaultKind::Vertex, 1}, 0.0),
                    std::invalid_argument);
}

TEST_CASE("fault-tolerant flows avoid their fault sets") {
    DiGraph g(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}, {0, 3}});
    auto frac = solve_ft_lp(g, 2.0, FaultModel{FaultKind::Vertex, 1}, 0.0);
    for (const DemandFlows& df : frac.flows) {
        REQUIRE(df.fault.has_value());
        CHECK(df.total_flow() >= 1.0 - 1e-9);
        for (const FlowPath& p : df.paths)
            for (int v : p.vertices)
                CHECK(std::find(df.fault->begin(), df.fault->end(), v) == df.fault->end());
    }
}

TEST_CASE("interdiction oracle: diamond without the direct edge") {
    // u=0, a=1, b=2, v=3; two disjoint 2-paths; x = 1 everywhere
    DiGraph g(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}});
    std::vector<double> x(4, 1.0);
    const double eps = 1.0;
    auto sol = interdiction_oracle(g, 2.0, x, {0, 3}, FaultModel{FaultKind::Vertex, 1}, eps);

    CHECK(sol.fault_budget_used <= static_cast<int>((1.0 + eps) * 2.0 * 1.0));
    // Brute force: best single vertex fault plus min cut of the survivors.
    // Faulting a (or b) leaves one 2-path, whose min cut under x=1 costs 1.
    CHECK(sol.lp_value <= 1.0 + 1e-9);
    CHECK(sol.cut_value <= (1.0 + eps) / eps * 1.0 + 1e-9);

    // surviving stretch paths are covered by y'
    std::vector<char> dead(4, 0);
    for (int f : sol.faults) dead[static_cast<std::size_t>(f)] = 1;
    for (const auto& path : pair_paths(g, {0, 3}, 4)) {  // budget k*d = 4 hops
        bool survives = true;
        for (int e : path) {
            if (dead[static_cast<std::size_t>(g.edge(e).src)] ||
                dead[static_cast<std::size_t>(g.edge(e).dst)])
                survives = false;
        }
        if (!survives) continue;
        double cover = 0.0;
        for (int e : path) cover += sol.y[static_cast<std::size_t>(e)];
        CHECK(cover >= 1.0 - 1e-9);
    }
}

TEST_CASE("interdiction threshold rounding rules") {
    // epsilon=1, k=3 -> threshold 1/6; a fractional z below it never rounds up,
    // and y is inflated by exactly (1+eps)/eps = 2.
    DiGraph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    std::vector<double> x(5, 1.0);
    auto sol = interdiction_oracle(g, 3.0, x, {0, 4}, FaultModel{FaultKind::Vertex, 1}, 1.0);
    for (int f : sol.faults) {
        CHECK(f != 0);
        CHECK(f != 4);
    }
    CHECK(sol.cut_value == doctest::Approx(2.0 * sol.lp_value).epsilon(1e-6));
}

TEST_CASE("interdiction oracle under edge faults") {
    DiGraph g(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}});
    std::vector<double> x{1.0, 1.0, 0.5, 0.5};
    auto sol = interdiction_oracle(g, 2.0, x, {0, 3}, FaultModel{FaultKind::Edge, 1}, 1.0);
    CHECK(sol.fault_budget_used <= 4);
    std::vector<char> dead(4, 0);
    for (int f : sol.faults) dead[static_cast<std::size_t>(f)] = 1;
    for (const auto& path : pair_paths(g, {0, 3}, 4)) {
        bool survives = true;
        for (int e : path)
            if (dead[static_cast<std::size_t>(e)]) survives = false;
        if (!survives) continue;
        double cover = 0.0;
        for (int e : path) cover += sol.y[static_cast<std::size_t>(e)];
        CHECK(cover >= 1.0 - 1e-9);
    }
}

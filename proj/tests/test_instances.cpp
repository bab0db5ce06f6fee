// Copyright (c) spannerlab contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "spannerlab/errors.hpp"
#include "spannerlab/instances.hpp"
#include "spannerlab/spanner_lp.hpp"
#include "spannerlab/verify.hpp"

using namespace spannerlab;

namespace {

// Direct validation of a certificate without the LP machinery: every demand
// carries one unit on stretch-feasible paths within the stated capacities.
void check_certificate_directly(const DiGraph& g, double k, const FractionalSolution& cert) {
    std::set<Demand> covered;
    for (const DemandFlows& df : cert.flows) {
        covered.insert(df.demand);
        CHECK(df.total_flow() >= 1.0 - 1e-9);
        std::map<int, double> on_edge;
        for (const FlowPath& p : df.paths) {
            REQUIRE(p.vertices.size() >= 2);
            CHECK(p.vertices.front() == df.demand.first);
            CHECK(p.vertices.back() == df.demand.second);
            double len = 0.0;
            for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
                auto eid = g.edge_between(p.vertices[i], p.vertices[i + 1]);
                REQUIRE(eid.has_value());
                len += g.edge(*eid).length;
                on_edge[*eid] += p.flow;
            }
            auto dist = shortest_distances(g, df.demand.first);
            CHECK(len <= k * dist[static_cast<std::size_t>(df.demand.second)] + 1e-9);
        }
        for (auto [e, f] : on_edge) CHECK(f <= cert.x[static_cast<std::size_t>(e)] + 1e-9);
    }
    for (const Edge& e : g.edges()) CHECK(covered.count({e.src, e.dst}) == 1);
}

}  // namespace

TEST_CASE("random digraph generator") {
    auto g = gen_random_digraph(5, 1.0, LengthModel::unit(), 1);
    CHECK(g.edge_count() == 20);
    CHECK(g.unit_length());

    auto a = gen_random_digraph(12, 0.3, LengthModel::unit(), 7);
    auto b = gen_random_digraph(12, 0.3, LengthModel::unit(), 7);
    REQUIRE(a.edge_count() == b.edge_count());
    for (int e = 0; e < a.edge_count(); ++e) {
        CHECK(a.edge(e).src == b.edge(e).src);
        CHECK(a.edge(e).dst == b.edge(e).dst);
    }

    // binomial sanity: mean edge count over seeds within 3 sigma
    const int n = 40;
    const double p = 0.15;
    double total = 0.0;
    const int runs = 100;
    for (std::uint64_t seed = 0; seed < runs; ++seed)
        total += gen_random_digraph(n, p, LengthModel::unit(), seed).edge_count();
    double mean = total / runs;
    double expect = p * n * (n - 1);
    double sigma = std::sqrt(n * (n - 1) * p * (1 - p) / runs);
    CHECK(std::abs(mean - expect) <= 3.0 * sigma);

    auto w = gen_random_digraph(8, 0.4, LengthModel::uniform(1.0, 3.0), 3);
    for (const Edge& e : w.edges()) {
        CHECK(e.length >= 1.0);
        CHECK(e.length <= 3.0);
    }
}

TEST_CASE("synthetic min-rep shapes") {
    auto tiny = gen_synthetic_minrep(2, 1, 1);
    CHECK(tiny.num_vertices() == 2);
    CHECK(tiny.matchings.size() == 1);
    CHECK(tiny.matchings[0][0] == std::vector<int>{0});

    auto mr = gen_synthetic_minrep(4, 3, 5);
    CHECK(mr.side_groups() == 2);
    int matching_edges = 0;
    for (const auto& row : mr.matchings)
        for (const auto& perm : row) {
            matching_edges += static_cast<int>(perm.size());
            std::set<int> uniq(perm.begin(), perm.end());
            CHECK(uniq.size() == perm.size());  // a permutation
        }
    CHECK(matching_edges == 12);  // 4 group pairs x q=3

    auto mr2 = gen_synthetic_minrep(4, 3, 5);
    CHECK(mr.matchings == mr2.matchings);
}

TEST_CASE("min-rep gap instance: structure for (r=4, q=4, k=5)") {
    auto mr = gen_synthetic_minrep(4, 4, 11);
    auto gap = build_minrep_gap_instance(mr, 5);
    CHECK(gap.params.at("x") == 2.0);       // ceil(q / ((k-1)/2)) = 2 tails
    CHECK(gap.params.at("n_minrep") == 16.0);
    CHECK(gap.params.at("n") == 32.0);      // exactly doubled here
    CHECK(gap.graph.unit_length());

    // |E_M| = x*r*(k-3)/2 at capacity one; family counts drive the bound.
    double em = 2.0 * 4 * 1;  // 8
    double edd = 4.0 * 4;     // (r/2)^2 * q
    double ec = 4.0 * 4 * 3;  // r groups, q(q-1) ordered pairs
    double eu = 2.0 * 2 * 2 * 4;
    double ei = 2.0 * 2 * 2;
    CHECK(gap.graph.edge_count() == static_cast<int>(em + edd + ec + eu + ei));
    CHECK(gap.certificate.objective ==
          doctest::Approx(em + (2.0 / 4) * (edd + ec + eu)));
    CHECK(gap.certificate.objective <= gap.predicted_fractional_cost_bound + 1e-9);

    check_certificate_directly(gap.graph, 5.0, gap.certificate);
}

TEST_CASE("min-rep gap certificate passes the feasibility checker") {
    auto mr = gen_synthetic_minrep(2, 2, 3);
    auto gap = build_minrep_gap_instance(mr, 3);
    check_certificate_directly(gap.graph, 3.0, gap.certificate);
    CHECK(check_fractional_feasibility(gap.graph, 3.0, gap.certificate.x).feasible);

    auto mr2 = gen_synthetic_minrep(4, 2, 3);
    auto gap2 = build_minrep_gap_instance(mr2, 5);
    check_certificate_directly(gap2.graph, 5.0, gap2.certificate);
    CHECK(check_fractional_feasibility(gap2.graph, 5.0, gap2.certificate.x).feasible);
}

TEST_CASE("min-rep gap rejects unsupported parameters") {
    auto mr = gen_synthetic_minrep(4, 4, 1);
    CHECK_THROWS_AS(build_minrep_gap_instance(mr, 4), InvalidK);
    CHECK_THROWS_AS(build_minrep_gap_instance(mr, 1), InvalidK);
    auto q1 = gen_synthetic_minrep(2, 1, 1);
    CHECK_THROWS_AS(build_minrep_gap_instance(q1, 3), std::invalid_argument);
}

TEST_CASE("min-rep gap: E_I demand paths have length exactly k") {
    auto mr = gen_synthetic_minrep(4, 4, 2);
    auto gap = build_minrep_gap_instance(mr, 5);
    int checked = 0;
    for (const DemandFlows& df : gap.certificate.flows) {
        auto eid = gap.graph.edge_between(df.demand.first, df.demand.second);
        REQUIRE(eid.has_value());
        if (gap.certificate.x[static_cast<std::size_t>(*eid)] != 0.0) continue;  // not E_I
        for (const FlowPath& p : df.paths) {
            CHECK(p.vertices.size() == 6);  // length exactly k = 5
            ++checked;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("set-cover gap instance: q=3 arithmetic") {
    auto gap = build_setcover_gap_instance(3);
    CHECK(gap.params.at("N") == 7.0);
    CHECK(gap.params.at("M") == 8.0);
    CHECK(gap.params.at("aux") == 64.0);
    CHECK(gap.params.at("n") == 79.0);
    CHECK(gap.predicted_fractional_cost_bound == doctest::Approx(248.0));
    // shared-capacity accounting: 2A + C(M,2) + N*M/2
    CHECK(gap.certificate.objective == doctest::Approx(128.0 + 28.0 + 28.0));
    CHECK(gap.certificate.objective <= gap.predicted_fractional_cost_bound);

    // every element is in exactly half of the sets
    REQUIRE(gap.setcover_witness.has_value());
    for (int e = 0; e < gap.setcover_witness->num_elements; ++e) {
        int cnt = 0;
        for (auto s : gap.setcover_witness->sets)
            if (s >> e & 1ULL) ++cnt;
        CHECK(cnt == 4);
    }
}

TEST_CASE("set-cover gap certificate is feasible (small aux)") {
    auto gap = build_setcover_gap_instance(2, 2);
    check_certificate_directly(gap.graph, 2.0, gap.certificate);
    CHECK(check_fractional_feasibility(gap.graph, 2.0, gap.certificate.x).feasible);
}

TEST_CASE("set-cover gap certificate direct check at q=3") {
    auto gap = build_setcover_gap_instance(3, 4);
    check_certificate_directly(gap.graph, 2.0, gap.certificate);
}

TEST_CASE("generators are pure functions of their arguments") {
    auto a = build_setcover_gap_instance(2, 3);
    auto b = build_setcover_gap_instance(2, 3);
    CHECK(a.certificate.x == b.certificate.x);
    CHECK(a.graph.edge_count() == b.graph.edge_count());
    auto mra = gen_synthetic_minrep(4, 3, 9);
    auto ga = build_minrep_gap_instance(mra, 3);
    auto gb = build_minrep_gap_instance(gen_synthetic_minrep(4, 3, 9), 3);
    CHECK(ga.certificate.x == gb.certificate.x);
}

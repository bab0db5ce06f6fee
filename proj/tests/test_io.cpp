// Copyright (c) spannerlab contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spannerlab/errors.hpp"
#include "spannerlab/io.hpp"

using namespace spannerlab;

TEST_CASE("graph text format round trip") {
    DiGraph g(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}, {0, 3}});
    std::string text = format_graph(g);
    DiGraph h = parse_graph_string(text);
    REQUIRE(h.vertex_count() == 4);
    REQUIRE(h.edge_count() == 5);
    CHECK(h.unit_length());
    for (int e = 0; e < 5; ++e) {
        CHECK(h.edge(e).src == g.edge(e).src);
        CHECK(h.edge(e).dst == g.edge(e).dst);
    }
    CHECK(format_graph(h) == text);
}

TEST_CASE("weighted graphs carry lengths and costs") {
    DiGraph g(3, {{0, 1, 2.5, 1.0}, {1, 2, 1.25, 3.0}});
    DiGraph h = parse_graph_string(format_graph(g));
    CHECK_FALSE(h.unit_length());
    CHECK(h.edge(0).length == 2.5);
    CHECK(h.edge(1).cost == 3.0);
}

TEST_CASE("parser accepts comments and validates structure") {
    const char* ok = "# a comment\np spanner 2 1 unit\n# another\na 0 1 1\n";
    DiGraph g = parse_graph_string(ok);
    CHECK(g.edge_count() == 1);

    CHECK_THROWS_AS(parse_graph_string("a 0 1 1\n"), ParseError);          // arc before header
    CHECK_THROWS_AS(parse_graph_string("p spanner 2 2 unit\na 0 1 1\n"), ParseError);  // count
    CHECK_THROWS_AS(parse_graph_string("p spanner 2 1 unit\na 0 1 2\n"), ParseError);  // unit
    CHECK_THROWS_AS(parse_graph_string("p spanner 2 1 metric\na 0 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph_string("q spanner 2 0 unit\n"), ParseError);
}

TEST_CASE("fractional solution JSON schema round trip") {
    DiGraph g(3, {{0, 1}, {1, 2}, {0, 2}});
    FractionalSolution frac;
    frac.x = {1.0, 1.0, 0.0};
    frac.objective = 2.0;
    frac.mode = SolveMode::Colgen;
    frac.epsilon = 0.01;
    DemandFlows df;
    df.demand = {0, 2};
    df.fault = std::vector<int>{1};
    df.paths.push_back(FlowPath{{0, 2}, 1.0});
    frac.flows.push_back(df);

    json j = to_json(frac);
    CHECK(j.at("mode") == "colgen");
    CHECK(j.at("x").size() == 3);
    CHECK(j.at("flows")[0].at("u") == 0);
    CHECK(j.at("flows")[0].at("fault") == json::array({1}));

    FractionalSolution back = fractional_from_json(j, g);
    CHECK(back.x == frac.x);
    CHECK(back.objective == frac.objective);
    CHECK(back.mode == frac.mode);
    REQUIRE(back.flows.size() == 1);
    CHECK(back.flows[0].paths[0].vertices == std::vector<int>{0, 2});
}

TEST_CASE("verify report JSON") {
    VerifyReport rep;
    rep.valid = false;
    rep.worst_edge = {0, 2};
    rep.realized_stretch = kInf;
    rep.failing_fault = std::vector<int>{3};
    json j = to_json(rep);
    CHECK(j.at("valid") == false);
    CHECK(j.at("stretch") == "inf");
    CHECK(j.at("failing_fault") == json::array({3}));
}

TEST_CASE("gap certificate sidecar round trip") {
    auto gap = build_setcover_gap_instance(2, 2);
    json sidecar = gap_certificate_json(gap);
    CHECK(sidecar.contains("objective"));  // FractionalSolution schema kept
    CHECK(sidecar.contains("x"));
    CHECK(sidecar.contains("flows"));
    GapInstance back = gap_from_files(gap.graph, sidecar);
    CHECK(back.kind == GapKind::SetCover2Spanner);
    CHECK(back.certificate.x == gap.certificate.x);
    CHECK(back.predicted_fractional_cost_bound ==
          doctest::Approx(gap.predicted_fractional_cost_bound));
    REQUIRE(back.setcover_witness.has_value());
    CHECK(back.setcover_witness->sets == gap.setcover_witness->sets);
}

TEST_CASE("json serialization is deterministic") {
    auto gap = build_setcover_gap_instance(2, 3);
    CHECK(gap_certificate_json(gap).dump() == gap_certificate_json(gap).dump());
}

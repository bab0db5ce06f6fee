// Copyright (c) spannerlab contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "spannerlab/errors.hpp"
#include "spannerlab/graph.hpp"
#include "spannerlab/rng.hpp"

using namespace spannerlab;

namespace {

DiGraph triangle() {
    // u=0, v=1, w=2: u->v, v->w, u->w
    return DiGraph(3, {{0, 1}, {1, 2}, {0, 2}});
}

DiGraph random_unit(int n, double p, std::uint64_t seed) {
    std::vector<EdgeSpec> es;
    int pair = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if (rng::uniform01(seed, static_cast<std::uint64_t>(pair)) < p) es.push_back({u, v});
            ++pair;
        }
    return DiGraph(n, es);
}

}  // namespace

TEST_CASE("graph construction rejects malformed input") {
    CHECK_THROWS_AS(DiGraph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(DiGraph(2, {{0, 1}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(DiGraph(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(DiGraph(2, {{0, 1, -1.0}}), std::invalid_argument);
    DiGraph g(3, {{0, 1}, {1, 2, 2.0}});
    CHECK_FALSE(g.unit_length());
    CHECK(DiGraph(3, {{0, 1}, {1, 2}}).unit_length());
    CHECK(g.edge_between(0, 1).has_value());
    CHECK_FALSE(g.edge_between(1, 0).has_value());
}

TEST_CASE("shortest distances on a 3-cycle") {
    DiGraph g(3, {{0, 1}, {1, 2}, {2, 0}});
    auto d = shortest_distances(g, 0);
    CHECK(d[0] == 0.0);
    CHECK(d[1] == 1.0);
    CHECK(d[2] == 2.0);
}

TEST_CASE("unreachable target has infinite distance") {
    DiGraph g(3, {{0, 1}});
    auto d = shortest_distances(g, 0);
    CHECK(d[2] == kInf);
}

TEST_CASE("weighted diamond shortest path") {
    // u=0, a=1, v=2: u->a(1), a->v(1), u->v(3).  Enumerating both u->v paths
    // by hand gives lengths {2, 3}, so d(u,v)=2.
    DiGraph g(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 3.0}});
    auto d = shortest_distances(g, 0);
    CHECK(d[2] == doctest::Approx(2.0));
}

TEST_CASE("reversed distances") {
    DiGraph g(3, {{0, 1}, {1, 2}});
    auto d = shortest_distances(g, 2, /*reversed=*/true);
    CHECK(d[0] == 2.0);
    CHECK(d[1] == 1.0);
    CHECK(d[2] == 0.0);
}

TEST_CASE("arborescence triangle examples") {
    DiGraph g = triangle();
    auto out_v = arborescence(g, 1, ArborescenceDirection::Out);
    REQUIRE(out_v.size() == 1);
    CHECK(g.edge(out_v[0]).src == 1);
    CHECK(g.edge(out_v[0]).dst == 2);

    // w has no out-edges.
    CHECK(arborescence(g, 2, ArborescenceDirection::Out).empty());

    DiGraph cyc(3, {{0, 1}, {1, 2}, {2, 0}});
    auto out_a = arborescence(cyc, 0, ArborescenceDirection::Out);
    REQUIRE(out_a.size() == 2);
    CHECK(cyc.edge(out_a[0]).src == 0);
    CHECK(cyc.edge(out_a[0]).dst == 1);
    CHECK(cyc.edge(out_a[1]).src == 1);
    CHECK(cyc.edge(out_a[1]).dst == 2);
}

TEST_CASE("arborescence realizes shortest distances") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        DiGraph g = random_unit(12, 0.2, seed);
        for (int root = 0; root < g.vertex_count(); ++root) {
            for (auto dir : {ArborescenceDirection::Out, ArborescenceDirection::In}) {
                auto tree = arborescence(g, root, dir);
                auto dist = shortest_distances(g, root, dir == ArborescenceDirection::In);
                // Walk tree distances: parent relation must realize dist.
                std::vector<double> td(static_cast<std::size_t>(g.vertex_count()), kInf);
                td[static_cast<std::size_t>(root)] = 0.0;
                std::set<int> covered{root};
                // Repeated relaxation over the (acyclic) tree is fine at this size.
                for (int rounds = 0; rounds < g.vertex_count(); ++rounds) {
                    for (int eid : tree) {
                        const Edge& e = g.edge(eid);
                        int par = dir == ArborescenceDirection::Out ? e.src : e.dst;
                        int child = dir == ArborescenceDirection::Out ? e.dst : e.src;
                        if (td[static_cast<std::size_t>(par)] != kInf) {
                            td[static_cast<std::size_t>(child)] =
                                td[static_cast<std::size_t>(par)] + e.length;
                            covered.insert(child);
                        }
                    }
                }
                for (int w = 0; w < g.vertex_count(); ++w) {
                    if (dist[static_cast<std::size_t>(w)] == kInf) {
                        CHECK_FALSE((covered.count(w) && w != root));
                    } else {
                        CHECK(td[static_cast<std::size_t>(w)] ==
                              doctest::Approx(dist[static_cast<std::size_t>(w)]));
                    }
                }
            }
        }
    }
}

TEST_CASE("stretch path enumeration: triangle") {
    DiGraph g = triangle();
    auto paths = enumerate_stretch_paths(g, {0, 2}, 2.0, 100);
    REQUIRE(paths.size() == 2);
    CHECK(paths[0].vertex_sequence(g) == std::vector<int>{0, 1, 2});
    CHECK(paths[1].vertex_sequence(g) == std::vector<int>{0, 2});
    CHECK(paths[0].total_length == doctest::Approx(2.0));
    CHECK(paths[1].total_length == doctest::Approx(1.0));
}

TEST_CASE("stretch path enumeration: k=1 keeps only the shortest") {
    DiGraph g = triangle();
    auto paths = enumerate_stretch_paths(g, {0, 2}, 1.0, 100);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].vertex_sequence(g) == std::vector<int>{0, 2});
}

TEST_CASE("stretch path enumeration: directed cycle tight budget") {
    const int n = 6;
    std::vector<EdgeSpec> es;
    for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
    DiGraph g(n, es);
    auto paths = enumerate_stretch_paths(g, {0, 1}, static_cast<double>(n) - 2.0, 100);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].edge_ids.size() == 1);
}

TEST_CASE("path overflow reported") {
    DiGraph g = triangle();
    CHECK_THROWS_AS(enumerate_stretch_paths(g, {0, 2}, 2.0, 1), PathOverflow);
    CHECK(count_stretch_paths(g, {0, 2}, 2.0, 10) == 2);
}

TEST_CASE("support set examples") {
    DiGraph g = triangle();
    auto ctx = support_set(g, {0, 2}, 2.0);
    CHECK(ctx.support_vertices == std::vector<int>{0, 1, 2});
    CHECK(ctx.dist == 1.0);
    CHECK(ctx.stretch_budget == 2.0);

    auto ctx1 = support_set(g, {0, 1}, 1.0);
    CHECK(ctx1.support_vertices == std::vector<int>{0, 1});

    // diamond u->a->v, u->b->v, u->v (u=0, a=1, b=2, v=3)
    DiGraph dia(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}, {0, 3}});
    auto ctx2 = support_set(dia, {0, 3}, 2.0);
    CHECK(ctx2.support_vertices == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("support set agrees with the enumeration oracle") {
    // Every simple stretch-k path stays inside N_{u,v}; the reverse containment
    // can fail (a vertex may lie on a stretch-k walk whose shortest u->w and
    // w->v legs overlap, with no simple stretch-k path through it), so N is
    // checked against its distance-sum definition instead.
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        DiGraph g = random_unit(9, 0.25, seed);
        for (const Edge& e : g.edges()) {
            for (double k : {1.0, 2.0, 3.0}) {
                auto ctx = support_set(g, {e.src, e.dst}, k);
                auto paths = enumerate_stretch_paths(g, {e.src, e.dst}, k, 100000);
                std::set<int> from_ctx(ctx.support_vertices.begin(), ctx.support_vertices.end());
                for (const Path& p : paths)
                    for (int v : p.vertex_sequence(g)) CHECK(from_ctx.count(v) == 1);
                auto du = shortest_distances(g, e.src, false);
                auto dv = shortest_distances(g, e.dst, true);
                for (int w = 0; w < g.vertex_count(); ++w) {
                    bool in = from_ctx.count(w) == 1;
                    bool should = du[static_cast<std::size_t>(w)] != kInf &&
                                  dv[static_cast<std::size_t>(w)] != kInf &&
                                  du[static_cast<std::size_t>(w)] + dv[static_cast<std::size_t>(w)] <=
                                      ctx.stretch_budget + 1e-9;
                    CHECK(in == should);
                }
            }
        }
    }
}

TEST_CASE("direct edge is always enumerated") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        DiGraph g = random_unit(8, 0.3, seed);
        for (const Edge& e : g.edges()) {
            auto paths = enumerate_stretch_paths(g, {e.src, e.dst}, 2.0, 100000);
            bool has_direct = false;
            for (const Path& p : paths)
                if (p.edge_ids.size() == 1 && p.edge_ids[0] == e.id) has_direct = true;
            CHECK(has_direct);
        }
    }
}

TEST_CASE("enumeration is deterministic") {
    DiGraph g = random_unit(10, 0.3, 7);
    const Edge& e = g.edges().front();
    auto a = enumerate_stretch_paths(g, {e.src, e.dst}, 3.0, 100000);
    auto b = enumerate_stretch_paths(g, {e.src, e.dst}, 3.0, 100000);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].edge_ids == b[i].edge_ids);
    // lexicographic order of vertex sequences
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        CHECK(a[i].vertex_sequence(g) < a[i + 1].vertex_sequence(g));
}

// Copyright (c) spannerlab contributors.
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "../tools/cli_lib.hpp"
#include "spannerlab/errors.hpp"

using namespace spannerlab;
using namespace spannerlab::cli;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("spannerlab_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

json strip_times(json j) {
    j.erase("times");
    return j;
}

}  // namespace

TEST_CASE("gen random is deterministic and parseable") {
    TempDir tmp;
    GenOptions gen;
    gen.kind = "random";
    gen.n = 12;
    gen.p = 0.3;
    gen.seed = 7;
    gen.out = tmp.file("g.gr");
    json a = cmd_gen(gen);
    std::ifstream in1(gen.out);
    std::stringstream s1;
    s1 << in1.rdbuf();
    json b = cmd_gen(gen);
    std::ifstream in2(gen.out);
    std::stringstream s2;
    s2 << in2.rdbuf();
    CHECK(s1.str() == s2.str());
    CHECK(a.at("m") == b.at("m"));
    DiGraph g = load_graph(gen.out);
    CHECK(g.vertex_count() == 12);
}

TEST_CASE("run pipeline end to end on the triangle") {
    TempDir tmp;
    const std::string path = tmp.file("tri.gr");
    save_graph(DiGraph(3, {{0, 1}, {1, 2}, {0, 2}}), path);

    RunOptions run;
    run.graph_path = path;
    run.k = 2.0;
    run.algo = "2spanner";
    run.seed = 5;
    json rep = cmd_run(run);
    CHECK(rep.at("verification").at("valid") == true);
    CHECK(rep.at("lp").at("objective") == doctest::Approx(2.0));
    CHECK(rep.at("ratios").at("vs_lp").get<double>() >= 1.0 - 1e-6);
    CHECK(rep.at("ratios").contains("vs_opt"));  // m <= 14 triggers the brute oracle
    CHECK(rep.at("ratios").at("brute_opt") == doctest::Approx(2.0));
}

TEST_CASE("run reports are byte-identical modulo the time fields") {
    TempDir tmp;
    GenOptions gen;
    gen.kind = "random";
    gen.n = 14;
    gen.p = 0.25;
    gen.seed = 3;
    gen.out = tmp.file("g.gr");
    cmd_gen(gen);

    RunOptions run;
    run.graph_path = gen.out;
    run.k = 3.0;
    run.algo = "3spanner";
    run.seed = 11;
    json a = cmd_run(run);
    json b = cmd_run(run);
    CHECK(strip_times(a).dump() == strip_times(b).dump());
}

TEST_CASE("run with faults uses the FT pipeline") {
    TempDir tmp;
    const std::string path = tmp.file("dia.gr");
    save_graph(DiGraph(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}, {0, 3}}), path);

    RunOptions run;
    run.graph_path = path;
    run.k = 2.0;
    run.algo = "2spanner";
    run.seed = 4;
    run.fault = FaultModel{FaultKind::Vertex, 1};
    json rep = cmd_run(run);
    CHECK(rep.at("lp").at("objective") == doctest::Approx(4.0));
    CHECK(rep.at("verification").at("valid") == true);
}

TEST_CASE("gen + gap-check round trip for both gap kinds") {
    TempDir tmp;
    GenOptions gen;
    gen.kind = "setcover-gap";
    gen.q = 2;
    gen.aux = 3;
    gen.out = tmp.file("sc.gr");
    json sum = cmd_gen(gen);
    CHECK(sum.at("certificate_cost") == doctest::Approx(2.0 * 3 + 6 + 6));  // 2A + C(M,2) + NM/2

    GapCheckOptions gc;
    gc.graph_path = gen.out;
    gc.certificate_path = sum.at("certificate").get<std::string>();
    json rep = cmd_gap_check(gc);
    CHECK(rep.at("feasible") == true);
    CHECK(rep.at("setcover_opt") == 2);

    GenOptions mg;
    mg.kind = "minrep-gap";
    mg.r = 2;
    mg.q = 2;
    mg.k = 3;
    mg.seed = 1;
    mg.out = tmp.file("mr.gr");
    json msum = cmd_gen(mg);
    GapCheckOptions mgc;
    mgc.graph_path = mg.out;
    mgc.certificate_path = msum.at("certificate").get<std::string>();
    json mrep = cmd_gap_check(mgc);
    CHECK(mrep.at("feasible") == true);
    CHECK(mrep.at("minrep_opt") == 2);
}

TEST_CASE("tampered certificates are rejected") {
    TempDir tmp;
    GenOptions gen;
    gen.kind = "minrep-gap";
    gen.r = 2;
    gen.q = 3;  // keeps group capacities 2/q below 1, so 1.0 marks a tail edge
    gen.k = 5;
    gen.seed = 2;
    gen.out = tmp.file("mr.gr");
    json sum = cmd_gen(gen);
    const std::string cert_path = sum.at("certificate").get<std::string>();
    json cert = load_json(cert_path);
    // zero one tail capacity; a tail edge's demand has no alternate route
    DiGraph g = load_graph(gen.out);
    bool zeroed = false;
    double obj = 0.0;
    for (json& item : cert.at("x")) {
        if (!zeroed && item.at("value").get<double>() == 1.0) {
            item["value"] = 0.0;
            zeroed = true;
        }
        int e = item.at("edge").get<int>();
        obj += g.edge(e).cost * item.at("value").get<double>();
    }
    REQUIRE(zeroed);
    // keep the objective consistent so feasibility (not bookkeeping) fails
    cert["objective"] = obj;
    save_json(cert, cert_path);

    GapCheckOptions gc;
    gc.graph_path = gen.out;
    gc.certificate_path = cert_path;
    CHECK_THROWS_AS(cmd_gap_check(gc), CertificateInfeasible);
}

TEST_CASE("bench emits one row per configuration and reruns identically") {
    BenchOptions bench;
    bench.sizes = {6, 8, 10};
    bench.densities = {0.3};
    bench.ks = {2.0, 3.0};
    bench.seeds = 2;
    bench.trials = 2;
    bench.with_times = false;
    std::ostringstream a, b;
    cmd_bench(bench, a);
    cmd_bench(bench, b);
    CHECK(a.str() == b.str());
    int rows = -1;  // header
    std::istringstream in(a.str());
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 3 * 2 * 2);
}

TEST_CASE("rsp subcommand mirrors the module examples") {
    TempDir tmp;
    const std::string path = tmp.file("rsp.gr");
    save_graph(DiGraph(5, {{0, 1}, {1, 4}, {0, 2}, {2, 3}, {3, 4}}), path);
    const std::string wpath = tmp.file("w.json");
    save_json(json::array({2.0, 3.0, 0.0, 0.0, 1.0}), wpath);

    RspOptions rsp;
    rsp.graph_path = path;
    rsp.source = 0;
    rsp.target = 4;
    rsp.weights_path = wpath;
    rsp.budget = 2.0;
    json r2 = cmd_rsp(rsp);
    CHECK(r2.at("weight") == doctest::Approx(5.0));
    rsp.budget = 3.0;
    json r3 = cmd_rsp(rsp);
    CHECK(r3.at("weight") == doctest::Approx(1.0));
    rsp.budget = 1.0;
    CHECK_THROWS_AS(cmd_rsp(rsp), NoFeasiblePath);

    rsp.budget = 3.0;
    rsp.epsilon = 0.1;
    json ra = cmd_rsp(rsp);
    CHECK(ra.at("weight").get<double>() <= 1.1 + 1e-9);
}

TEST_CASE("verify and brute subcommands") {
    TempDir tmp;
    const std::string path = tmp.file("tri.gr");
    save_graph(DiGraph(3, {{0, 1}, {1, 2}, {0, 2}}), path);
    const std::string epath = tmp.file("edges.json");
    save_json(json{{"edges", {0, 1}}}, epath);

    VerifyOptions ver;
    ver.graph_path = path;
    ver.edges_path = epath;
    ver.k = 2.0;
    json rep = cmd_verify(ver);
    CHECK(rep.at("valid") == true);
    CHECK(rep.at("stretch") == doctest::Approx(2.0));

    BruteOptions brute;
    brute.graph_path = path;
    brute.k = 2.0;
    json b = cmd_brute(brute);
    CHECK(b.at("value") == doctest::Approx(2.0));
    CHECK(b.at("witness") == json::array({0, 1}));
}

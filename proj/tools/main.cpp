// Copyright (c) spannerlab contributors.
// SPDX-License-Identifier: Apache-2.0
//
// spannerlab: flow-LP relaxations, randomized rounding and verification for
// directed k-spanners.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cli_lib.hpp"
#include "spannerlab/errors.hpp"

namespace {

using namespace spannerlab;
using namespace spannerlab::cli;

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << std::endl;
    } else {
        save_json(j, out_path);
    }
}

std::optional<FaultModel> fault_from(int r, const std::string& kind) {
    if (r <= 0) return std::nullopt;
    if (kind == "vertex") return FaultModel{FaultKind::Vertex, r};
    if (kind == "edge") return FaultModel{FaultKind::Edge, r};
    throw Error(ErrorCode::Usage, "--fault-kind must be vertex or edge");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spannerlab: LP relaxation, rounding and verification for directed k-spanners"};
    app.require_subcommand(0, 1);
    bool show_config = false;
    app.add_flag("--show-config", show_config, "print effective defaults and exit");

    // ---- gen -----------------------------------------------------------------
    GenOptions gen;
    auto* cgen = app.add_subcommand("gen", "generate instances");
    cgen->add_option("kind", gen.kind, "random | minrep-gap | setcover-gap | synthetic-minrep")
        ->required();
    cgen->add_option("--n", gen.n, "vertex count")->envname("SPANNERLAB_N");
    cgen->add_option("--p", gen.p, "edge probability")->envname("SPANNERLAB_P");
    cgen->add_option("--seed", gen.seed, "generator seed")->envname("SPANNERLAB_SEED");
    cgen->add_option("--k", gen.k, "stretch (odd, for minrep-gap)");
    cgen->add_option("--q", gen.q, "group size / field dimension");
    cgen->add_option("--r", gen.r, "group count");
    cgen->add_option("--aux", gen.aux, "aux vertex count override for setcover-gap");
    cgen->add_option("--length-lo", gen.length_lo, "uniform length lower bound");
    cgen->add_option("--length-hi", gen.length_hi, "uniform length upper bound (enables weighted)");
    cgen->add_option("--out", gen.out, "output graph path")->required();

    // ---- run -----------------------------------------------------------------
    RunOptions run;
    int run_faults = 0;
    std::string run_fault_kind = "vertex", run_out, run_format = "json";
    auto* crun = app.add_subcommand("run", "solve, round and verify one instance");
    crun->add_option("graph", run.graph_path, "graph file")->required();
    crun->add_option("--k", run.k, "stretch factor")->required()->envname("SPANNERLAB_K");
    crun->add_option("--algo", run.algo, "general | 3spanner | 2spanner | 2spanner-bd")
        ->envname("SPANNERLAB_ALGO");
    crun->add_option("--epsilon", run.epsilon, "LP approximation epsilon")
        ->envname("SPANNERLAB_EPSILON");
    crun->add_option("--seed", run.seed, "rounding seed")->envname("SPANNERLAB_SEED");
    crun->add_option("--trials", run.trials, "rounding repetitions (-1 = formula)");
    crun->add_option("--max-paths", run.max_paths, "exact-mode enumeration cap");
    crun->add_option("--faults", run_faults, "fault budget r");
    crun->add_option("--fault-kind", run_fault_kind, "vertex | edge");
    crun->add_option("--C", run.C, "rho constant override");
    crun->add_option("--C1", run.C1, "FT trial constant");
    crun->add_option("--C2", run.C2, "FT rho constant");
    crun->add_option("--r-max", run.r_max, "fault enumeration cap");
    crun->add_option("--format", run_format, "json")->check(CLI::IsMember({"json"}));
    crun->add_option("--out", run_out, "write the report here instead of stdout");

    // ---- gap-check -------------------------------------------------------------
    GapCheckOptions gap;
    std::string gap_out;
    auto* cgap = app.add_subcommand("gap-check", "validate a gap certificate");
    cgap->add_option("graph", gap.graph_path, "graph file")->required();
    cgap->add_option("certificate", gap.certificate_path, "certificate sidecar")->required();
    cgap->add_option("--out", gap_out, "write the report here instead of stdout");

    // ---- bench -----------------------------------------------------------------
    BenchOptions bench;
    std::string bench_out, bench_format = "csv";
    auto* cbench = app.add_subcommand("bench", "benchmark suite -> CSV");
    cbench->add_option("--sizes", bench.sizes, "vertex counts");
    cbench->add_option("--densities", bench.densities, "edge probabilities");
    cbench->add_option("--ks", bench.ks, "stretch factors");
    cbench->add_option("--seeds", bench.seeds, "seeds per configuration");
    cbench->add_option("--trials", bench.trials, "rounding trials per row");
    cbench->add_option("--algo", bench.algo, "auto | general | 3spanner | 2spanner");
    cbench->add_option("--epsilon", bench.epsilon, "LP epsilon");
    cbench->add_option("--format", bench_format, "csv")->check(CLI::IsMember({"csv"}));
    cbench->add_option("--out", bench_out, "CSV path (default stdout)");

    // ---- rsp -----------------------------------------------------------------
    RspOptions rsp;
    std::string rsp_out;
    auto* crsp = app.add_subcommand("rsp", "restricted shortest path query");
    crsp->add_option("graph", rsp.graph_path, "graph file")->required();
    crsp->add_option("--source", rsp.source)->required();
    crsp->add_option("--target", rsp.target)->required();
    crsp->add_option("--budget", rsp.budget, "length budget (hop bound when epsilon=0)")
        ->required();
    crsp->add_option("--weights", rsp.weights_path, "JSON array of per-edge weights")->required();
    crsp->add_option("--epsilon", rsp.epsilon, "FPTAS epsilon; 0 = exact hop mode");
    crsp->add_option("--out", rsp_out, "write the report here instead of stdout");

    // ---- verify ----------------------------------------------------------------
    VerifyOptions ver;
    int ver_faults = 0;
    std::string ver_fault_kind = "vertex", ver_out;
    auto* cver = app.add_subcommand("verify", "check an edge set against a graph");
    cver->add_option("graph", ver.graph_path, "graph file")->required();
    cver->add_option("edges", ver.edges_path, "JSON file with an edges array")->required();
    cver->add_option("--k", ver.k, "stretch factor")->required();
    cver->add_option("--faults", ver_faults, "fault budget r");
    cver->add_option("--fault-kind", ver_fault_kind, "vertex | edge");
    cver->add_option("--out", ver_out, "write the report here instead of stdout");

    // ---- brute -----------------------------------------------------------------
    BruteOptions brute;
    int brute_faults = 0;
    std::string brute_fault_kind = "vertex", brute_out;
    auto* cbrute = app.add_subcommand("brute", "exact optimum by subset enumeration");
    cbrute->add_option("graph", brute.graph_path, "graph file")->required();
    cbrute->add_option("--k", brute.k, "stretch factor")->required();
    cbrute->add_option("--faults", brute_faults, "fault budget r");
    cbrute->add_option("--fault-kind", brute_fault_kind, "vertex | edge");
    cbrute->add_option("--max-edges", brute.max_edges, "enumeration guard");
    cbrute->add_option("--out", brute_out, "write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : static_cast<int>(ErrorCode::Usage);
    }

    if (!show_config && app.get_subcommands().empty()) {
        std::cerr << app.help() << std::endl;
        return static_cast<int>(ErrorCode::Usage);
    }
    if (show_config) {
        json defaults = {{"k", 2.0},
                         {"algo", "general"},
                         {"epsilon", 0.01},
                         {"seed", 0},
                         {"trials", -1},
                         {"max_paths", 100000},
                         {"r_max", 2},
                         {"brute_max_edges", 14},
                         {"C_2spanner", 6.0},
                         {"C_3spanner", 1.0},
                         {"C1", 1.0},
                         {"C2", 1.0},
                         {"env_prefix", "SPANNERLAB_"}};
        std::cout << defaults.dump(2) << std::endl;
        return 0;
    }

    try {
        if (*cgen) {
            emit(cmd_gen(gen), "");
        } else if (*crun) {
            run.fault = fault_from(run_faults, run_fault_kind);
            json report = cmd_run(run);
            emit(report, run_out);
            if (!report.at("verification").at("valid").get<bool>()) return 1;
        } else if (*cgap) {
            emit(cmd_gap_check(gap), gap_out);
        } else if (*cbench) {
            if (bench_out.empty()) {
                cmd_bench(bench, std::cout);
            } else {
                std::ofstream out(bench_out);
                if (!out) throw ParseError("cannot open output file: " + bench_out);
                cmd_bench(bench, out);
            }
        } else if (*crsp) {
            emit(cmd_rsp(rsp), rsp_out);
        } else if (*cver) {
            ver.fault = fault_from(ver_faults, ver_fault_kind);
            json report = cmd_verify(ver);
            emit(report, ver_out);
            if (!report.at("valid").get<bool>()) return 1;
        } else if (*cbrute) {
            brute.fault = fault_from(brute_faults, brute_fault_kind);
            emit(cmd_brute(brute), brute_out);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
    return 0;
}

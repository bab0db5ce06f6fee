// Copyright (c) spannerlab contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "spannerlab/io.hpp"

namespace spannerlab::cli {

struct RunOptions {
    std::string graph_path;
    double k = 2.0;
    std::string algo = "general";  // general | 3spanner | 2spanner | 2spanner-bd
    double epsilon = 0.01;
    std::uint64_t seed = 0;
    int trials = -1;
    std::size_t max_paths = 100000;
    std::optional<FaultModel> fault;
    double C = -1.0, C1 = 1.0, C2 = 1.0;
    int r_max = 2;
    int brute_max_edges = 14;
    bool with_times = true;  // tests zero the wall-time fields
};

/// solve -> round -> verify pipeline; returns the RunReport.
json cmd_run(const RunOptions& opt);

struct GenOptions {
    std::string kind;  // random | minrep-gap | setcover-gap | synthetic-minrep
    int n = 20;
    double p = 0.2;
    std::uint64_t seed = 0;
    int k = 3;
    int q = 2;
    int r = 4;
    int aux = -1;
    double length_lo = 0.0, length_hi = 0.0;  // >0 selects weighted lengths
    std::string out;
};

/// Writes the instance files; returns a summary of what was written.
json cmd_gen(const GenOptions& opt);

struct GapCheckOptions {
    std::string graph_path;
    std::string certificate_path;
    int brute_max_groups = 20;
};

json cmd_gap_check(const GapCheckOptions& opt);

struct BenchOptions {
    std::vector<int> sizes{10, 15, 20};
    std::vector<double> densities{0.2};
    std::vector<double> ks{2.0, 3.0};
    int seeds = 10;
    int trials = 3;
    std::string algo = "auto";
    double epsilon = 0.01;
    std::size_t max_paths = 100000;
    bool with_times = true;
};

/// CSV rows; partial failures are flagged in the error column and the suite
/// keeps going.
void cmd_bench(const BenchOptions& opt, std::ostream& out);

struct RspOptions {
    std::string graph_path;
    int source = 0;
    int target = 0;
    double budget = 0.0;
    std::string weights_path;  // JSON array of per-edge weights
    double epsilon = 0.0;      // 0 = exact hop mode
};

json cmd_rsp(const RspOptions& opt);

struct VerifyOptions {
    std::string graph_path;
    std::string edges_path;  // JSON with an "edges" array
    double k = 2.0;
    std::optional<FaultModel> fault;
};

json cmd_verify(const VerifyOptions& opt);

struct BruteOptions {
    std::string graph_path;
    double k = 2.0;
    std::optional<FaultModel> fault;
    int max_edges = 14;
};

json cmd_brute(const BruteOptions& opt);

}  // namespace spannerlab::cli

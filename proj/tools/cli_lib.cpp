// Copyright (c) spannerlab contributors.
// SPDX-License-Identifier: Apache-2.0
#include "cli_lib.hpp"

#include <chrono>
#include <cmath>
#include <ostream>

#include "spannerlab/errors.hpp"
#include "spannerlab/rounding.hpp"
#include "spannerlab/rsp.hpp"
#include "spannerlab/subsets.hpp"

namespace spannerlab::cli {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

RoundingMode mode_for(const std::string& algo) {
    if (algo == "general") return RoundingMode::GeneralK;
    if (algo == "3spanner") return RoundingMode::ThreeSpanner;
    if (algo == "2spanner") return RoundingMode::TwoSpanner;
    if (algo == "2spanner-bd") return RoundingMode::TwoSpannerBoundedDegree;
    throw Error(ErrorCode::Usage, "unknown algorithm: " + algo);
}

SpannerSolution round_with(const DiGraph& g, const FractionalSolution& frac,
                           const RoundingConfig& cfg) {
    const bool ft = cfg.fault && cfg.fault->r > 0;
    switch (cfg.mode) {
        case RoundingMode::GeneralK:
            return ft ? round_general_k_ft(g, frac, cfg) : round_general_k(g, frac, cfg);
        case RoundingMode::ThreeSpanner:
            return ft ? round_3spanner_ft(g, frac, cfg) : round_3spanner(g, frac, cfg);
        case RoundingMode::TwoSpanner:
        case RoundingMode::TwoSpannerBoundedDegree:
            return ft ? round_2spanner_ft(g, frac, cfg) : round_2spanner(g, frac, cfg);
    }
    throw Error(ErrorCode::Usage, "unreachable rounding mode");
}

bool exact_enumerable(const DiGraph& g, double k, std::size_t max_paths) {
    for (const Edge& e : g.edges())
        if (count_stretch_paths(g, {e.src, e.dst}, k, max_paths) > max_paths) return false;
    return true;
}

}  // namespace

json cmd_run(const RunOptions& opt) {
    const auto t_start = std::chrono::steady_clock::now();
    DiGraph g = load_graph(opt.graph_path);

    json report;
    report["instance"] = {{"path", opt.graph_path},
                          {"n", g.vertex_count()},
                          {"m", g.edge_count()},
                          {"unit_length", g.unit_length()}};

    const auto t_solve = std::chrono::steady_clock::now();
    FractionalSolution frac;
    if (opt.fault && opt.fault->r > 0) {
        frac = solve_ft_lp(g, opt.k, *opt.fault, opt.epsilon, opt.r_max);
    } else if (exact_enumerable(g, opt.k, opt.max_paths)) {
        frac = solve_lp_exact(g, opt.k, opt.max_paths);
    } else {
        frac = solve_lp_colgen(g, opt.k, opt.epsilon);
    }
    const double solve_s = seconds_since(t_solve);
    report["lp"] = {{"objective", frac.objective},
                    {"mode", frac.mode == SolveMode::Exact ? "exact" : "colgen"},
                    {"epsilon", frac.epsilon}};

    const auto t_round = std::chrono::steady_clock::now();
    RoundingConfig cfg;
    cfg.k = opt.k;
    cfg.seed = opt.seed;
    cfg.trials = opt.trials;
    cfg.C = opt.C;
    cfg.C1 = opt.C1;
    cfg.C2 = opt.C2;
    cfg.epsilon = opt.epsilon;
    cfg.fault = opt.fault;
    cfg.mode = mode_for(opt.algo);
    SpannerSolution sol = round_with(g, frac, cfg);
    const double round_s = seconds_since(t_round);
    report["rounding"] = to_json(sol);

    const auto t_verify = std::chrono::steady_clock::now();
    VerifyReport verdict = opt.fault && opt.fault->r > 0
                               ? verify_ft(g, opt.k, sol.edges, *opt.fault)
                               : verify_spanner(g, opt.k, sol.edges);
    const double verify_s = seconds_since(t_verify);
    report["verification"] = to_json(verdict);

    json ratios;
    ratios["vs_lp"] = frac.objective > 0 ? sol.cost / frac.objective : 1.0;
    if (g.edge_count() <= opt.brute_max_edges) {
        try {
            auto brute = brute_force_opt(g, opt.k, opt.fault, opt.brute_max_edges);
            ratios["brute_opt"] = brute.value;
            ratios["vs_opt"] = brute.value > 0 ? sol.cost / brute.value : 1.0;
        } catch (const Infeasible&) {
            ratios["brute_opt"] = nullptr;
        }
    }
    report["ratios"] = std::move(ratios);

    report["times"] = {{"solve_s", opt.with_times ? solve_s : 0.0},
                       {"round_s", opt.with_times ? round_s : 0.0},
                       {"verify_s", opt.with_times ? verify_s : 0.0},
                       {"total_s", opt.with_times ? seconds_since(t_start) : 0.0}};
    return report;
}

json cmd_gen(const GenOptions& opt) {
    if (opt.out.empty()) throw Error(ErrorCode::Usage, "--out is required");
    json summary;
    summary["kind"] = opt.kind;
    if (opt.kind == "random") {
        LengthModel lm = opt.length_hi > 0.0 ? LengthModel::uniform(opt.length_lo, opt.length_hi)
                                             : LengthModel::unit();
        DiGraph g = gen_random_digraph(opt.n, opt.p, lm, opt.seed);
        save_graph(g, opt.out);
        summary["graph"] = opt.out;
        summary["n"] = g.vertex_count();
        summary["m"] = g.edge_count();
    } else if (opt.kind == "synthetic-minrep") {
        MinRepInstance mr = gen_synthetic_minrep(opt.r, opt.q, opt.seed);
        json j = {{"group_count", mr.group_count},
                  {"group_size", mr.group_size},
                  {"matchings", mr.matchings}};
        save_json(j, opt.out);
        summary["instance"] = opt.out;
        summary["vertices"] = mr.num_vertices();
    } else if (opt.kind == "minrep-gap" || opt.kind == "setcover-gap") {
        GapInstance gap;
        if (opt.kind == "minrep-gap") {
            MinRepInstance mr = gen_synthetic_minrep(opt.r, opt.q, opt.seed);
            gap = build_minrep_gap_instance(mr, opt.k);
        } else {
            gap = build_setcover_gap_instance(opt.q, opt.aux);
        }
        save_graph(gap.graph, opt.out);
        const std::string cert_path = opt.out + ".cert.json";
        save_json(gap_certificate_json(gap), cert_path);
        summary["graph"] = opt.out;
        summary["certificate"] = cert_path;
        summary["n"] = gap.graph.vertex_count();
        summary["m"] = gap.graph.edge_count();
        summary["certificate_cost"] = gap.certificate.objective;
        summary["cost_bound"] = gap.predicted_fractional_cost_bound;
    } else {
        throw Error(ErrorCode::Usage, "unknown generator kind: " + opt.kind);
    }
    return summary;
}

json cmd_gap_check(const GapCheckOptions& opt) {
    DiGraph g = load_graph(opt.graph_path);
    GapInstance gap = gap_from_files(g, load_json(opt.certificate_path));
    const double k = gap.certificate.k;

    json report;
    report["kind"] = gap.kind == GapKind::MinRepKSpanner ? "minrep_k_spanner" : "setcover_2spanner";
    report["params"] = gap.params;
    report["certificate_cost"] = gap.certificate.objective;
    report["cost_bound"] = gap.predicted_fractional_cost_bound;

    // recompute the objective from the capacities (cost-weighted)
    double recomputed = 0.0;
    for (const Edge& e : g.edges()) recomputed += e.cost * gap.certificate.x[static_cast<std::size_t>(e.id)];
    if (std::abs(recomputed - gap.certificate.objective) > 1e-6 * (1.0 + recomputed))
        throw CertificateInfeasible("certificate objective does not match its capacities");
    if (gap.certificate.objective > gap.predicted_fractional_cost_bound + 1e-6)
        throw CertificateInfeasible("certificate objective exceeds the predicted bound");

    auto verdict = check_fractional_feasibility(g, k, gap.certificate.x);
    if (!verdict.feasible) {
        json viol;
        viol["demand"] = {verdict.violation->demand.first, verdict.violation->demand.second};
        viol["cut_value"] = verdict.violation->value;
        json cut = json::array();
        for (auto [e, v] : verdict.violation->y) cut.push_back({{"edge", e}, {"value", v}});
        viol["cut"] = std::move(cut);
        CertificateInfeasible err("certificate infeasible for demand (" +
                                  std::to_string(verdict.violation->demand.first) + "," +
                                  std::to_string(verdict.violation->demand.second) + ")");
        report["feasible"] = false;
        report["violation"] = std::move(viol);
        // surface the machine-readable report through the exception message
        throw CertificateInfeasible(err.what() + std::string("\n") + report.dump(2));
    }
    report["feasible"] = true;

    if (gap.setcover_witness) {
        const SetCoverWitness& w = *gap.setcover_witness;
        if (static_cast<int>(w.sets.size()) <= opt.brute_max_groups) {
            int cover = brute_force_setcover(w.num_elements, w.sets);
            report["setcover_opt"] = cover;
            // every aux vertex's neighborhood must contain a set cover
            double integral_lb = static_cast<double>(w.aux_count) * cover;
            report["integral_lower_bound"] = integral_lb;
            report["ratio_lower_bound"] = integral_lb / gap.certificate.objective;
        }
        // brute-force the 2-spanner optimum over shared undirected edges when
        // the sub-configuration is small enough
        if (w.shared_edge_groups.size() <= 20) {
            const auto& groups = w.shared_edge_groups;
            double best = kInf;
            for (std::uint64_t mask = 0; mask < (1ULL << groups.size()); ++mask) {
                std::vector<int> arcs;
                for (std::size_t i = 0; i < groups.size(); ++i)
                    if (mask >> i & 1ULL)
                        arcs.insert(arcs.end(), groups[i].begin(), groups[i].end());
                if (static_cast<double>(__builtin_popcountll(mask)) >= best) continue;
                if (verify_spanner(g, k, arcs).valid)
                    best = static_cast<double>(__builtin_popcountll(mask));
            }
            report["integral_opt_subconfig"] = best;
            report["ratio_subconfig"] = best / gap.certificate.objective;
        }
    }
    if (gap.minrep_witness && gap.minrep_witness->num_vertices() <= 20) {
        int opt_mr = brute_force_minrep(*gap.minrep_witness);
        report["minrep_opt"] = opt_mr;
        report["x_tails"] = gap.params.count("x") ? gap.params.at("x") : 0.0;
    }
    if (g.edge_count() <= 14) {
        auto brute = brute_force_opt(g, k);
        report["integral_opt"] = brute.value;
        report["ratio"] = brute.value / gap.certificate.objective;
    }
    return report;
}

void cmd_bench(const BenchOptions& opt, std::ostream& out) {
    out << "n,p,k,seed,m,algo,lp_objective,lp_mode,mean_size,mean_cost,mean_ratio_vs_lp,"
           "validity_rate,solve_s,round_s,verify_s,error\n";
    for (int n : opt.sizes) {
        for (double p : opt.densities) {
            for (double k : opt.ks) {
                for (int seed = 0; seed < opt.seeds; ++seed) {
                    std::string algo = opt.algo;
                    if (algo == "auto")
                        algo = k == 2.0 ? "2spanner" : (k == 3.0 ? "3spanner" : "general");
                    out << n << "," << p << "," << k << "," << seed << ",";
                    try {
                        DiGraph g = gen_random_digraph(n, p, LengthModel::unit(),
                                                       static_cast<std::uint64_t>(seed));
                        const auto t_solve = std::chrono::steady_clock::now();
                        FractionalSolution frac =
                            exact_enumerable(g, k, opt.max_paths)
                                ? solve_lp_exact(g, k, opt.max_paths)
                                : solve_lp_colgen(g, k, opt.epsilon);
                        const double solve_s = seconds_since(t_solve);
                        double total_size = 0.0, total_cost = 0.0, total_ratio = 0.0;
                        int valid = 0;
                        const auto t_round = std::chrono::steady_clock::now();
                        double verify_s = 0.0;
                        for (int trial = 0; trial < opt.trials; ++trial) {
                            RoundingConfig cfg;
                            cfg.k = k;
                            cfg.seed = static_cast<std::uint64_t>(seed) * 1000003ULL +
                                       static_cast<std::uint64_t>(trial);
                            cfg.mode = mode_for(algo);
                            SpannerSolution sol = round_with(g, frac, cfg);
                            total_size += sol.size;
                            total_cost += sol.cost;
                            total_ratio += frac.objective > 0 ? sol.cost / frac.objective : 1.0;
                            const auto t_verify = std::chrono::steady_clock::now();
                            if (verify_spanner(g, k, sol.edges).valid) ++valid;
                            verify_s += seconds_since(t_verify);
                        }
                        const double round_s = seconds_since(t_round) - verify_s;
                        out << g.edge_count() << "," << algo << "," << frac.objective << ","
                            << (frac.mode == SolveMode::Exact ? "exact" : "colgen") << ","
                            << total_size / opt.trials << "," << total_cost / opt.trials << ","
                            << total_ratio / opt.trials << ","
                            << static_cast<double>(valid) / opt.trials << ","
                            << (opt.with_times ? solve_s : 0.0) << ","
                            << (opt.with_times ? round_s : 0.0) << ","
                            << (opt.with_times ? verify_s : 0.0) << ",\n";
                    } catch (const std::exception& e) {
                        std::string what = e.what();
                        for (char& c : what)
                            if (c == ',' || c == '\n') c = ';';
                        out << ",,,,,,,,,,," << what << "\n";
                    }
                }
            }
        }
    }
}

json cmd_rsp(const RspOptions& opt) {
    DiGraph g = load_graph(opt.graph_path);
    json weights = load_json(opt.weights_path);
    RSPQuery q;
    q.g = &g;
    q.source = opt.source;
    q.target = opt.target;
    q.budget = opt.budget;
    q.weight = weights.get<std::vector<double>>();
    q.epsilon = opt.epsilon;

    json report;
    if (opt.epsilon == 0.0) {
        auto res = rsp_exact_hop(q);
        if (!res) throw NoFeasiblePath("no path within the hop bound");
        report["path"] = res->path.vertex_sequence(g);
        report["weight"] = res->weight;
        report["length"] = res->path.total_length;
        report["mode"] = "exact_hop";
    } else {
        auto res = rsp_fptas(q);
        report["path"] = res.path.vertex_sequence(g);
        report["weight"] = res.weight;
        report["length"] = res.path.total_length;
        report["mode"] = "fptas";
        report["epsilon"] = opt.epsilon;
    }
    return report;
}

json cmd_verify(const VerifyOptions& opt) {
    DiGraph g = load_graph(opt.graph_path);
    json edges_json = load_json(opt.edges_path);
    std::vector<int> edges = edges_json.contains("edges")
                                 ? edges_json.at("edges").get<std::vector<int>>()
                                 : edges_json.get<std::vector<int>>();
    VerifyReport rep = opt.fault && opt.fault->r > 0 ? verify_ft(g, opt.k, edges, *opt.fault)
                                                     : verify_spanner(g, opt.k, edges);
    return to_json(rep);
}

json cmd_brute(const BruteOptions& opt) {
    DiGraph g = load_graph(opt.graph_path);
    auto res = brute_force_opt(g, opt.k, opt.fault, opt.max_edges);
    json j;
    j["value"] = res.value;
    j["witness"] = res.witness;
    return j;
}

}  // namespace spannerlab::cli

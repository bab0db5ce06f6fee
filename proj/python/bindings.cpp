// Copyright (c) spannerlab contributors.
// SPDX-License-Identifier: Apache-2.0
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spannerlab/errors.hpp"
#include "spannerlab/instances.hpp"
#include "spannerlab/io.hpp"
#include "spannerlab/rounding.hpp"
#include "spannerlab/rsp.hpp"
#include "spannerlab/spanner_lp.hpp"
#include "spannerlab/verify.hpp"

namespace py = pybind11;
using namespace spannerlab;

namespace {

FaultModel fault_model(const std::string& kind, int r) {
    if (kind == "vertex") return FaultModel{FaultKind::Vertex, r};
    if (kind == "edge") return FaultModel{FaultKind::Edge, r};
    throw std::invalid_argument("fault kind must be 'vertex' or 'edge'");
}

py::object json_to_py(const json& j) {
    auto loads = py::module_::import("json").attr("loads");
    return loads(j.dump());
}

RoundingConfig make_config(double k, std::uint64_t seed, int trials, double C, double C1,
                           double C2, double epsilon, std::optional<std::pair<std::string, int>> fault,
                           const std::string& mode, std::optional<int> sampling_rounds) {
    RoundingConfig cfg;
    cfg.k = k;
    cfg.seed = seed;
    cfg.trials = trials;
    cfg.C = C;
    cfg.C1 = C1;
    cfg.C2 = C2;
    cfg.epsilon = epsilon;
    if (fault) cfg.fault = fault_model(fault->first, fault->second);
    if (mode == "general")
        cfg.mode = RoundingMode::GeneralK;
    else if (mode == "3spanner")
        cfg.mode = RoundingMode::ThreeSpanner;
    else if (mode == "2spanner")
        cfg.mode = RoundingMode::TwoSpanner;
    else if (mode == "2spanner-bd")
        cfg.mode = RoundingMode::TwoSpannerBoundedDegree;
    else
        throw std::invalid_argument("unknown rounding mode: " + mode);
    cfg.sampling_rounds = sampling_rounds;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "flow-LP relaxations, randomized rounding and verification for directed k-spanners";

    py::register_exception<PathOverflow>(m, "PathOverflowError");
    py::register_exception<NoFeasiblePath>(m, "NoFeasiblePathError");
    py::register_exception<FaultBudgetTooLarge>(m, "FaultBudgetError");
    py::register_exception<TooLarge>(m, "TooLargeError");
    py::register_exception<Infeasible>(m, "InfeasibleError");
    py::register_exception<CertificateInfeasible>(m, "CertificateInfeasibleError");

    py::class_<DiGraph>(m, "DiGraph")
        .def(py::init([](int n, const std::vector<py::tuple>& edges) {
                 std::vector<EdgeSpec> specs;
                 for (const py::tuple& t : edges) {
                     EdgeSpec s;
                     s.src = t[0].cast<int>();
                     s.dst = t[1].cast<int>();
                     if (t.size() > 2) s.length = t[2].cast<double>();
                     if (t.size() > 3) s.cost = t[3].cast<double>();
                     specs.push_back(s);
                 }
                 return DiGraph(n, specs);
             }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &DiGraph::vertex_count)
        .def_property_readonly("m", &DiGraph::edge_count)
        .def_property_readonly("unit_length", &DiGraph::unit_length)
        .def("edges",
             [](const DiGraph& g) {
                 std::vector<py::tuple> out;
                 for (const Edge& e : g.edges())
                     out.push_back(py::make_tuple(e.src, e.dst, e.length, e.cost));
                 return out;
             })
        .def("edge_between", &DiGraph::edge_between)
        .def("__repr__", [](const DiGraph& g) {
            return "DiGraph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<FractionalSolution>(m, "FractionalSolution")
        .def_property_readonly("objective", [](const FractionalSolution& f) { return f.objective; })
        .def_property_readonly("x", [](const FractionalSolution& f) { return f.x; })
        .def_property_readonly("mode",
                               [](const FractionalSolution& f) {
                                   return f.mode == SolveMode::Exact ? "exact" : "colgen";
                               })
        .def_property_readonly("epsilon", [](const FractionalSolution& f) { return f.epsilon; })
        .def("to_dict", [](const FractionalSolution& f) { return json_to_py(to_json(f)); });

    py::class_<SpannerSolution>(m, "SpannerSolution")
        .def_property_readonly("edges", [](const SpannerSolution& s) { return s.edges; })
        .def_property_readonly("size", [](const SpannerSolution& s) { return s.size; })
        .def_property_readonly("cost", [](const SpannerSolution& s) { return s.cost; })
        .def_property_readonly("lp_objective",
                               [](const SpannerSolution& s) { return s.lp_objective; })
        .def_property_readonly("params", [](const SpannerSolution& s) { return s.params; })
        .def("to_dict", [](const SpannerSolution& s) { return json_to_py(to_json(s)); });

    py::class_<VerifyReport>(m, "VerifyReport")
        .def_property_readonly("valid", [](const VerifyReport& r) { return r.valid; })
        .def_property_readonly("stretch", [](const VerifyReport& r) { return r.realized_stretch; })
        .def_property_readonly("worst_edge", [](const VerifyReport& r) { return r.worst_edge; })
        .def_property_readonly("failing_fault",
                               [](const VerifyReport& r) { return r.failing_fault; })
        .def("to_dict", [](const VerifyReport& r) { return json_to_py(to_json(r)); });

    py::class_<GapInstance>(m, "GapInstance")
        .def_property_readonly("graph", [](const GapInstance& g) { return g.graph; })
        .def_property_readonly("certificate", [](const GapInstance& g) { return g.certificate; })
        .def_property_readonly("params", [](const GapInstance& g) { return g.params; })
        .def_property_readonly(
            "cost_bound", [](const GapInstance& g) { return g.predicted_fractional_cost_bound; })
        .def("certificate_dict",
             [](const GapInstance& g) { return json_to_py(gap_certificate_json(g)); });

    m.def("parse_graph", &parse_graph_string, py::arg("text"));
    m.def("format_graph", &format_graph, py::arg("graph"));
    m.def(
        "gen_random_digraph",
        [](int n, double p, std::uint64_t seed, double length_lo, double length_hi) {
            LengthModel lm = length_hi > 0 ? LengthModel::uniform(length_lo, length_hi)
                                           : LengthModel::unit();
            return gen_random_digraph(n, p, lm, seed);
        },
        py::arg("n"), py::arg("p"), py::arg("seed") = 0, py::arg("length_lo") = 0.0,
        py::arg("length_hi") = 0.0);

    m.def("solve_lp_exact", &solve_lp_exact, py::arg("graph"), py::arg("k"),
          py::arg("max_paths") = 100000);
    m.def("solve_lp_colgen", &solve_lp_colgen, py::arg("graph"), py::arg("k"), py::arg("epsilon"));
    m.def(
        "solve_ft_lp",
        [](const DiGraph& g, double k, const std::string& kind, int r, double epsilon, int r_max) {
            return solve_ft_lp(g, k, fault_model(kind, r), epsilon, r_max);
        },
        py::arg("graph"), py::arg("k"), py::arg("fault_kind"), py::arg("r"),
        py::arg("epsilon") = 0.0, py::arg("r_max") = 2);
    m.def(
        "check_fractional_feasibility",
        [](const DiGraph& g, double k, const std::vector<double>& x) -> py::object {
            auto verdict = check_fractional_feasibility(g, k, x);
            if (verdict.feasible) return py::make_tuple(true, py::none());
            py::dict viol;
            viol["demand"] = verdict.violation->demand;
            viol["cut"] = verdict.violation->y;
            viol["value"] = verdict.violation->value;
            return py::make_tuple(false, viol);
        },
        py::arg("graph"), py::arg("k"), py::arg("x"));
    m.def(
        "interdiction_oracle",
        [](const DiGraph& g, double k, const std::vector<double>& x, std::pair<int, int> demand,
           const std::string& kind, int r, double epsilon) {
            auto sol = interdiction_oracle(g, k, x, demand, fault_model(kind, r), epsilon);
            py::dict d;
            d["faults"] = sol.faults;
            d["y"] = sol.y;
            d["cut_value"] = sol.cut_value;
            d["budget_used"] = sol.fault_budget_used;
            d["lp_value"] = sol.lp_value;
            return d;
        },
        py::arg("graph"), py::arg("k"), py::arg("x"), py::arg("demand"), py::arg("fault_kind"),
        py::arg("r"), py::arg("epsilon"));

    const auto round_doc = "round a fractional solution; mode selects the scheme";
    m.def(
        "round_spanner",
        [](const DiGraph& g, const FractionalSolution& frac, const std::string& mode, double k,
           std::uint64_t seed, int trials, double C, double C1, double C2, double epsilon,
           std::optional<std::pair<std::string, int>> fault, std::optional<int> sampling_rounds) {
            RoundingConfig cfg = make_config(k, seed, trials, C, C1, C2, epsilon, fault, mode,
                                             sampling_rounds);
            const bool ft = cfg.fault && cfg.fault->r > 0;
            switch (cfg.mode) {
                case RoundingMode::GeneralK:
                    return ft ? round_general_k_ft(g, frac, cfg) : round_general_k(g, frac, cfg);
                case RoundingMode::ThreeSpanner:
                    return ft ? round_3spanner_ft(g, frac, cfg) : round_3spanner(g, frac, cfg);
                default:
                    return ft ? round_2spanner_ft(g, frac, cfg) : round_2spanner(g, frac, cfg);
            }
        },
        py::arg("graph"), py::arg("frac"), py::arg("mode"), py::arg("k"), py::arg("seed") = 0,
        py::arg("trials") = -1, py::arg("C") = -1.0, py::arg("C1") = 1.0, py::arg("C2") = 1.0,
        py::arg("epsilon") = 0.0, py::arg("fault") = py::none(),
        py::arg("sampling_rounds") = py::none(), round_doc);

    m.def("verify_spanner", &verify_spanner, py::arg("graph"), py::arg("k"), py::arg("edges"));
    m.def(
        "verify_ft",
        [](const DiGraph& g, double k, const std::vector<int>& edges, const std::string& kind,
           int r) { return verify_ft(g, k, edges, fault_model(kind, r)); },
        py::arg("graph"), py::arg("k"), py::arg("edges"), py::arg("fault_kind"), py::arg("r"));
    m.def(
        "brute_force_opt",
        [](const DiGraph& g, double k, std::optional<std::pair<std::string, int>> fault,
           int max_edges) {
            std::optional<FaultModel> fm;
            if (fault) fm = fault_model(fault->first, fault->second);
            auto res = brute_force_opt(g, k, fm, max_edges);
            return py::make_tuple(res.value, res.witness);
        },
        py::arg("graph"), py::arg("k"), py::arg("fault") = py::none(), py::arg("max_edges") = 14);

    m.def(
        "rsp",
        [](const DiGraph& g, int source, int target, double budget,
           const std::vector<double>& weights, double epsilon,
           const std::vector<int>& forbidden_vertices,
           const std::vector<int>& forbidden_edges) -> py::object {
            RSPQuery q{&g, source, target, budget, weights, forbidden_vertices, forbidden_edges,
                       epsilon};
            if (epsilon == 0.0) {
                auto res = rsp_exact_hop(q);
                if (!res) return py::none();
                return py::make_tuple(res->path.vertex_sequence(g), res->weight);
            }
            auto res = rsp_fptas(q);
            return py::make_tuple(res.path.vertex_sequence(g), res.weight);
        },
        py::arg("graph"), py::arg("source"), py::arg("target"), py::arg("budget"),
        py::arg("weights"), py::arg("epsilon") = 0.0,
        py::arg("forbidden_vertices") = std::vector<int>{},
        py::arg("forbidden_edges") = std::vector<int>{},
        "restricted shortest path: exact hop DP when epsilon=0, FPTAS otherwise");

    m.def(
        "gen_synthetic_minrep",
        [](int r, int q, std::uint64_t seed) {
            MinRepInstance mr = gen_synthetic_minrep(r, q, seed);
            py::dict d;
            d["group_count"] = mr.group_count;
            d["group_size"] = mr.group_size;
            d["matchings"] = mr.matchings;
            return d;
        },
        py::arg("r"), py::arg("q"), py::arg("seed") = 0);
    m.def(
        "build_minrep_gap_instance",
        [](int r, int q, int k, std::uint64_t seed) {
            return build_minrep_gap_instance(gen_synthetic_minrep(r, q, seed), k);
        },
        py::arg("r"), py::arg("q"), py::arg("k"), py::arg("seed") = 0);
    m.def("build_setcover_gap_instance", &build_setcover_gap_instance, py::arg("q"),
          py::arg("aux_count") = -1);
    m.def(
        "brute_force_setcover",
        [](int num_elements, const std::vector<std::uint64_t>& sets) {
            return brute_force_setcover(num_elements, sets);
        },
        py::arg("num_elements"), py::arg("sets"));
}

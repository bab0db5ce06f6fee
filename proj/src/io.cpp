// Copyright (c) spannerlab contributors.
// SPDX-License-Identifier: Apache-2.0
#include "spannerlab/io.hpp"

#include <fstream>
#include <sstream>

#include "spannerlab/errors.hpp"

namespace spannerlab {

DiGraph parse_graph(std::istream& in) {
    std::string line;
    int n = -1, m = -1;
    bool unit = false;
    std::vector<EdgeSpec> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok[0] == '#') continue;
        if (tok == "p") {
            if (n >= 0) throw ParseError("duplicate header at line " + std::to_string(lineno));
            std::string kind, mode;
            if (!(ls >> kind >> n >> m >> mode) || kind != "spanner")
                throw ParseError("malformed header at line " + std::to_string(lineno));
            if (mode == "unit")
                unit = true;
            else if (mode == "weighted")
                unit = false;
            else
                throw ParseError("header mode must be unit or weighted");
            if (n < 0 || m < 0) throw ParseError("negative sizes in header");
        } else if (tok == "a") {
            if (n < 0) throw ParseError("arc before header at line " + std::to_string(lineno));
            int src, dst;
            double length;
            if (!(ls >> src >> dst >> length))
                throw ParseError("malformed arc at line " + std::to_string(lineno));
            double cost = 1.0;
            ls >> cost;  // optional
            if (unit && length != 1.0)
                throw ParseError("unit-length header but arc length " + std::to_string(length) +
                                 " at line " + std::to_string(lineno));
            edges.push_back({src, dst, length, cost});
        } else {
            throw ParseError("unknown record '" + tok + "' at line " + std::to_string(lineno));
        }
    }
    if (n < 0) throw ParseError("missing header line");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError("header declares " + std::to_string(m) + " arcs, found " +
                         std::to_string(edges.size()));
    try {
        return DiGraph(n, edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

DiGraph parse_graph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

DiGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    return parse_graph(in);
}

std::string format_graph(const DiGraph& g) {
    std::ostringstream out;
    out << "p spanner " << g.vertex_count() << " " << g.edge_count() << " "
        << (g.unit_length() ? "unit" : "weighted") << "\n";
    out.precision(17);
    for (const Edge& e : g.edges()) {
        out << "a " << e.src << " " << e.dst << " " << e.length;
        if (e.cost != 1.0) out << " " << e.cost;
        out << "\n";
    }
    return out.str();
}

void save_graph(const DiGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file: " + path);
    out << format_graph(g);
}

json to_json(const FractionalSolution& frac) {
    json j;
    j["objective"] = frac.objective;
    json xs = json::array();
    for (std::size_t e = 0; e < frac.x.size(); ++e)
        xs.push_back({{"edge", e}, {"value", frac.x[e]}});
    j["x"] = std::move(xs);
    json flows = json::array();
    for (const DemandFlows& df : frac.flows) {
        json block;
        block["u"] = df.demand.first;
        block["v"] = df.demand.second;
        if (df.fault) block["fault"] = *df.fault;
        json paths = json::array();
        for (const FlowPath& p : df.paths)
            paths.push_back({{"vertices", p.vertices}, {"flow", p.flow}});
        block["paths"] = std::move(paths);
        flows.push_back(std::move(block));
    }
    j["flows"] = std::move(flows);
    j["mode"] = frac.mode == SolveMode::Exact ? "exact" : "colgen";
    j["epsilon"] = frac.epsilon;
    return j;
}

FractionalSolution fractional_from_json(const json& j, const DiGraph& g) {
    FractionalSolution frac;
    frac.objective = j.at("objective").get<double>();
    frac.x.assign(static_cast<std::size_t>(g.edge_count()), 0.0);
    for (const json& item : j.at("x")) {
        int e = item.at("edge").get<int>();
        if (e < 0 || e >= g.edge_count()) throw ParseError("capacity for unknown edge id");
        frac.x[static_cast<std::size_t>(e)] = item.at("value").get<double>();
    }
    for (const json& block : j.at("flows")) {
        DemandFlows df;
        df.demand = {block.at("u").get<int>(), block.at("v").get<int>()};
        if (block.contains("fault")) df.fault = block.at("fault").get<std::vector<int>>();
        for (const json& p : block.at("paths"))
            df.paths.push_back(
                FlowPath{p.at("vertices").get<std::vector<int>>(), p.at("flow").get<double>()});
        frac.flows.push_back(std::move(df));
    }
    frac.mode = j.at("mode").get<std::string>() == "exact" ? SolveMode::Exact : SolveMode::Colgen;
    frac.epsilon = j.at("epsilon").get<double>();
    return frac;
}

json to_json(const SpannerSolution& sol) {
    json j;
    j["edges"] = sol.edges;
    j["size"] = sol.size;
    j["cost"] = sol.cost;
    j["lp_objective"] = sol.lp_objective;
    json prov = json::array();
    for (std::size_t i = 0; i < sol.edges.size(); ++i)
        prov.push_back({{"edge", sol.edges[i]}, {"tag", sol.provenance[i]}});
    j["provenance"] = std::move(prov);
    j["seed"] = sol.seed;
    j["algorithm"] = sol.algorithm;
    j["params"] = sol.params;
    return j;
}

json to_json(const VerifyReport& rep) {
    json j;
    j["valid"] = rep.valid;
    j["worst_edge"] = {rep.worst_edge.first, rep.worst_edge.second};
    j["stretch"] = rep.realized_stretch == kInf ? json("inf") : json(rep.realized_stretch);
    if (rep.failing_fault) j["failing_fault"] = *rep.failing_fault;
    return j;
}

json gap_certificate_json(const GapInstance& gap) {
    json j = to_json(gap.certificate);
    json meta;
    meta["kind"] = gap.kind == GapKind::MinRepKSpanner ? "minrep_k_spanner" : "setcover_2spanner";
    meta["params"] = gap.params;
    meta["predicted_fractional_cost_bound"] = gap.predicted_fractional_cost_bound;
    meta["k"] = gap.certificate.k;
    if (gap.setcover_witness) {
        const SetCoverWitness& w = *gap.setcover_witness;
        meta["setcover"] = {{"num_elements", w.num_elements},
                            {"sets", w.sets},
                            {"aux_count", w.aux_count},
                            {"shared_edge_groups", w.shared_edge_groups}};
    }
    if (gap.minrep_witness) {
        const MinRepInstance& mr = *gap.minrep_witness;
        meta["minrep"] = {{"group_count", mr.group_count},
                          {"group_size", mr.group_size},
                          {"matchings", mr.matchings}};
    }
    j["meta"] = std::move(meta);
    return j;
}

GapInstance gap_from_files(const DiGraph& g, const json& certificate) {
    GapInstance gap;
    gap.graph = g;
    gap.certificate = fractional_from_json(certificate, g);
    if (!certificate.contains("meta"))
        throw ParseError("certificate file lacks the meta block");
    const json& meta = certificate.at("meta");
    gap.kind = meta.at("kind").get<std::string>() == "minrep_k_spanner"
                   ? GapKind::MinRepKSpanner
                   : GapKind::SetCover2Spanner;
    for (auto it = meta.at("params").begin(); it != meta.at("params").end(); ++it)
        gap.params[it.key()] = it.value().get<double>();
    gap.predicted_fractional_cost_bound =
        meta.at("predicted_fractional_cost_bound").get<double>();
    gap.certificate.k = meta.at("k").get<double>();
    if (meta.contains("setcover")) {
        SetCoverWitness w;
        const json& sc = meta.at("setcover");
        w.num_elements = sc.at("num_elements").get<int>();
        w.sets = sc.at("sets").get<std::vector<std::uint64_t>>();
        w.aux_count = sc.at("aux_count").get<int>();
        w.shared_edge_groups = sc.at("shared_edge_groups").get<std::vector<std::vector<int>>>();
        gap.setcover_witness = std::move(w);
    }
    if (meta.contains("minrep")) {
        MinRepInstance mr;
        const json& mm = meta.at("minrep");
        mr.group_count = mm.at("group_count").get<int>();
        mr.group_size = mm.at("group_size").get<int>();
        mr.matchings = mm.at("matchings").get<std::vector<std::vector<std::vector<int>>>>();
        gap.minrep_witness = std::move(mr);
    }
    return gap;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open json file: " + path);
    json j;
    in >> j;
    return j;
}

void save_json(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file: " + path);
    out << j.dump(2) << "\n";
}

}  // namespace spannerlab

// Copyright (c) spannerlab contributors.
// SPDX-License-Identifier: Apache-2.0
#include "spannerlab/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <stdexcept>

#include "spannerlab/errors.hpp"
#include "spannerlab/rng.hpp"

namespace spannerlab {

namespace {

constexpr std::uint64_t kStreamRoot = 0xA11CE;
constexpr std::uint64_t kStreamFail = 0xFA17;
constexpr std::uint64_t kStreamT = 0x7E57;
constexpr std::uint64_t kStreamT2 = 0x7E58;

struct EdgeCollector {
    std::map<int, std::string> tagged;

    void add(int edge, const std::string& tag) { tagged.emplace(edge, tag); }
    void add_all(const std::vector<int>& edges, const std::string& tag) {
        for (int e : edges) add(e, tag);
    }
};

SpannerSolution finish(const DiGraph& g, const FractionalSolution& frac,
                       const RoundingConfig& cfg, const char* algorithm,
                       const EdgeCollector& collect, std::map<std::string, double> params) {
    SpannerSolution out;
    out.seed = cfg.seed;
    out.algorithm = algorithm;
    out.lp_objective = frac.objective;
    out.params = std::move(params);
    for (const auto& [e, tag] : collect.tagged) {
        out.edges.push_back(e);
        out.provenance.push_back(tag);
        out.cost += g.edge(e).cost;
    }
    out.size = static_cast<double>(out.edges.size());
    return out;
}

void require_frac_shape(const DiGraph& g, const FractionalSolution& frac) {
    if (frac.x.size() != static_cast<std::size_t>(g.edge_count()))
        throw std::invalid_argument("fractional solution does not match the graph");
}

// Shortest-path arborescence in the masked subgraph; same tie-breaking as
// graph::arborescence.
std::vector<int> masked_arborescence(const DiGraph& g, int root, ArborescenceDirection dir,
                                     const std::vector<char>& vdead,
                                     const std::vector<char>& edead) {
    const int n = g.vertex_count();
    const bool out = dir == ArborescenceDirection::Out;
    std::vector<double> dist(static_cast<std::size_t>(n), kInf);
    if (vdead[static_cast<std::size_t>(root)]) return {};
    dist[static_cast<std::size_t>(root)] = 0.0;
    auto allowed = [&](const Edge& e) {
        return !edead[static_cast<std::size_t>(e.id)] && !vdead[static_cast<std::size_t>(e.src)] &&
               !vdead[static_cast<std::size_t>(e.dst)];
    };
    if (g.unit_length()) {
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int eid : out ? g.out_edges(v) : g.in_edges(v)) {
                const Edge& e = g.edge(eid);
                if (!allowed(e)) continue;
                int w = out ? e.dst : e.src;
                if (dist[static_cast<std::size_t>(w)] == kInf) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1.0;
                    q.push(w);
                }
            }
        }
    } else {
        using Item = std::pair<double, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        pq.push({0.0, root});
        std::vector<char> done(static_cast<std::size_t>(n), 0);
        while (!pq.empty()) {
            auto [d, v] = pq.top();
            pq.pop();
            if (done[static_cast<std::size_t>(v)]) continue;
            done[static_cast<std::size_t>(v)] = 1;
            for (int eid : out ? g.out_edges(v) : g.in_edges(v)) {
                const Edge& e = g.edge(eid);
                if (!allowed(e)) continue;
                int w = out ? e.dst : e.src;
                double nd = d + e.length;
                if (nd < dist[static_cast<std::size_t>(w)]) {
                    dist[static_cast<std::size_t>(w)] = nd;
                    pq.push({nd, w});
                }
            }
        }
    }
    std::vector<int> tree;
    for (int w = 0; w < n; ++w) {
        if (w == root || dist[static_cast<std::size_t>(w)] == kInf) continue;
        int best = -1;
        std::pair<int, int> best_key{0, 0};
        for (int eid : out ? g.in_edges(w) : g.out_edges(w)) {
            const Edge& e = g.edge(eid);
            if (!allowed(e)) continue;
            int pred = out ? e.src : e.dst;
            if (std::abs(dist[static_cast<std::size_t>(pred)] + e.length -
                         dist[static_cast<std::size_t>(w)]) <= 1e-9) {
                std::pair<int, int> key{pred, eid};
                if (best < 0 || key < best_key) {
                    best = eid;
                    best_key = key;
                }
            }
        }
        if (best >= 0) tree.push_back(best);
    }
    std::sort(tree.begin(), tree.end());
    return tree;
}

}  // namespace

bool three_spanner_e1_rule(double tu, double tu2, double tv, double tv2, double rho_x) {
    return std::min(std::min(tu, tu2), std::min(tv, tv2)) <= rho_x;
}

bool three_spanner_e2_rule(double tu, double tu2, double tv, double tv2, double rho_x) {
    return std::max(std::min(tu, tu2), std::min(tv, tv2)) <= std::sqrt(rho_x);
}

bool two_spanner_rule(double tu, double tv, double rho_x) {
    return std::min(tu, tv) <= rho_x;
}

double ft_general_threshold(int n, double k, int r) {
    const double kr = k + static_cast<double>(r);
    const double pow_kr = std::pow(kr, kr);
    const double r_pow = r == 0 ? 1.0 : std::pow(static_cast<double>(r), r);
    const double k_pow = std::pow(k, k);
    const double a =
        2.0 * (2.0 * r + 2.0) * pow_kr * n * std::log(static_cast<double>(n)) / (r_pow * k_pow);
    if (!std::isfinite(pow_kr) || !std::isfinite(a))
        throw ParameterOverflow("(k+r)^(k+r) exceeds double range; shrink k or r");
    return std::pow(a, 2.0 / 3.0);
}

SpannerSolution round_general_k(const DiGraph& g, const FractionalSolution& frac,
                                const RoundingConfig& cfg) {
    require_frac_shape(g, frac);
    const int n = g.vertex_count();
    EdgeCollector collect;
    if (n < 2) return finish(g, frac, cfg, "general_k", collect, {});

    const double tau = std::pow(3.0 * n * std::log(n), 2.0 / 3.0);
    const double threshold = 1.0 / tau;
    const int rounds = cfg.sampling_rounds.value_or(static_cast<int>(std::ceil(tau)));

    double capacity_mass = 0.0;
    for (double v : frac.x) capacity_mass += v;
    int threshold_count = 0;
    for (const Edge& e : g.edges()) {
        if (frac.x[static_cast<std::size_t>(e.id)] >= threshold - 1e-12) {
            collect.add(e.id, "threshold");
            ++threshold_count;
        }
    }
    // Deterministic consequence of the construction, not a probabilistic event.
    if (static_cast<double>(threshold_count) > capacity_mass * tau * (1.0 + 1e-9) + 1e-6)
        throw NumericalFailure("threshold size accounting violated");

    int sample_edges = 0;
    for (int i = 1; i <= rounds; ++i) {
        const int root = rng::uniform_index(cfg.seed, kStreamRoot, static_cast<std::uint64_t>(i),
                                            static_cast<std::uint64_t>(n));
        const std::string tag = "arborescence(" + std::to_string(i) + "," + std::to_string(root) + ")";
        auto in_tree = arborescence(g, root, ArborescenceDirection::In);
        auto out_tree = arborescence(g, root, ArborescenceDirection::Out);
        if (static_cast<int>(in_tree.size()) > n - 1 || static_cast<int>(out_tree.size()) > n - 1)
            throw NumericalFailure("arborescence size accounting violated");
        sample_edges += static_cast<int>(in_tree.size() + out_tree.size());
        collect.add_all(in_tree, tag);
        collect.add_all(out_tree, tag);
    }

    return finish(g, frac, cfg, "general_k", collect,
                  {{"tau", tau},
                   {"threshold", threshold},
                   {"rounds", static_cast<double>(rounds)},
                   {"threshold_count", static_cast<double>(threshold_count)},
                   {"sample_edge_count", static_cast<double>(sample_edges)},
                   {"capacity_mass", capacity_mass}});
}

SpannerSolution round_general_k_ft(const DiGraph& g, const FractionalSolution& frac,
                                   const RoundingConfig& cfg) {
    require_frac_shape(g, frac);
    if (!cfg.fault) throw std::invalid_argument("fault model required");
    if (!g.unit_length()) throw std::invalid_argument("failure sampling requires unit lengths");
    const int n = g.vertex_count();
    const int r = cfg.fault->r;
    const double k = cfg.k;
    EdgeCollector collect;
    if (n < 2) return finish(g, frac, cfg, "general_k_ft", collect, {});

    const double t = ft_general_threshold(n, k, r);
    const double p = r == 0 ? 0.0 : static_cast<double>(r) / (k + static_cast<double>(r));
    const int rounds = cfg.sampling_rounds.value_or(static_cast<int>(std::ceil(t)));
    const double threshold = 1.0 / t;

    double capacity_mass = 0.0;
    for (double v : frac.x) capacity_mass += v;
    int threshold_count = 0;
    for (const Edge& e : g.edges()) {
        if (frac.x[static_cast<std::size_t>(e.id)] >= threshold - 1e-12) {
            collect.add(e.id, "threshold");
            ++threshold_count;
        }
    }
    if (static_cast<double>(threshold_count) > capacity_mass * t * (1.0 + 1e-9) + 1e-6)
        throw NumericalFailure("threshold size accounting violated");

    const bool vertex_faults = cfg.fault->kind == FaultKind::Vertex;
    int sample_edges = 0;
    for (int i = 1; i <= rounds; ++i) {
        std::vector<char> vdead(static_cast<std::size_t>(n), 0);
        std::vector<char> edead(static_cast<std::size_t>(g.edge_count()), 0);
        if (vertex_faults) {
            for (int v = 0; v < n; ++v)
                if (rng::uniform01(cfg.seed, kStreamFail, static_cast<std::uint64_t>(i),
                                   static_cast<std::uint64_t>(v)) < p)
                    vdead[static_cast<std::size_t>(v)] = 1;
        } else {
            for (int e = 0; e < g.edge_count(); ++e)
                if (rng::uniform01(cfg.seed, kStreamFail, static_cast<std::uint64_t>(i),
                                   static_cast<std::uint64_t>(e)) < p)
                    edead[static_cast<std::size_t>(e)] = 1;
        }
        std::vector<int> alive;
        for (int v = 0; v < n; ++v)
            if (!vdead[static_cast<std::size_t>(v)]) alive.push_back(v);
        if (alive.empty()) continue;
        const int root = alive[static_cast<std::size_t>(rng::uniform_index(
            cfg.seed, kStreamRoot, static_cast<std::uint64_t>(i),
            static_cast<std::uint64_t>(alive.size())))];
        const std::string tag = "arborescence(" + std::to_string(i) + "," + std::to_string(root) + ")";
        auto in_tree = masked_arborescence(g, root, ArborescenceDirection::In, vdead, edead);
        auto out_tree = masked_arborescence(g, root, ArborescenceDirection::Out, vdead, edead);
        if (static_cast<int>(in_tree.size()) > n - 1 || static_cast<int>(out_tree.size()) > n - 1)
            throw NumericalFailure("arborescence size accounting violated");
        sample_edges += static_cast<int>(in_tree.size() + out_tree.size());
        collect.add_all(in_tree, tag);
        collect.add_all(out_tree, tag);
    }

    return finish(g, frac, cfg, "general_k_ft", collect,
                  {{"t", t},
                   {"p", p},
                   {"rounds", static_cast<double>(rounds)},
                   {"threshold", threshold},
                   {"threshold_count", static_cast<double>(threshold_count)},
                   {"sample_edge_count", static_cast<double>(sample_edges)},
                   {"capacity_mass", capacity_mass},
                   {"r", static_cast<double>(r)}});
}

namespace {

SpannerSolution run_vertex_threshold_trials(const DiGraph& g, const FractionalSolution& frac,
                                            const RoundingConfig& cfg, const char* algorithm,
                                            double rho, int trials) {
    EdgeCollector collect;
    const int n = g.vertex_count();
    for (int trial = 1; trial <= trials; ++trial) {
        std::vector<double> t1(static_cast<std::size_t>(n)), t2(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            t1[static_cast<std::size_t>(v)] = rng::uniform01(
                cfg.seed, kStreamT, static_cast<std::uint64_t>(trial), static_cast<std::uint64_t>(v));
            t2[static_cast<std::size_t>(v)] = rng::uniform01(
                cfg.seed, kStreamT2, static_cast<std::uint64_t>(trial), static_cast<std::uint64_t>(v));
        }
        for (const Edge& e : g.edges()) {
            const double rx = rho * frac.x[static_cast<std::size_t>(e.id)];
            const double tu = t1[static_cast<std::size_t>(e.src)];
            const double tu2 = t2[static_cast<std::size_t>(e.src)];
            const double tv = t1[static_cast<std::size_t>(e.dst)];
            const double tv2 = t2[static_cast<std::size_t>(e.dst)];
            if (three_spanner_e1_rule(tu, tu2, tv, tv2, rx))
                collect.add(e.id, "E1");
            else if (three_spanner_e2_rule(tu, tu2, tv, tv2, rx))
                collect.add(e.id, "E2");
        }
    }
    return finish(g, frac, cfg, algorithm, collect,
                  {{"rho", rho}, {"trials", static_cast<double>(trials)}});
}

}  // namespace

SpannerSolution round_3spanner(const DiGraph& g, const FractionalSolution& frac,
                               const RoundingConfig& cfg) {
    require_frac_shape(g, frac);
    if (!g.unit_length()) throw std::invalid_argument("3-spanner rounding requires unit lengths");
    if (cfg.k != 3.0) throw std::invalid_argument("3-spanner rounding requires k = 3");
    const int n = g.vertex_count();
    const double C = cfg.C > 0 ? cfg.C : 1.0;
    const double rho = C * std::sqrt(static_cast<double>(n)) * std::log(std::max(n, 2));
    const int trials =
        cfg.trials > 0 ? cfg.trials : static_cast<int>(std::ceil(2.0 * std::log(std::max(n, 2))));
    return run_vertex_threshold_trials(g, frac, cfg, "3spanner", rho, std::max(trials, 1));
}

SpannerSolution round_3spanner_ft(const DiGraph& g, const FractionalSolution& frac,
                                  const RoundingConfig& cfg) {
    require_frac_shape(g, frac);
    if (!cfg.fault) throw std::invalid_argument("fault model required");
    if (!g.unit_length()) throw std::invalid_argument("3-spanner rounding requires unit lengths");
    if (cfg.k != 3.0) throw std::invalid_argument("3-spanner rounding requires k = 3");
    const int n = g.vertex_count();
    const int r = cfg.fault->r;
    const double factor =
        cfg.fault->kind == FaultKind::Edge ? 2.0 * r + 2.0 : static_cast<double>(r) + 2.0;
    const int trials = cfg.trials > 0
                           ? cfg.trials
                           : static_cast<int>(std::ceil(cfg.C1 * factor * std::log(std::max(n, 2))));
    const double rho = cfg.C2 * std::sqrt(static_cast<double>(n)) * std::log(std::max(n, 2));
    auto sol = run_vertex_threshold_trials(g, frac, cfg, "3spanner_ft", rho, std::max(trials, 1));
    sol.params["r"] = static_cast<double>(r);
    return sol;
}

namespace {

SpannerSolution run_two_spanner(const DiGraph& g, const FractionalSolution& frac,
                                const RoundingConfig& cfg, const char* algorithm, double rho) {
    EdgeCollector collect;
    const int n = g.vertex_count();
    std::vector<double> t1(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        t1[static_cast<std::size_t>(v)] =
            rng::uniform01(cfg.seed, kStreamT, 1, static_cast<std::uint64_t>(v));
    for (const Edge& e : g.edges()) {
        if (two_spanner_rule(t1[static_cast<std::size_t>(e.src)],
                             t1[static_cast<std::size_t>(e.dst)],
                             rho * frac.x[static_cast<std::size_t>(e.id)]))
            collect.add(e.id, "E1");
    }
    return finish(g, frac, cfg, algorithm, collect, {{"rho", rho}});
}

}  // namespace

SpannerSolution round_2spanner(const DiGraph& g, const FractionalSolution& frac,
                               const RoundingConfig& cfg) {
    require_frac_shape(g, frac);
    if (cfg.k != 2.0) throw std::invalid_argument("2-spanner rounding requires k = 2");
    const int n = g.vertex_count();
    const double C = cfg.C > 0 ? cfg.C : 6.0;
    double rho;
    if (cfg.mode == RoundingMode::TwoSpannerBoundedDegree) {
        int max_deg = 2;
        for (int v = 0; v < n; ++v)
            max_deg = std::max({max_deg, static_cast<int>(g.out_edges(v).size()),
                                static_cast<int>(g.in_edges(v).size())});
        rho = C * std::log(static_cast<double>(max_deg));
    } else {
        rho = C * std::log(std::max(n, 2));
    }
    return run_two_spanner(g, frac, cfg, "2spanner", rho);
}

SpannerSolution round_2spanner_ft(const DiGraph& g, const FractionalSolution& frac,
                                  const RoundingConfig& cfg) {
    require_frac_shape(g, frac);
    if (!cfg.fault) throw std::invalid_argument("fault model required");
    if (!g.unit_length()) throw std::invalid_argument("FT 2-spanner rounding requires unit lengths");
    if (cfg.k != 2.0) throw std::invalid_argument("2-spanner rounding requires k = 2");
    const int n = g.vertex_count();
    const double C = cfg.C > 0 ? cfg.C : 6.0;
    const double r_factor = std::max(cfg.fault->r, 1);
    const double rho = C * r_factor * std::log(std::max(n, 2));
    auto sol = run_two_spanner(g, frac, cfg, "2spanner_ft", rho);
    sol.params["r"] = static_cast<double>(cfg.fault->r);
    return sol;
}

}  // namespace spannerlab

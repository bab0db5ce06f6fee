// Copyright (c) spannerlab contributors.
// SPDX-License-Identifier: Apache-2.0
#include "spannerlab/spanner_lp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include <cstdio>
#include <cstdlib>

#include "spannerlab/errors.hpp"
#include "spannerlab/lp.hpp"
#include "spannerlab/rsp.hpp"
#include "spannerlab/rng.hpp"
#include "spannerlab/subsets.hpp"

namespace spannerlab {

namespace {

// Cut/column separation slack. It must sit above the master's dual accuracy
// (pricing tolerance plus cost jitter), or the tail of cut generation
// ping-pongs on blocks the master already satisfies to within its own
// arithmetic; the final uniform scale-up restores exact unit coverage.
constexpr double kSepTol = 5e-7;
constexpr double kFeasTol = 1e-6;   // feasibility verdict threshold
constexpr int kMaxCutRounds = 2000;

std::vector<Demand> demand_list(const DiGraph& g) {
    std::vector<Demand> d;
    d.reserve(static_cast<std::size_t>(g.edge_count()));
    for (const Edge& e : g.edges()) d.push_back({e.src, e.dst});
    return d;
}

double demand_budget(const DiGraph& g, Demand d, double k) {
    auto dist = shortest_distances(g, d.first);
    return k * dist[static_cast<std::size_t>(d.second)];
}

// Min-weight stretch path oracle shared by the cut machinery: exact hop DP on
// unit graphs, Pareto labels otherwise. `budget` is the length budget.
std::optional<RSPResult> min_weight_stretch_path(const DiGraph& g, Demand d, double budget,
                                                 const std::vector<double>& weights,
                                                 const std::vector<int>& forbidden_vertices,
                                                 const std::vector<int>& forbidden_edges) {
    RSPQuery q;
    q.g = &g;
    q.source = d.first;
    q.target = d.second;
    q.budget = budget;
    q.weight = weights;
    q.forbidden_vertices = forbidden_vertices;
    q.forbidden_edges = forbidden_edges;
    if (g.unit_length()) return rsp_exact_hop(q);
    return rsp_exact_pareto(q);
}

// Hop-oblivious max flow under capacities x (Edmonds-Karp), early exit once
// the value reaches `enough`. When the value stays short, the reachable-side
// mincut is a valid fractional cut for every path system of the demand.
struct StdFlowResult {
    double value = 0.0;
    std::vector<int> cut_edges;      // filled only when value < enough
    std::vector<double> edge_flow;   // the flow itself, for hop peeling
};

StdFlowResult standard_maxflow(const DiGraph& g, Demand d, const std::vector<double>& x,
                               const std::vector<int>& forbidden_vertices,
                               const std::vector<int>& forbidden_edges, double enough) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::vector<char> vdead(static_cast<std::size_t>(n), 0);
    std::vector<char> edead(static_cast<std::size_t>(m), 0);
    for (int v : forbidden_vertices) vdead[static_cast<std::size_t>(v)] = 1;
    for (int e : forbidden_edges) edead[static_cast<std::size_t>(e)] = 1;
    StdFlowResult out;
    if (vdead[static_cast<std::size_t>(d.first)] || vdead[static_cast<std::size_t>(d.second)])
        return out;
    std::vector<double> flow(static_cast<std::size_t>(m), 0.0);
    auto residual_fwd = [&](int e) { return x[static_cast<std::size_t>(e)] - flow[static_cast<std::size_t>(e)]; };
    std::vector<int> pred_edge(static_cast<std::size_t>(n));
    std::vector<char> pred_back(static_cast<std::size_t>(n));
    while (out.value < enough) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<int> queue{d.first};
        seen[static_cast<std::size_t>(d.first)] = 1;
        for (std::size_t qi = 0; qi < queue.size() && !seen[static_cast<std::size_t>(d.second)]; ++qi) {
            int v = queue[qi];
            for (int eid : g.out_edges(v)) {
                const Edge& e = g.edge(eid);
                if (edead[static_cast<std::size_t>(eid)] || vdead[static_cast<std::size_t>(e.dst)]) continue;
                if (seen[static_cast<std::size_t>(e.dst)] || residual_fwd(eid) <= 1e-12) continue;
                seen[static_cast<std::size_t>(e.dst)] = 1;
                pred_edge[static_cast<std::size_t>(e.dst)] = eid;
                pred_back[static_cast<std::size_t>(e.dst)] = 0;
                queue.push_back(e.dst);
            }
            for (int eid : g.in_edges(v)) {
                const Edge& e = g.edge(eid);
                if (edead[static_cast<std::size_t>(eid)] || vdead[static_cast<std::size_t>(e.src)]) continue;
                if (seen[static_cast<std::size_t>(e.src)] || flow[static_cast<std::size_t>(eid)] <= 1e-12) continue;
                seen[static_cast<std::size_t>(e.src)] = 1;
                pred_edge[static_cast<std::size_t>(e.src)] = eid;
                pred_back[static_cast<std::size_t>(e.src)] = 1;
                queue.push_back(e.src);
            }
        }
        if (!seen[static_cast<std::size_t>(d.second)]) {
            for (const Edge& e : g.edges()) {
                if (edead[static_cast<std::size_t>(e.id)] || vdead[static_cast<std::size_t>(e.src)] ||
                    vdead[static_cast<std::size_t>(e.dst)])
                    continue;
                if (seen[static_cast<std::size_t>(e.src)] && !seen[static_cast<std::size_t>(e.dst)])
                    out.cut_edges.push_back(e.id);
            }
            out.edge_flow = std::move(flow);
            return out;
        }
        double aug = kInf;
        for (int v = d.second; v != d.first;) {
            int eid = pred_edge[static_cast<std::size_t>(v)];
            if (pred_back[static_cast<std::size_t>(v)]) {
                aug = std::min(aug, flow[static_cast<std::size_t>(eid)]);
                v = g.edge(eid).dst;
            } else {
                aug = std::min(aug, residual_fwd(eid));
                v = g.edge(eid).src;
            }
        }
        aug = std::min(aug, enough - out.value);
        for (int v = d.second; v != d.first;) {
            int eid = pred_edge[static_cast<std::size_t>(v)];
            if (pred_back[static_cast<std::size_t>(v)]) {
                flow[static_cast<std::size_t>(eid)] -= aug;
                v = g.edge(eid).dst;
            } else {
                flow[static_cast<std::size_t>(eid)] += aug;
                v = g.edge(eid).src;
            }
        }
        out.value += aug;
    }
    out.edge_flow = std::move(flow);
    return out;
}

// Greedy shortest-first peeling of a flow into paths; returns true when at
// least `need` units decompose into paths of at most `hops` edges. Sufficient
// (not necessary) for hop-bounded feasibility, so failures fall back to the
// exact cut LP.
bool peels_within_hops(const DiGraph& g, Demand d, std::vector<double> flow, int hops,
                       double need) {
    const int n = g.vertex_count();
    double peeled = 0.0;
    std::vector<int> pred(static_cast<std::size_t>(n));
    while (peeled < need) {
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        std::vector<int> queue{d.first};
        dist[static_cast<std::size_t>(d.first)] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            if (v == d.second) break;
            for (int eid : g.out_edges(v)) {
                const Edge& e = g.edge(eid);
                if (flow[static_cast<std::size_t>(eid)] <= 1e-12) continue;
                if (dist[static_cast<std::size_t>(e.dst)] >= 0) continue;
                dist[static_cast<std::size_t>(e.dst)] = dist[static_cast<std::size_t>(v)] + 1;
                pred[static_cast<std::size_t>(e.dst)] = eid;
                queue.push_back(e.dst);
            }
        }
        if (dist[static_cast<std::size_t>(d.second)] < 0) return false;
        if (dist[static_cast<std::size_t>(d.second)] > hops) return false;
        double aug = kInf;
        for (int v = d.second; v != d.first; v = g.edge(pred[static_cast<std::size_t>(v)]).src)
            aug = std::min(aug, flow[static_cast<std::size_t>(pred[static_cast<std::size_t>(v)])]);
        aug = std::min(aug, need - peeled);
        for (int v = d.second; v != d.first; v = g.edge(pred[static_cast<std::size_t>(v)]).src)
            flow[static_cast<std::size_t>(pred[static_cast<std::size_t>(v)])] -= aug;
        peeled += aug;
    }
    return true;
}

struct DemandCut {
    double value = 0.0;
    std::vector<std::pair<int, double>> y;  // sparse, sorted by edge id
};

// Path-row pool for one demand, persisted across cut-generation rounds.
struct CutRowPool {
    std::vector<std::vector<int>> rows;  // paths as edge-id lists
    std::set<std::vector<int>> seen;
    // Variable ids: edges appearing in the pool (the cut LP only needs those).
    std::vector<int> support;
    std::map<int, int> support_index;

    void add_path(const std::vector<int>& path) {
        if (!seen.insert(path).second) return;
        rows.push_back(path);
        for (int e : path) {
            if (support_index.emplace(e, static_cast<int>(support.size())).second)
                support.push_back(e);
        }
    }
};

// Max-min capacity over stretch-budget paths, exact hop DP (unit graphs).
// A bottleneck of 1 certifies feasibility without solving the cut LP.
double bottleneck_capacity(const DiGraph& g, Demand d, int hops, const std::vector<double>& x,
                           const std::vector<int>& forbidden_vertices,
                           const std::vector<int>& forbidden_edges) {
    const int n = g.vertex_count();
    std::vector<char> vdead(static_cast<std::size_t>(n), 0);
    std::vector<char> edead(static_cast<std::size_t>(g.edge_count()), 0);
    for (int v : forbidden_vertices) vdead[static_cast<std::size_t>(v)] = 1;
    for (int e : forbidden_edges) edead[static_cast<std::size_t>(e)] = 1;
    if (vdead[static_cast<std::size_t>(d.first)] || vdead[static_cast<std::size_t>(d.second)])
        return 0.0;
    std::vector<double> cur(static_cast<std::size_t>(n), -1.0);
    cur[static_cast<std::size_t>(d.first)] = kInf;
    for (int j = 0; j < hops; ++j) {
        std::vector<double> nxt = cur;
        for (const Edge& e : g.edges()) {
            if (edead[static_cast<std::size_t>(e.id)] || vdead[static_cast<std::size_t>(e.src)] ||
                vdead[static_cast<std::size_t>(e.dst)])
                continue;
            double through = std::min(cur[static_cast<std::size_t>(e.src)],
                                      x[static_cast<std::size_t>(e.id)]);
            if (through > nxt[static_cast<std::size_t>(e.dst)])
                nxt[static_cast<std::size_t>(e.dst)] = through;
        }
        cur = std::move(nxt);
    }
    return std::max(0.0, cur[static_cast<std::size_t>(d.second)]);
}

// Min fractional cut for one demand against capacities x, by lazy path-row
// generation on the pool. The returned y covers every stretch-budget path
// (oracle-certified).
DemandCut min_fractional_cut_pooled(const DiGraph& g, Demand d, double budget,
                                    const std::vector<double>& x, CutRowPool& pool,
                                    const std::vector<int>& forbidden_vertices = {},
                                    const std::vector<int>& forbidden_edges = {}) {
    if (pool.rows.empty()) {
        auto first = min_weight_stretch_path(g, d, budget,
                                             std::vector<double>(static_cast<std::size_t>(g.edge_count()), 0.0),
                                             forbidden_vertices, forbidden_edges);
        if (!first) throw std::invalid_argument("demand has no stretch path");
        pool.add_path(first->path.edge_ids);
    }
    std::vector<double> yfull(static_cast<std::size_t>(g.edge_count()), 0.0);
    double value = 0.0;
    for (int round = 0;; ++round) {
        if (round > kMaxCutRounds) throw NumericalFailure("cut generation did not converge");
        LinearProgram lp(static_cast<int>(pool.support.size()));
        for (std::size_t s = 0; s < pool.support.size(); ++s)
            lp.set_objective(static_cast<int>(s),
                             x[static_cast<std::size_t>(pool.support[s])]);
        for (const auto& path : pool.rows) {
            std::vector<int> idx;
            idx.reserve(path.size());
            for (int e : path) idx.push_back(pool.support_index.at(e));
            lp.add_row(std::move(idx), std::vector<double>(path.size(), 1.0), Sense::GE, 1.0);
        }
        LPSolution sol = solve_lp(lp);
        if (sol.status != LPStatus::Optimal) throw NumericalFailure("cut LP not optimal");
        std::fill(yfull.begin(), yfull.end(), 0.0);
        for (std::size_t s = 0; s < pool.support.size(); ++s)
            yfull[static_cast<std::size_t>(pool.support[s])] = std::max(0.0, sol.x[s]);
        value = sol.objective;
        auto res = min_weight_stretch_path(g, d, budget, yfull, forbidden_vertices,
                                           forbidden_edges);
        if (!res) throw NumericalFailure("demand lost all stretch paths during cut generation");
        if (res->weight >= 1.0 - kSepTol) break;
        std::size_t before = pool.rows.size();
        pool.add_path(res->path.edge_ids);
        if (pool.rows.size() == before) break;  // fp-level repeat
    }
    DemandCut cut;
    cut.value = value;
    for (int e = 0; e < g.edge_count(); ++e)
        if (yfull[static_cast<std::size_t>(e)] > 0.0)
            cut.y.push_back({e, yfull[static_cast<std::size_t>(e)]});
    return cut;
}

DemandCut min_fractional_cut(const DiGraph& g, Demand d, double budget,
                             const std::vector<double>& x,
                             const std::vector<int>& forbidden_vertices = {},
                             const std::vector<int>& forbidden_edges = {}) {
    CutRowPool pool;
    auto direct = g.edge_between(d.first, d.second);
    if (!direct) throw std::invalid_argument("demand is not an edge");
    pool.add_path({*direct});
    return min_fractional_cut_pooled(g, d, budget, x, pool, forbidden_vertices, forbidden_edges);
}

// Max flow over stretch-budget paths under per-edge caps, by lazy path
// columns; returns the flow decomposition.
std::vector<FlowPath> max_flow_decomposition(const DiGraph& g, Demand d, double budget,
                                             const std::vector<double>& x,
                                             const std::vector<int>& forbidden_vertices = {},
                                             const std::vector<int>& forbidden_edges = {}) {
    std::vector<std::vector<int>> pool;
    std::set<std::vector<int>> seen;
    {
        auto direct = g.edge_between(d.first, d.second);
        if (!direct) throw std::invalid_argument("demand is not an edge");
        pool.push_back({*direct});
        seen.insert(pool.back());
    }
    std::vector<double> flows;
    for (int round = 0;; ++round) {
        if (round > kMaxCutRounds) throw NumericalFailure("flow generation did not converge");
        // Edge rows for every edge used by the pool.
        std::map<int, int> edge_row;  // edge id -> row index
        for (const auto& p : pool)
            for (int e : p) edge_row.emplace(e, 0);
        int idx = 0;
        for (auto& [e, r] : edge_row) r = idx++;

        LinearProgram lp(static_cast<int>(pool.size()));
        std::vector<std::vector<int>> row_members(edge_row.size());
        for (std::size_t pi = 0; pi < pool.size(); ++pi) {
            lp.set_objective(static_cast<int>(pi), -1.0);  // maximize total flow
            for (int e : pool[pi]) row_members[static_cast<std::size_t>(edge_row[e])].push_back(static_cast<int>(pi));
        }
        std::vector<int> row_edge(edge_row.size());
        for (auto& [e, r] : edge_row) row_edge[static_cast<std::size_t>(r)] = e;
        for (std::size_t r = 0; r < row_members.size(); ++r) {
            std::vector<double> val(row_members[r].size(), 1.0);
            lp.add_row(row_members[r], val, Sense::LE,
                       x[static_cast<std::size_t>(row_edge[r])]);
        }
        LPSolution sol = solve_lp(lp);
        if (sol.status != LPStatus::Optimal) throw NumericalFailure("flow LP not optimal");
        flows = sol.x;

        // Price a new path: edge prices are -dual (>= 0) on existing rows.
        std::vector<double> price(static_cast<std::size_t>(g.edge_count()), 0.0);
        for (std::size_t r = 0; r < row_edge.size(); ++r)
            price[static_cast<std::size_t>(row_edge[r])] =
                std::max(0.0, -sol.dual[static_cast<std::size_t>(r)]);
        auto res = min_weight_stretch_path(g, d, budget, price, forbidden_vertices, forbidden_edges);
        if (!res) throw NumericalFailure("demand lost all stretch paths during flow recovery");
        if (res->weight >= 1.0 - kSepTol) break;
        if (!seen.insert(res->path.edge_ids).second) break;
        pool.push_back(res->path.edge_ids);
    }
    std::vector<FlowPath> out;
    for (std::size_t pi = 0; pi < pool.size(); ++pi) {
        if (flows[pi] <= 1e-12) continue;
        Path p{d, pool[pi], 0.0};
        out.push_back(FlowPath{p.vertex_sequence(g), flows[pi]});
    }
    return out;
}

double capacity_cost(const DiGraph& g, const std::vector<double>& x) {
    double obj = 0.0;
    for (const Edge& e : g.edges()) obj += e.cost * x[static_cast<std::size_t>(e.id)];
    return obj;
}

}  // namespace

int unit_hop_budget(double k) { return static_cast<int>(std::floor(k + 1e-9)); }

FeasibilityVerdict check_fractional_feasibility(const DiGraph& g, double k,
                                                const std::vector<double>& x) {
    if (x.size() != static_cast<std::size_t>(g.edge_count()))
        throw std::invalid_argument("capacity vector size mismatch");
    for (double v : x)
        if (!(v >= 0.0)) throw std::invalid_argument("capacities must be nonnegative");
    FeasibilityVerdict verdict;
    for (Demand d : demand_list(g)) {
        double budget = g.unit_length() ? static_cast<double>(unit_hop_budget(k))
                                        : demand_budget(g, d, k);
        DemandCut cut = min_fractional_cut(g, d, budget, x);
        if (cut.value < 1.0 - kFeasTol) {
            verdict.feasible = false;
            verdict.violation = CutCertificate{d, cut.y, cut.value};
            return verdict;
        }
    }
    verdict.feasible = true;
    return verdict;
}

namespace {

// One (fault set, demand) subproblem of the exact cutting-plane solver.
struct ExactBlock {
    Demand demand;
    double budget = 0.0;
    std::vector<int> forbidden_vertices;
    std::vector<int> forbidden_edges;
    std::optional<std::vector<int>> fault_label;
};

// Cutting plane over the capacity space, solved through the packing dual:
// columns are certified fractional cuts, edge rows carry the costs, and the
// row duals recover the capacities. Separation and flow recovery both price
// stretch paths through the restricted-shortest-path oracle per block.
FractionalSolution solve_blocks_exact(const DiGraph& g, double k,
                                      const std::vector<ExactBlock>& blocks) {
    const int m = g.edge_count();
    struct StoredCut {
        std::vector<std::pair<int, double>> y;
        int last_active = 0;
    };
    std::vector<StoredCut> cuts;
    std::vector<double> x(static_cast<std::size_t>(m), 0.0);
    std::vector<CutRowPool> pools(blocks.size());
    const bool unit = g.unit_length();
    // Anti-degeneracy jitter on the master costs; relative 1e-8 disappears
    // inside every downstream tolerance but breaks the massive ratio ties a
    // unit-cost packing master otherwise produces.
    std::vector<double> jittered_cost(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e)
        jittered_cost[static_cast<std::size_t>(e)] =
            g.edge(e).cost *
            (1.0 + 1e-8 * rng::to_unit(rng::splitmix64(0x5eedULL + static_cast<std::uint64_t>(e))));

    // Seed with the degree cuts: every path of a (fault-masked) demand leaves
    // its source and enters its target, so those edge stars are valid cuts.
    // Starting from x=0 instead would make the first separation sweep
    // enumerate whole path sets to certify worthless cuts.
    {
        std::set<std::vector<std::pair<int, double>>> seen_cuts;
        for (const ExactBlock& b : blocks) {
            std::vector<char> edead(static_cast<std::size_t>(m), 0);
            std::vector<char> vdead(static_cast<std::size_t>(g.vertex_count()), 0);
            for (int e : b.forbidden_edges) edead[static_cast<std::size_t>(e)] = 1;
            for (int v : b.forbidden_vertices) vdead[static_cast<std::size_t>(v)] = 1;
            auto star = [&](const std::vector<int>& edges, bool out) {
                std::vector<std::pair<int, double>> cut;
                for (int eid : edges) {
                    const Edge& e = g.edge(eid);
                    if (edead[static_cast<std::size_t>(eid)] ||
                        vdead[static_cast<std::size_t>(e.src)] ||
                        vdead[static_cast<std::size_t>(e.dst)])
                        continue;
                    (void)out;
                    cut.push_back({eid, 1.0});
                }
                if (!cut.empty() && seen_cuts.insert(cut).second)
                    cuts.push_back(StoredCut{cut, 0});
            };
            star(g.out_edges(b.demand.first), true);
            star(g.in_edges(b.demand.second), false);
        }
    }

    for (int round = 0;; ++round) {
        if (round > kMaxCutRounds) throw NumericalFailure("exact solve did not converge");
        if (!cuts.empty()) {
            // Retire columns that stayed slack and out of the basis for a few
            // rounds; anything that matters again is simply re-separated.
            if (round >= 2) {
                std::vector<StoredCut> kept;
                for (const StoredCut& c : cuts)
                    if (round - c.last_active <= 3) kept.push_back(c);
                if (!kept.empty()) cuts = std::move(kept);
            }
            LinearProgram packing(static_cast<int>(cuts.size()));
            std::vector<std::vector<int>> row_idx(static_cast<std::size_t>(m));
            std::vector<std::vector<double>> row_val(static_cast<std::size_t>(m));
            for (std::size_t c = 0; c < cuts.size(); ++c) {
                packing.set_objective(static_cast<int>(c), -1.0);
                for (auto [e, v] : cuts[c].y) {
                    row_idx[static_cast<std::size_t>(e)].push_back(static_cast<int>(c));
                    row_val[static_cast<std::size_t>(e)].push_back(v);
                }
            }
            for (int e = 0; e < m; ++e)
                packing.add_row(row_idx[static_cast<std::size_t>(e)],
                                row_val[static_cast<std::size_t>(e)], Sense::LE,
                                jittered_cost[static_cast<std::size_t>(e)]);
            LPSolution sol = solve_lp(packing);
            if (sol.status != LPStatus::Optimal)
                throw NumericalFailure("packing master not optimal");
            for (int e = 0; e < m; ++e)
                x[static_cast<std::size_t>(e)] = std::max(0.0, -sol.dual[static_cast<std::size_t>(e)]);
            for (std::size_t c = 0; c < cuts.size(); ++c) {
                double covered = 0.0;
                for (auto [e, v] : cuts[c].y) covered += v * x[static_cast<std::size_t>(e)];
                if (sol.x[c] > 1e-9 || covered <= 1.0 + 1e-6) cuts[c].last_active = round;
            }
        }
        // Tier A: cheap certificates and hop-oblivious cuts. The exact
        // hop-cut LPs (tier B) only run once the capacities already carry a
        // full unit of unconstrained flow everywhere; starting them earlier
        // makes their row pools chase whole path families.
        bool violated = false;
        int nviol = 0;
        std::vector<char> needs_hop_check(blocks.size(), 0);
        for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
            const ExactBlock& b = blocks[bi];
            // A saturated path certifies the block without touching any LP.
            if (unit && bottleneck_capacity(g, b.demand, static_cast<int>(b.budget), x,
                                            b.forbidden_vertices,
                                            b.forbidden_edges) >= 1.0 - kSepTol)
                continue;
            StdFlowResult std_flow = standard_maxflow(g, b.demand, x, b.forbidden_vertices,
                                                      b.forbidden_edges, 1.5);
            if (std_flow.value < 1.0 - kSepTol) {
                std::vector<std::pair<int, double>> y;
                for (int e : std_flow.cut_edges) y.push_back({e, 1.0});
                cuts.push_back(StoredCut{std::move(y), round});
                violated = true;
                ++nviol;
                continue;
            }
            if (unit && b.budget >= static_cast<double>(g.vertex_count() - 1)) continue;
            if (unit && peels_within_hops(g, b.demand, std_flow.edge_flow,
                                          static_cast<int>(b.budget), 1.0 - kSepTol))
                continue;
            needs_hop_check[bi] = 1;
        }
        if (!violated) {
            for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
                if (!needs_hop_check[bi]) continue;
                const ExactBlock& b = blocks[bi];
                DemandCut cut = min_fractional_cut_pooled(g, b.demand, b.budget, x, pools[bi],
                                                          b.forbidden_vertices,
                                                          b.forbidden_edges);
                if (cut.value < 1.0 - kSepTol) {
                    cuts.push_back(StoredCut{cut.y, round});
                    violated = true;
                    ++nviol;
                }
            }
        }
        if (std::getenv("SPANNERLAB_TRACE"))
            std::fprintf(stderr, "[exact] round %d: %d violated, %zu cuts\n", round, nviol,
                         cuts.size());
        if (!violated) break;
    }

    // Flow decompositions under the final capacities, then a single uniform
    // scale-up so every block carries one full unit.
    FractionalSolution frac;
    frac.k = k;
    frac.mode = SolveMode::Exact;
    frac.epsilon = 0.0;
    double worst = 1.0;
    std::vector<std::vector<FlowPath>> per_block(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        per_block[i] = max_flow_decomposition(g, blocks[i].demand, blocks[i].budget, x,
                                              blocks[i].forbidden_vertices,
                                              blocks[i].forbidden_edges);
        double total = 0.0;
        for (const FlowPath& p : per_block[i]) total += p.flow;
        if (total <= 0.0) throw NumericalFailure("empty flow decomposition");
        worst = std::min(worst, total);
    }
    const double scale_x = worst < 1.0 ? 1.0 / worst : 1.0;
    frac.x = x;
    for (double& v : frac.x) v *= scale_x;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        double total = 0.0;
        for (const FlowPath& p : per_block[i]) total += p.flow;
        DemandFlows df;
        df.demand = blocks[i].demand;
        df.fault = blocks[i].fault_label;
        df.paths = std::move(per_block[i]);
        if (total > 0.0)
            for (FlowPath& p : df.paths) p.flow /= total;  // exactly one unit
        frac.flows.push_back(std::move(df));
    }
    frac.objective = capacity_cost(g, frac.x);
    return frac;
}

}  // namespace

FractionalSolution solve_lp_exact(const DiGraph& g, double k, std::size_t max_paths) {
    if (k < 1.0) throw std::invalid_argument("stretch factor k must be >= 1");
    std::vector<ExactBlock> blocks;
    for (Demand d : demand_list(g)) {
        if (count_stretch_paths(g, d, k, max_paths) > max_paths) throw PathOverflow(max_paths);
        ExactBlock b;
        b.demand = d;
        b.budget =
            g.unit_length() ? static_cast<double>(unit_hop_budget(k)) : demand_budget(g, d, k);
        blocks.push_back(std::move(b));
    }
    return solve_blocks_exact(g, k, blocks);
}

namespace {

// Shared restricted-master column generation for the plain and the
// fault-tolerant LP. Each block is one (fault set, demand) pair; the plain LP
// has a single empty fault set.
struct Block {
    Demand demand;
    std::optional<std::vector<int>> fault;  // element ids (kind from context)
    double budget = 0.0;
    std::vector<std::vector<int>> pool;     // paths, edge-id lists
    std::set<std::vector<int>> seen;
};

struct MasterResult {
    std::vector<double> x;
    std::vector<std::vector<double>> flows;  // per block, aligned with pool
    double objective = 0.0;
};

FractionalSolution run_colgen(const DiGraph& g, double k, double epsilon,
                              std::vector<Block> blocks, FaultKind fault_kind, SolveMode mode) {
    const int m = g.edge_count();
    const double eps_eff = std::min(epsilon, 1.0);
    const double term_slack = eps_eff / 3.0;
    const long iter_cap = 200L * static_cast<long>(blocks.size());

    for (Block& b : blocks) {
        auto direct = g.edge_between(b.demand.first, b.demand.second);
        if (!direct) throw std::invalid_argument("demand is not an edge");
        b.pool.push_back({*direct});
        b.seen.insert(b.pool.back());
    }

    MasterResult master;
    auto solve_master = [&]() {
        // Variables: x_e then the pooled flow columns block by block.
        int nvars = m;
        std::vector<int> block_offset(blocks.size());
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            block_offset[b] = nvars;
            nvars += static_cast<int>(blocks[b].pool.size());
        }
        LinearProgram lp(nvars);
        for (const Edge& e : g.edges()) lp.set_objective(e.id, e.cost);
        struct CapKey {
            std::size_t block;
            int edge;
        };
        std::vector<std::pair<std::size_t, int>> cap_rows;  // parallel to rows after coverage
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            const Block& blk = blocks[b];
            std::vector<int> idx;
            for (std::size_t p = 0; p < blk.pool.size(); ++p)
                idx.push_back(block_offset[b] + static_cast<int>(p));
            lp.add_row(idx, std::vector<double>(idx.size(), 1.0), Sense::GE, 1.0);
        }
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            const Block& blk = blocks[b];
            std::map<int, std::vector<int>> edge_cols;
            for (std::size_t p = 0; p < blk.pool.size(); ++p)
                for (int e : blk.pool[p]) edge_cols[e].push_back(block_offset[b] + static_cast<int>(p));
            for (auto& [e, cols] : edge_cols) {
                std::vector<int> idx = cols;
                std::vector<double> val(cols.size(), 1.0);
                idx.push_back(e);
                val.push_back(-1.0);
                lp.add_row(idx, val, Sense::LE, 0.0);
                cap_rows.push_back({b, e});
            }
        }
        LPSolution sol = solve_lp(lp);
        if (sol.status != LPStatus::Optimal) throw NumericalFailure("master LP not optimal");
        master.x.assign(sol.x.begin(), sol.x.begin() + m);
        master.flows.assign(blocks.size(), {});
        for (std::size_t b = 0; b < blocks.size(); ++b)
            master.flows[b].assign(sol.x.begin() + block_offset[b],
                                   sol.x.begin() + block_offset[b] +
                                       static_cast<long>(blocks[b].pool.size()));
        master.objective = sol.objective;

        // Dual prices: z per block (coverage rows first), then y per capacity row.
        std::vector<double> z(blocks.size());
        for (std::size_t b = 0; b < blocks.size(); ++b)
            z[b] = std::max(0.0, sol.dual[b]);
        std::vector<std::vector<std::pair<int, double>>> y(blocks.size());
        for (std::size_t r = 0; r < cap_rows.size(); ++r) {
            double val = std::max(0.0, -sol.dual[blocks.size() + r]);
            if (val > 0.0) y[cap_rows[r].first].push_back({cap_rows[r].second, val});
        }
        return std::pair(z, y);
    };

    long iterations = 0;
    double last_dual_bound = 0.0;
    while (true) {
        auto [z, ysparse] = solve_master();
        bool added = false;
        double dual_bound = 0.0;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            Block& blk = blocks[b];
            std::vector<double> weights(static_cast<std::size_t>(m), 0.0);
            for (auto [e, v] : ysparse[b]) weights[static_cast<std::size_t>(e)] = v;

            double found_weight;
            std::vector<int> found_path;
            if (g.unit_length()) {
                RSPQuery q;
                q.g = &g;
                q.source = blk.demand.first;
                q.target = blk.demand.second;
                q.budget = blk.budget;
                q.weight = weights;
                if (blk.fault) {
                    if (fault_kind == FaultKind::Vertex)
                        q.forbidden_vertices = *blk.fault;
                    else
                        q.forbidden_edges = *blk.fault;
                }
                auto res = rsp_exact_hop(q);
                if (!res) throw NumericalFailure("pricing lost all stretch paths");
                found_weight = res->weight;
                found_path = res->path.edge_ids;
                dual_bound += std::min(z[b], found_weight);
            } else {
                RSPQuery q;
                q.g = &g;
                q.source = blk.demand.first;
                q.target = blk.demand.second;
                q.budget = blk.budget;
                q.weight = weights;
                q.epsilon = std::max(term_slack, 1e-6);
                auto res = rsp_fptas(q);
                found_weight = res.weight;
                found_path = res.path.edge_ids;
                dual_bound += std::min(z[b], found_weight / (1.0 + q.epsilon));
            }
            if (found_weight < (1.0 - term_slack) * z[b] - kSepTol) {
                if (blk.seen.insert(found_path).second) {
                    blk.pool.push_back(found_path);
                    added = true;
                }
            }
        }
        last_dual_bound = dual_bound;
        if (!added) break;
        if (++iterations > iter_cap) {
            throw Error(ErrorCode::IterationLimit,
                        "column generation iteration cap reached; master objective " +
                            std::to_string(master.objective) + ", dual bound " +
                            std::to_string(last_dual_bound));
        }
    }

    FractionalSolution frac;
    frac.k = k;
    frac.mode = mode;
    frac.epsilon = epsilon;
    frac.x = master.x;
    frac.objective = capacity_cost(g, master.x);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        DemandFlows df;
        df.demand = blocks[b].demand;
        df.fault = blocks[b].fault;
        for (std::size_t p = 0; p < blocks[b].pool.size(); ++p) {
            double f = master.flows[b][p];
            if (f <= 1e-12) continue;
            Path path{blocks[b].demand, blocks[b].pool[p], 0.0};
            df.paths.push_back(FlowPath{path.vertex_sequence(g), f});
        }
        frac.flows.push_back(std::move(df));
    }
    return frac;
}

}  // namespace

FractionalSolution solve_lp_colgen(const DiGraph& g, double k, double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
    if (k < 1.0) throw std::invalid_argument("stretch factor k must be >= 1");
    std::vector<Block> blocks;
    for (Demand d : demand_list(g)) {
        Block b;
        b.demand = d;
        b.budget = g.unit_length() ? static_cast<double>(unit_hop_budget(k))
                                   : demand_budget(g, d, k);
        blocks.push_back(std::move(b));
    }
    return run_colgen(g, k, epsilon, std::move(blocks), FaultKind::Vertex, SolveMode::Colgen);
}

FractionalSolution solve_ft_lp(const DiGraph& g, double k, FaultModel fault, double epsilon,
                               int r_max) {
    if (!g.unit_length()) throw std::invalid_argument("solve_ft_lp requires unit lengths");
    if (k < 1.0) throw std::invalid_argument("stretch factor k must be >= 1");
    if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
    if (fault.r < 0) throw std::invalid_argument("fault budget must be nonnegative");
    if (fault.r > r_max)
        throw FaultBudgetTooLarge("fault budget r=" + std::to_string(fault.r) +
                                  " exceeds r_max=" + std::to_string(r_max) +
                                  "; use the interdiction oracle workflow");
    const int universe =
        fault.kind == FaultKind::Vertex ? g.vertex_count() : g.edge_count();
    const double budget = static_cast<double>(unit_hop_budget(k));

    std::vector<ExactBlock> blocks;
    for_each_bounded_subset(universe, fault.r, [&](const std::vector<int>& f) {
        std::vector<char> dead_vertex(static_cast<std::size_t>(g.vertex_count()), 0);
        std::vector<char> dead_edge(static_cast<std::size_t>(g.edge_count()), 0);
        if (fault.kind == FaultKind::Vertex)
            for (int v : f) dead_vertex[static_cast<std::size_t>(v)] = 1;
        else
            for (int e : f) dead_edge[static_cast<std::size_t>(e)] = 1;
        for (const Edge& e : g.edges()) {
            if (dead_edge[static_cast<std::size_t>(e.id)]) continue;
            if (dead_vertex[static_cast<std::size_t>(e.src)] ||
                dead_vertex[static_cast<std::size_t>(e.dst)])
                continue;
            ExactBlock b;
            b.demand = {e.src, e.dst};
            b.fault_label = f;
            if (fault.kind == FaultKind::Vertex)
                b.forbidden_vertices = f;
            else
                b.forbidden_edges = f;
            b.budget = budget;
            blocks.push_back(std::move(b));
        }
        return false;
    });
    if (blocks.size() > 200000)
        throw FaultBudgetTooLarge("fault-set enumeration produced too many blocks");
    (void)epsilon;  // the cut-generation route solves LP (3) to optimality
    return solve_blocks_exact(g, k, blocks);
}

InterdictionSolution interdiction_oracle(const DiGraph& g, double k,
                                         const std::vector<double>& x, Demand demand,
                                         FaultModel fault, double epsilon) {
    if (!g.unit_length())
        throw std::invalid_argument("interdiction oracle requires unit lengths");
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
    if (x.size() != static_cast<std::size_t>(g.edge_count()))
        throw std::invalid_argument("capacity vector size mismatch");
    if (demand.first == demand.second) throw std::invalid_argument("demand endpoints equal");

    const int m = g.edge_count();
    const int n = g.vertex_count();
    const bool vertex_kind = fault.kind == FaultKind::Vertex;
    const int nz = vertex_kind ? n : m;
    // The demand may be any vertex pair; its stretch budget comes from d_G.
    const double dist = shortest_distances(g, demand.first)[static_cast<std::size_t>(demand.second)];
    if (dist == kInf) throw std::invalid_argument("demand target unreachable");
    const double budget = std::floor(k * dist + 1e-9);

    // Variables: y_0..y_{m-1}, then z_0..z_{nz-1} in [0,1]. Path rows arrive
    // lazily from the separation oracle.
    std::vector<std::vector<int>> rows;  // stored as paths (edge-id lists)
    std::set<std::vector<int>> seen;

    std::vector<double> y(static_cast<std::size_t>(m), 0.0), z(static_cast<std::size_t>(nz), 0.0);
    double lp_value = 0.0;
    for (int round = 0;; ++round) {
        if (round > kMaxCutRounds)
            throw NumericalFailure("interdiction LP generation did not converge");
        LinearProgram lp(m + nz);
        for (int e = 0; e < m; ++e) lp.set_objective(e, x[static_cast<std::size_t>(e)]);
        for (int w = 0; w < nz; ++w) lp.set_bounds(m + w, 0.0, 1.0);
        if (vertex_kind) {
            lp.set_bounds(m + demand.first, 0.0, 0.0);
            lp.set_bounds(m + demand.second, 0.0, 0.0);
        } else if (auto direct = g.edge_between(demand.first, demand.second)) {
            lp.set_bounds(m + *direct, 0.0, 0.0);
        }
        {
            std::vector<int> idx;
            std::vector<double> val;
            for (int w = 0; w < nz; ++w) {
                idx.push_back(m + w);
                val.push_back(1.0);
            }
            lp.add_row(idx, val, Sense::LE, static_cast<double>(fault.r));
        }
        for (const auto& path : rows) {
            std::map<int, double> coeff;
            for (int eid : path) {
                const Edge& e = g.edge(eid);
                coeff[eid] += 1.0;
                if (vertex_kind) {
                    coeff[m + e.src] += 0.5;
                    coeff[m + e.dst] += 0.5;
                } else {
                    coeff[m + eid] += 1.0;
                }
            }
            std::vector<int> idx;
            std::vector<double> val;
            for (auto [j, v] : coeff) {
                idx.push_back(j);
                val.push_back(v);
            }
            lp.add_row(idx, val, Sense::GE, 1.0);
        }
        LPSolution sol = solve_lp(lp);
        if (sol.status != LPStatus::Optimal)
            throw NumericalFailure("interdiction LP not optimal");
        for (int e = 0; e < m; ++e)
            y[static_cast<std::size_t>(e)] = std::max(0.0, sol.x[static_cast<std::size_t>(e)]);
        for (int w = 0; w < nz; ++w)
            z[static_cast<std::size_t>(w)] = std::max(0.0, sol.x[static_cast<std::size_t>(m + w)]);
        lp_value = sol.objective;

        // Separate: cheapest stretch-k path under combined weights.
        std::vector<double> combined(static_cast<std::size_t>(m), 0.0);
        for (const Edge& e : g.edges()) {
            double w = y[static_cast<std::size_t>(e.id)];
            if (vertex_kind)
                w += 0.5 * z[static_cast<std::size_t>(e.src)] +
                     0.5 * z[static_cast<std::size_t>(e.dst)];
            else
                w += z[static_cast<std::size_t>(e.id)];
            combined[static_cast<std::size_t>(e.id)] = w;
        }
        RSPQuery q;
        q.g = &g;
        q.source = demand.first;
        q.target = demand.second;
        q.budget = budget;
        q.weight = combined;
        auto res = rsp_exact_hop(q);
        if (!res) throw NumericalFailure("interdiction separation lost all paths");
        if (res->weight >= 1.0 - kSepTol) break;
        if (!seen.insert(res->path.edge_ids).second) break;
        rows.push_back(res->path.edge_ids);
    }

    InterdictionSolution out;
    out.kind = fault.kind;
    out.lp_value = lp_value;
    const double threshold = 1.0 / ((1.0 + epsilon) * k);
    for (int w = 0; w < nz; ++w)
        if (z[static_cast<std::size_t>(w)] >= threshold - 1e-12) out.faults.push_back(w);
    out.fault_budget_used = static_cast<int>(out.faults.size());
    out.y.assign(static_cast<std::size_t>(m), 0.0);
    const double inflate = (1.0 + epsilon) / epsilon;
    for (int e = 0; e < m; ++e) out.y[static_cast<std::size_t>(e)] = inflate * y[static_cast<std::size_t>(e)];
    out.cut_value = 0.0;
    for (int e = 0; e < m; ++e)
        out.cut_value += x[static_cast<std::size_t>(e)] * out.y[static_cast<std::size_t>(e)];
    return out;
}

}  // namespace spannerlab

// Copyright (c) spannerlab contributors.
// SPDX-License-Identifier: Apache-2.0
#include "spannerlab/instances.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spannerlab/errors.hpp"
#include "spannerlab/rng.hpp"

namespace spannerlab {

DiGraph gen_random_digraph(int n, double edge_prob, LengthModel lengths, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("need at least two vertices");
    if (!(edge_prob > 0.0) || edge_prob > 1.0)
        throw std::invalid_argument("edge probability must be in (0, 1]");
    std::vector<EdgeSpec> es;
    std::uint64_t pair = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if (rng::uniform01(seed, pair) < edge_prob) {
                double len = 1.0;
                if (lengths.kind == LengthModel::Kind::Uniform)
                    len = lengths.lo + (lengths.hi - lengths.lo) * rng::uniform01(seed, pair, 1);
                es.push_back({u, v, len});
            }
            ++pair;
        }
    }
    return DiGraph(n, es);
}

MinRepInstance gen_synthetic_minrep(int group_count, int group_size, std::uint64_t seed) {
    if (group_count < 2 || group_count % 2 != 0)
        throw std::invalid_argument("group count r must be even and >= 2");
    if (group_size < 1) throw std::invalid_argument("group size q must be >= 1");
    MinRepInstance mr;
    mr.group_count = group_count;
    mr.group_size = group_size;
    const int half = group_count / 2;
    mr.matchings.assign(static_cast<std::size_t>(half),
                        std::vector<std::vector<int>>(static_cast<std::size_t>(half)));
    for (int i = 0; i < half; ++i) {
        for (int j = 0; j < half; ++j) {
            std::vector<int> perm(static_cast<std::size_t>(group_size));
            for (int t = 0; t < group_size; ++t) perm[static_cast<std::size_t>(t)] = t;
            for (int t = group_size - 1; t > 0; --t) {
                int s = rng::uniform_index(seed, static_cast<std::uint64_t>(i * 131 + j),
                                           static_cast<std::uint64_t>(t),
                                           static_cast<std::uint64_t>(t + 1));
                std::swap(perm[static_cast<std::size_t>(t)], perm[static_cast<std::size_t>(s)]);
            }
            mr.matchings[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(perm);
        }
    }
    return mr;
}

namespace {

struct CertBuilder {
    std::vector<double> x;
    std::vector<DemandFlows> flows;

    void add_flow(const DiGraph& g, Demand d, std::vector<std::vector<int>> vertex_paths,
                  std::vector<double> values) {
        DemandFlows df;
        df.demand = d;
        for (std::size_t i = 0; i < vertex_paths.size(); ++i)
            df.paths.push_back(FlowPath{std::move(vertex_paths[i]), values[i]});
        (void)g;
        flows.push_back(std::move(df));
    }
};

}  // namespace

GapInstance build_minrep_gap_instance(const MinRepInstance& mr, int k) {
    if (k < 3 || k % 2 == 0) throw InvalidK("the reduction is defined for odd k >= 3");
    if (mr.group_size < 2)
        throw std::invalid_argument("gap construction needs group size q >= 2");
    const int half = mr.side_groups();
    const int q = mr.group_size;
    const int r = mr.group_count;
    const int L = (k - 1) / 2;            // tail vertex count per (p, i)
    const int tail_edges = (k - 3) / 2;   // edges inside one tail
    const int x_tails = std::max(1, (q + L - 1) / L);

    const int n_mr = mr.num_vertices();
    const int s_base = n_mr;
    const int t_base = n_mr + x_tails * half * L;
    const int n = t_base + x_tails * half * L;
    auto s_vertex = [&](int p, int i, int j) {  // j in [1, L]
        return s_base + (p * half + i) * L + (j - 1);
    };
    auto t_vertex = [&](int p, int i, int j) {
        return t_base + (p * half + i) * L + (j - 1);
    };

    // Edge families in fixed order; capacities per family.
    std::vector<EdgeSpec> es;
    enum Family { EDD, EC, EM, EU, EI };
    std::vector<int> family;
    auto push = [&](int a, int b, Family f) {
        es.push_back({a, b, 1.0, 1.0});
        family.push_back(f);
    };
    // E'': matching edges, directed U -> V.
    for (int i = 0; i < half; ++i)
        for (int j = 0; j < half; ++j)
            for (int t = 0; t < q; ++t)
                push(mr.u_vertex(i, t),
                     mr.v_vertex(j, mr.matchings[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(t)]),
                     EDD);
    // E_C: directed cliques inside every group, both sides.
    for (int i = 0; i < half; ++i)
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                if (a != b) push(mr.u_vertex(i, a), mr.u_vertex(i, b), EC);
    for (int j = 0; j < half; ++j)
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                if (a != b) push(mr.v_vertex(j, a), mr.v_vertex(j, b), EC);
    // E_M: tail paths.
    for (int p = 0; p < x_tails; ++p)
        for (int i = 0; i < half; ++i)
            for (int j = 1; j <= tail_edges; ++j) {
                push(s_vertex(p, i, j), s_vertex(p, i, j + 1), EM);
                push(t_vertex(p, i, j), t_vertex(p, i, j + 1), EM);
            }
    // E_U: tail ends into groups.
    for (int p = 0; p < x_tails; ++p)
        for (int i = 0; i < half; ++i) {
            for (int t = 0; t < q; ++t) push(s_vertex(p, i, L), mr.u_vertex(i, t), EU);
            for (int t = 0; t < q; ++t) push(mr.v_vertex(i, t), t_vertex(p, i, 1), EU);
        }
    // E_I: superedge path connectors.
    for (int p = 0; p < x_tails; ++p)
        for (int i = 0; i < half; ++i)
            for (int j = 0; j < half; ++j) push(s_vertex(p, i, 1), t_vertex(p, j, L), EI);

    DiGraph graph(n, es);

    CertBuilder cert;
    cert.x.assign(static_cast<std::size_t>(graph.edge_count()), 0.0);
    const double cap_groups = 2.0 / q;
    for (int e = 0; e < graph.edge_count(); ++e) {
        switch (family[static_cast<std::size_t>(e)]) {
            case EM: cert.x[static_cast<std::size_t>(e)] = 1.0; break;
            case EDD:
            case EC:
            case EU: cert.x[static_cast<std::size_t>(e)] = cap_groups; break;
            case EI: cert.x[static_cast<std::size_t>(e)] = 0.0; break;
        }
    }

    // Flow decompositions, one block per demand edge, following the proof.
    for (int eid = 0; eid < graph.edge_count(); ++eid) {
        const Edge& e = graph.edge(eid);
        Demand d{e.src, e.dst};
        std::vector<std::vector<int>> paths;
        std::vector<double> vals;
        switch (family[static_cast<std::size_t>(eid)]) {
            case EM:
                paths.push_back({e.src, e.dst});
                vals.push_back(1.0);
                break;
            case EDD: {
                // u in U_i slot t matched to v in V_j; route through group mates.
                const int u = e.src, v = e.dst;
                const int i = u / q, t = u % q;
                const int rel = v - half * q;
                const int j = rel / q;
                paths.push_back({u, v});
                vals.push_back(1.0 / q);
                for (int t2 = 0; t2 < q; ++t2) {
                    if (t2 == t) continue;
                    int u2 = mr.u_vertex(i, t2);
                    int v2 = mr.v_vertex(j, mr.matchings[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(t2)]);
                    paths.push_back({u, u2, v2, v});
                    vals.push_back(1.0 / q);
                }
                break;
            }
            case EC: {
                // a -> b inside one group: direct plus the two-hop group mates.
                const int a = e.src, b = e.dst;
                const bool uside = a < half * q;
                const int base = uside ? (a / q) * q : half * q + ((a - half * q) / q) * q;
                paths.push_back({a, b});
                vals.push_back(1.0 / (q - 1));
                for (int t2 = 0; t2 < q; ++t2) {
                    int c = base + t2;
                    if (c == a || c == b) continue;
                    paths.push_back({a, c, b});
                    vals.push_back(1.0 / (q - 1));
                }
                break;
            }
            case EU: {
                if (e.src >= s_base && e.src < t_base) {
                    // s_{i,L}^p -> u: fan out over the group, then one clique hop.
                    const int u = e.dst;
                    const int i = u / q, t = u % q;
                    paths.push_back({e.src, u});
                    vals.push_back(1.0 / q);
                    for (int t2 = 0; t2 < q; ++t2) {
                        if (t2 == t) continue;
                        paths.push_back({e.src, mr.u_vertex(i, t2), u});
                        vals.push_back(1.0 / q);
                    }
                } else {
                    // v -> t_{i,1}^p: around through the other group members.
                    const int v = e.src;
                    const int rel = v - half * q;
                    const int i = rel / q, t = rel % q;
                    for (int t2 = 0; t2 < q; ++t2) {
                        if (t2 == t) continue;
                        paths.push_back({v, mr.v_vertex(i, t2), e.dst});
                        vals.push_back(1.0 / (q - 1));
                    }
                }
                break;
            }
            case EI: {
                // s_{i,1}^p -> t_{j,L}^p: down the s tail, across the matching
                // q ways, and down the t tail; each route has length exactly k.
                int sv = e.src - s_base;
                const int p = sv / (half * L);
                const int i = (sv % (half * L)) / L;
                int tv = e.dst - t_base;
                const int j = (tv % (half * L)) / L;
                for (int t = 0; t < q; ++t) {
                    std::vector<int> path;
                    for (int jj = 1; jj <= L; ++jj) path.push_back(s_vertex(p, i, jj));
                    path.push_back(mr.u_vertex(i, t));
                    path.push_back(mr.v_vertex(j, mr.matchings[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(t)]));
                    for (int jj = 1; jj <= L; ++jj) path.push_back(t_vertex(p, j, jj));
                    paths.push_back(std::move(path));
                    vals.push_back(1.0 / q);
                }
                break;
            }
        }
        cert.add_flow(graph, d, std::move(paths), std::move(vals));
    }

    GapInstance gap;
    gap.kind = GapKind::MinRepKSpanner;
    gap.params = {{"r", static_cast<double>(r)},
                  {"q", static_cast<double>(q)},
                  {"k", static_cast<double>(k)},
                  {"x", static_cast<double>(x_tails)},
                  {"n_minrep", static_cast<double>(n_mr)},
                  {"n", static_cast<double>(n)}};
    gap.certificate.x = cert.x;
    gap.certificate.flows = cert.flows;
    gap.certificate.mode = SolveMode::Exact;
    gap.certificate.k = k;
    double obj = 0.0;
    for (double v : cert.x) obj += v;
    gap.certificate.objective = obj;
    gap.predicted_fractional_cost_bound =
        static_cast<double>(x_tails) * r * (k - 3) / 2.0 +
        (2.0 / q) * (static_cast<double>(r) * r * q / 4.0 + static_cast<double>(q) * q * r +
                     static_cast<double>(x_tails) * r * q);
    gap.minrep_witness = mr;
    gap.graph = std::move(graph);
    return gap;
}

GapInstance build_setcover_gap_instance(int q, int aux_count) {
    if (q < 2) throw std::invalid_argument("need q >= 2");
    if (q > 10) throw TooLarge("set system F_2^q too large");
    const int M = 1 << q;       // sets
    const int N = M - 1;        // elements: F_2^q minus zero
    const int A = aux_count < 0 ? M * M : aux_count;
    if (A < 1) throw std::invalid_argument("need at least one auxiliary vertex");

    // Vertex ids: aux 0..A-1, sets A..A+M-1 (alpha), elements A+M..A+M+N-1 (e-1).
    auto set_vertex = [&](int alpha) { return A + alpha; };
    auto elem_vertex = [&](int e) { return A + M + (e - 1); };
    const int n = A + M + N;
    auto in_set = [&](int alpha, int e) { return __builtin_popcount(alpha & e) % 2 == 1; };

    // Undirected edges as arc pairs sharing one capacity; arc cost 0.5 so the
    // capacity of a shared pair is counted once in objectives.
    std::vector<EdgeSpec> es;
    std::vector<double> group_cap;               // per undirected edge
    std::vector<std::vector<int>> groups;        // arc ids per undirected edge
    auto push_undirected = [&](int a, int b, double cap) {
        int id0 = static_cast<int>(es.size());
        es.push_back({a, b, 1.0, 0.5});
        es.push_back({b, a, 1.0, 0.5});
        group_cap.push_back(cap);
        groups.push_back({id0, id0 + 1});
    };
    for (int i = 0; i < A; ++i)
        for (int alpha = 0; alpha < M; ++alpha) push_undirected(i, set_vertex(alpha), 2.0 / M);
    for (int i = 0; i < A; ++i)
        for (int e = 1; e <= N; ++e) push_undirected(i, elem_vertex(e), 0.0);
    for (int a = 0; a < M; ++a)
        for (int b = a + 1; b < M; ++b) push_undirected(set_vertex(a), set_vertex(b), 1.0);
    for (int alpha = 0; alpha < M; ++alpha)
        for (int e = 1; e <= N; ++e)
            if (in_set(alpha, e)) push_undirected(set_vertex(alpha), elem_vertex(e), 1.0);

    DiGraph graph(n, es);
    CertBuilder cert;
    cert.x.assign(static_cast<std::size_t>(graph.edge_count()), 0.0);
    for (std::size_t gidx = 0; gidx < groups.size(); ++gidx)
        for (int arc : groups[gidx]) cert.x[static_cast<std::size_t>(arc)] = group_cap[gidx];

    // Flows per arc demand.
    for (int eid = 0; eid < graph.edge_count(); ++eid) {
        const Edge& e = graph.edge(eid);
        Demand d{e.src, e.dst};
        std::vector<std::vector<int>> paths;
        std::vector<double> vals;
        auto classify = [&](int v) {
            if (v < A) return 0;  // aux
            if (v < A + M) return 1;  // set
            return 2;  // element
        };
        int cs = classify(e.src), cd = classify(e.dst);
        if ((cs == 1 && cd == 1) || (cs == 1 && cd == 2) || (cs == 2 && cd == 1)) {
            paths.push_back({e.src, e.dst});
            vals.push_back(1.0);
        } else if (cs == 0 && cd == 1) {
            // aux -> set: spread over all sets, forward via set-set edges.
            const int target = e.dst;
            for (int alpha = 0; alpha < M; ++alpha) {
                int sv = set_vertex(alpha);
                if (sv == target)
                    paths.push_back({e.src, target});
                else
                    paths.push_back({e.src, sv, target});
                vals.push_back(1.0 / M);
            }
        } else if (cs == 1 && cd == 0) {
            const int source = e.src;
            for (int alpha = 0; alpha < M; ++alpha) {
                int sv = set_vertex(alpha);
                if (sv == source)
                    paths.push_back({source, e.dst});
                else
                    paths.push_back({source, sv, e.dst});
                vals.push_back(1.0 / M);
            }
        } else if (cs == 0 && cd == 2) {
            // aux -> element: through the M/2 sets containing it.
            const int elem = e.dst - (A + M) + 1;
            for (int alpha = 0; alpha < M; ++alpha) {
                if (!in_set(alpha, elem)) continue;
                paths.push_back({e.src, set_vertex(alpha), e.dst});
                vals.push_back(2.0 / M);
            }
        } else {  // element -> aux
            const int elem = e.src - (A + M) + 1;
            for (int alpha = 0; alpha < M; ++alpha) {
                if (!in_set(alpha, elem)) continue;
                paths.push_back({e.src, set_vertex(alpha), e.dst});
                vals.push_back(2.0 / M);
            }
        }
        cert.add_flow(graph, d, std::move(paths), std::move(vals));
    }

    GapInstance gap;
    gap.kind = GapKind::SetCover2Spanner;
    gap.params = {{"q", static_cast<double>(q)},
                  {"N", static_cast<double>(N)},
                  {"M", static_cast<double>(M)},
                  {"aux", static_cast<double>(A)},
                  {"n", static_cast<double>(n)}};
    gap.certificate.x = cert.x;
    gap.certificate.flows = cert.flows;
    gap.certificate.mode = SolveMode::Exact;
    gap.certificate.k = 2.0;
    double obj = 0.0;
    for (std::size_t gidx = 0; gidx < groups.size(); ++gidx) obj += group_cap[gidx];
    gap.certificate.objective = obj;
    gap.predicted_fractional_cost_bound =
        2.0 * A + static_cast<double>(M) * M + static_cast<double>(M) * N;

    SetCoverWitness w;
    w.num_elements = N;
    for (int alpha = 0; alpha < M; ++alpha) {
        std::uint64_t bits = 0;
        for (int e = 1; e <= N; ++e)
            if (in_set(alpha, e)) bits |= 1ULL << (e - 1);
        w.sets.push_back(bits);
    }
    w.aux_count = A;
    w.shared_edge_groups = groups;
    gap.setcover_witness = std::move(w);
    gap.graph = std::move(graph);
    return gap;
}

}  // namespace spannerlab

// Copyright (c) spannerlab contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spannerlab/graph.hpp"
#include "spannerlab/spanner_lp.hpp"

namespace spannerlab {

/// Bipartite Min-Rep instance whose superedges are perfect matchings.
/// Groups U_1..U_{r/2} and V_1..V_{r/2}, each of size q; vertices are labeled
/// 0..rq-1 with the U side first, group-major.
struct MinRepInstance {
    int group_count = 0;  // r (even); r/2 groups per side
    int group_size = 0;   // q

    // matchings[i][j][t]: U_{i} slot t is matched to V_{j} slot matchings[i][j][t].
    std::vector<std::vector<std::vector<int>>> matchings;

    int side_groups() const { return group_count / 2; }
    int num_vertices() const { return group_count * group_size; }
    int u_vertex(int i, int t) const { return i * group_size + t; }
    int v_vertex(int j, int t) const { return side_groups() * group_size + j * group_size + t; }
};

enum class GapKind { MinRepKSpanner, SetCover2Spanner };

/// Witness data for the set-cover gap instance: the brute-forcible set system
/// plus the aux-vertex count driving the integral lower bound.
struct SetCoverWitness {
    int num_elements = 0;
    std::vector<std::uint64_t> sets;  // element bitmasks
    int aux_count = 0;
    // arc ids grouped per undirected edge (shared capacity accounting)
    std::vector<std::vector<int>> shared_edge_groups;
};

/// Generated gap graph plus its machine-checkable fractional certificate and
/// the data the verifier needs for the integral lower bound.
struct GapInstance {
    DiGraph graph{0, {}};
    GapKind kind = GapKind::MinRepKSpanner;
    std::map<std::string, double> params;
    FractionalSolution certificate;
    double predicted_fractional_cost_bound = 0.0;
    std::optional<MinRepInstance> minrep_witness;
    std::optional<SetCoverWitness> setcover_witness;
};

struct LengthModel {
    enum class Kind { Unit, Uniform } kind = Kind::Unit;
    double lo = 1.0, hi = 1.0;

    static LengthModel unit() { return {}; }
    static LengthModel uniform(double lo, double hi) {
        return {Kind::Uniform, lo, hi};
    }
};

/// Erdos-Renyi style digraph: each ordered pair independently with edge_prob.
DiGraph gen_random_digraph(int n, double edge_prob, LengthModel lengths, std::uint64_t seed);

/// All r^2/4 group pairs are superedges, realized by seeded random permutation
/// matchings.
MinRepInstance gen_synthetic_minrep(int group_count, int group_size, std::uint64_t seed);

/// The Min-Rep to k-spanner reduction with its explicit fractional certificate
/// (k odd, >= 3; group size >= 2).
GapInstance build_minrep_gap_instance(const MinRepInstance& mr, int k);

/// The set-cover 2-spanner gap over F_2^q, encoded as a symmetric digraph with
/// one capacity variable per undirected edge. aux_count < 0 selects the
/// paper's M^2 auxiliary vertices.
GapInstance build_setcover_gap_instance(int q, int aux_count = -1);

}  // namespace spannerlab

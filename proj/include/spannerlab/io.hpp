// Copyright (c) spannerlab contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "spannerlab/graph.hpp"
#include "spannerlab/instances.hpp"
#include "spannerlab/rounding.hpp"
#include "spannerlab/spanner_lp.hpp"
#include "spannerlab/verify.hpp"

namespace spannerlab {

using json = nlohmann::json;

/// Graph text format:
///   # comment
///   p spanner <n> <m> <unit|weighted>
///   a <source> <target> <length> [cost]
DiGraph parse_graph(std::istream& in);
DiGraph parse_graph_string(const std::string& text);
DiGraph load_graph(const std::string& path);
std::string format_graph(const DiGraph& g);
void save_graph(const DiGraph& g, const std::string& path);

json to_json(const FractionalSolution& frac);
FractionalSolution fractional_from_json(const json& j, const DiGraph& g);

json to_json(const SpannerSolution& sol);
json to_json(const VerifyReport& rep);

/// Certificate sidecar: the FractionalSolution schema plus a "meta" object
/// carrying the instance kind, parameters, predicted cost bound and witness.
json gap_certificate_json(const GapInstance& gap);
GapInstance gap_from_files(const DiGraph& g, const json& certificate);

json load_json(const std::string& path);
void save_json(const json& j, const std::string& path);

}  // namespace spannerlab

// Copyright (c) spannerlab contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace spannerlab {

enum class FaultKind { Vertex, Edge };

/// Fault model: up to r simultaneous vertex or edge failures.
struct FaultModel {
    FaultKind kind = FaultKind::Vertex;
    int r = 0;
};

}  // namespace spannerlab

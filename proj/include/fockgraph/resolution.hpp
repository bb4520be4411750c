// Copyright 2026 The fockgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "fockgraph/graph_codes.hpp"

namespace fockgraph {

/// (1/pi^{n-1}) int D Q_phi D^dag prod_{k>=2} r_k dr_k dtheta_k over the
/// (n-1)-fold product of polar schemes, one per parameter pair (a single
/// scheme is reused for every pair). Requires n >= 2.
///
/// Only photon numbers k <= N enter Q_phi, so the result equals the identity
/// minus the projector onto states with more than N quanta in the rotated
/// first mode. On tuples of total occupation <= N that projector vanishes and
/// the integral reproduces I to quadrature accuracy; for phi = I it vanishes
/// on the whole truncated space.
MultimodeOperator integrate_resolution(const GraphSpec& spec, const std::vector<PolarScheme>& schemes,
                                       Backend backend);

}  // namespace fockgraph

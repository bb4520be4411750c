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

#include "fockgraph/resolution.hpp"

#include <cmath>

namespace fockgraph {

MultimodeOperator integrate_resolution(const GraphSpec& spec, const std::vector<PolarScheme>& schemes,
                                       Backend backend) {
  const int pairs = spec.modes() - 1;
  if (pairs < 1) throw InvalidArgument("integrate_resolution needs at least two modes");
  if (schemes.size() != 1 && schemes.size() != static_cast<std::size_t>(pairs)) {
    throw InvalidArgument("integrate_resolution: give one scheme or one per parameter pair");
  }
  std::vector<std::vector<PolarNode>> grids;
  for (int p = 0; p < pairs; ++p) grids.push_back(schemes[schemes.size() == 1 ? 0 : p].nodes());
  for (const auto& g : grids) {
    if (g.empty()) throw InvalidArgument("integrate_resolution: empty quadrature grid");
  }

  const Eigen::Index dim = spec.working_space().dim();
  CMatrix acc = CMatrix::Zero(dim, dim);
  const CMatrix projection = backend == Backend::kDirect ? q_phi(spec) : CMatrix();
  GeneratorParams params{std::vector<double>(pairs), std::vector<double>(pairs)};

  // odometer over the product grid, last pair fastest
  std::vector<std::size_t> pos(pairs, 0);
  while (true) {
    double weight = 1.0;
    double tail = 0.0;
    for (int p = 0; p < pairs; ++p) {
      const PolarNode& node = grids[p][pos[p]];
      params.radii[p] = node.r();
      params.phases[p] = node.theta;
      weight *= node.weight;
      tail += node.s;
    }
    if (backend == Backend::kRank) {
      const CMatrix u = std::exp(0.5 * tail) * displaced_code_vectors(spec, params);
      acc.selfadjointView<Eigen::Lower>().rankUpdate(u, weight);
    } else {
      acc += (weight * std::exp(tail)) * conjugate_displaced(spec, params, projection);
    }

    int p = pairs - 1;
    while (p >= 0 && ++pos[p] == grids[p].size()) {
      pos[p] = 0;
      --p;
    }
    if (p < 0) break;
  }
  if (backend == Backend::kRank) {
    fill_upper_from_lower(acc);
  } else {
    acc = 0.5 * (acc + acc.adjoint()).eval();
  }
  return acc;
}

}  // namespace fockgraph

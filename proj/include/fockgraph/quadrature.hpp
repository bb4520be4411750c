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

#include <optional>
#include <vector>

#include "fockgraph/core.hpp"

namespace fockgraph {

/// Gauss-Laguerre rule for the weight e^{-s} on [0, inf).
struct RadialScheme {
  std::vector<double> nodes;    // strictly increasing, positive
  std::vector<double> weights;  // positive, summing to 1

  int order() const { return static_cast<int>(nodes.size()); }
};

inline constexpr int kMaxRadialOrder = 64;

/// Q-point Gauss-Laguerre rule, 1 <= Q <= 64. Nodes are the eigenvalues of
/// the symmetric Jacobi matrix (diagonal 2i+1, off-diagonal i+1), polished by
/// Newton steps on L_Q; weights use x / ((Q+1) L_{Q+1}(x))^2, which keeps the
/// small tail weights accurate to working precision relative to themselves.
/// Exact for polynomials of degree <= 2Q-1.
RadialScheme gauss_laguerre(int order);

/// M equispaced angles 2 pi m / M with weight 2 pi / M each.
class AngularScheme {
 public:
  explicit AngularScheme(int count);

  int count() const { return count_; }
  double angle(int m) const { return 2.0 * kPi * m / count_; }
  double weight() const { return 2.0 * kPi / count_; }

 private:
  int count_;
};

/// One node of the composite polar rule. `weight` already contains the 1/pi
/// normalisation and the Jacobian of s = r^2, i.e. weight = w_i / M.
struct PolarNode {
  double s;
  double theta;
  double weight;

  double r() const;
  cplx alpha() const;
};

/// Composite rule for (1/pi) int_0^{2pi} int_0^inf F(r, theta) r dr dtheta,
/// with the integrand supplied tail-factored as G(s, theta) = e^s F(sqrt s, theta).
struct PolarScheme {
  RadialScheme radial;
  AngularScheme angular;
  /// Diagnostic only: drop radial nodes with s > cap^2. Not exact.
  std::optional<double> radial_cap;

  PolarScheme(int radial_order, int angular_count, std::optional<double> cap = std::nullopt);

  /// Q = N+1, M = 2N+2.
  static PolarScheme defaults_for(Cutoff cutoff);

  /// Nodes in the reference summation order: angular-major, then radial.
  std::vector<PolarNode> nodes() const;
};

/// (1/pi) int |alpha><alpha| d^2 alpha on N+1 levels. Entry (m, n) of the
/// tail-factored integrand is s^{(m+n)/2} e^{i theta (m-n)} / sqrt(m! n!).
/// Reproduces the identity to rounding when M >= N+1 and Q >= ceil((N+1)/2).
SingleModeOperator integrate_gs(Cutoff cutoff, const PolarScheme& scheme);

/// (1/pi) int D(alpha) |beta><beta| D(alpha)^dag d^2 alpha with truncated
/// displacement matrices and a truncated coherent state.
SingleModeOperator integrate_covariant_gs(cplx beta, Cutoff cutoff, const PolarScheme& scheme);

/// True when every element is <= the one before it, or <= floor. Deviations
/// already at rounding level carry no ordering information.
bool non_increasing(const std::vector<double>& sequence, double floor);

}  // namespace fockgraph

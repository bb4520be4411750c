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

#include "fockgraph/quadrature.hpp"

#include <cmath>

#include "fockgraph/fock_mode.hpp"

namespace fockgraph {

namespace {

// L_{n-1}(x) and L_n(x), plain Laguerre polynomials.
std::pair<double, double> laguerre_pair(int n, double x) {
  double prev = 1.0;
  double cur = 1.0 - x;
  if (n == 0) return {0.0, 1.0};
  for (int j = 1; j < n; ++j) {
    const double next = ((2.0 * j + 1.0 - x) * cur - j * prev) / (j + 1.0);
    prev = cur;
    cur = next;
  }
  return {prev, cur};
}

// Hermitian rank-one accumulation acc += weight * v v^dag on the lower
// triangle, in a fixed loop order.
void accumulate_lower(CMatrix& acc, const CVector& v, double weight) {
  const Eigen::Index dim = v.size();
  for (Eigen::Index n = 0; n < dim; ++n) {
    const cplx cn = std::conj(v(n)) * weight;
    for (Eigen::Index m = n; m < dim; ++m) acc(m, n) += v(m) * cn;
  }
}

}  // namespace

RadialScheme gauss_laguerre(int order) {
  if (order < 1 || order > kMaxRadialOrder) {
    throw InvalidArgument("gauss_laguerre: order must lie in [1, " + std::to_string(kMaxRadialOrder) +
                          "], got " + std::to_string(order));
  }
  Eigen::VectorXd diag(order);
  Eigen::VectorXd sub(std::max(order - 1, 0));
  for (int i = 0; i < order; ++i) diag(i) = 2.0 * i + 1.0;
  for (int i = 0; i + 1 < order; ++i) sub(i) = i + 1.0;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("gauss_laguerre: eigensolver failed");

  RadialScheme scheme;
  scheme.nodes.resize(order);
  scheme.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    double x = solver.eigenvalues()(i);
    for (int it = 0; it < 3; ++it) {
      const auto [lm1, l] = laguerre_pair(order, x);
      const double deriv = order * (l - lm1) / x;
      const double step = l / deriv;
      x -= step;
      if (std::abs(step) <= 1e-16 * x) break;
    }
    const double next = laguerre_pair(order + 1, x).second;
    scheme.nodes[i] = x;
    scheme.weights[i] = x / ((order + 1.0) * (order + 1.0) * next * next);
  }
  return scheme;
}

AngularScheme::AngularScheme(int count) : count_(count) {
  if (count < 1) throw InvalidArgument("angular scheme needs at least one angle");
}

double PolarNode::r() const { return std::sqrt(s); }

cplx PolarNode::alpha() const { return std::polar(std::sqrt(s), theta); }

PolarScheme::PolarScheme(int radial_order, int angular_count, std::optional<double> cap)
    : radial(gauss_laguerre(radial_order)), angular(angular_count), radial_cap(cap) {
  if (cap && !(*cap > 0.0)) throw InvalidArgument("radial cap must be positive");
}

PolarScheme PolarScheme::defaults_for(Cutoff cutoff) {
  const int n = cutoff.max_occupation();
  return PolarScheme(std::min(n + 1, kMaxRadialOrder), 2 * n + 2);
}

std::vector<PolarNode> PolarScheme::nodes() const {
  std::vector<PolarNode> out;
  const int q = radial.order();
  const int m_count = angular.count();
  out.reserve(static_cast<std::size_t>(q) * m_count);
  const double cap_s = radial_cap ? (*radial_cap) * (*radial_cap) : 0.0;
  for (int m = 0; m < m_count; ++m) {
    const double theta = angular.angle(m);
    for (int i = 0; i < q; ++i) {
      if (radial_cap && radial.nodes[i] > cap_s) continue;
      // (1/pi) * (2 pi / M) * (w_i / 2)
      out.push_back(PolarNode{radial.nodes[i], theta, radial.weights[i] / m_count});
    }
  }
  return out;
}

SingleModeOperator integrate_gs(Cutoff cutoff, const PolarScheme& scheme) {
  const int dim = cutoff.dim();
  CMatrix acc = CMatrix::Zero(dim, dim);
  CVector v(dim);
  for (const PolarNode& node : scheme.nodes()) {
    const double log_s = std::log(node.s);
    for (int m = 0; m < dim; ++m) {
      const double mag = std::exp(0.5 * m * log_s - 0.5 * std::lgamma(m + 1.0));
      v(m) = m == 0 ? cplx(mag, 0.0) : std::polar(mag, m * node.theta);
    }
    accumulate_lower(acc, v, node.weight);
  }
  fill_upper_from_lower(acc);
  return acc;
}

SingleModeOperator integrate_covariant_gs(cplx beta, Cutoff cutoff, const PolarScheme& scheme) {
  const int dim = cutoff.dim();
  const SingleModeState ket = coherent_state(beta, cutoff);
  CMatrix acc = CMatrix::Zero(dim, dim);
  for (const PolarNode& node : scheme.nodes()) {
    const CVector v = std::exp(0.5 * node.s) * (displacement_matrix(node.alpha(), cutoff) * ket);
    accumulate_lower(acc, v, node.weight);
  }
  fill_upper_from_lower(acc);
  return acc;
}

bool non_increasing(const std::vector<double>& sequence, double floor) {
  for (std::size_t i = 1; i < sequence.size(); ++i) {
    if (sequence[i] > sequence[i - 1] && sequence[i] > floor) return false;
  }
  return true;
}

}  // namespace fockgraph

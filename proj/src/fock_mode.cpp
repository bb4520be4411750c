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

#include "fockgraph/fock_mode.hpp"

#include <cmath>

namespace fockgraph {

double assoc_laguerre(int n, int k, double x) {
  if (n < 0 || k < 0) throw InvalidArgument("assoc_laguerre: negative degree or order");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + k - x;
  for (int j = 1; j < n; ++j) {
    const double next = ((2.0 * j + 1.0 + k - x) * cur - (j + k) * prev) / (j + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

SingleModeState coherent_state(cplx alpha, Cutoff cutoff) {
  const int dim = cutoff.dim();
  SingleModeState psi = SingleModeState::Zero(dim);
  const double mag = std::abs(alpha);
  if (mag == 0.0) {
    psi(0) = 1.0;
    return psi;
  }
  const double log_mag = std::log(mag);
  const double phase = std::arg(alpha);
  const double half_s = 0.5 * mag * mag;
  for (int n = 0; n < dim; ++n) {
    const double log_amp = -half_s + n * log_mag - 0.5 * std::lgamma(n + 1.0);
    psi(n) = std::polar(std::exp(log_amp), n * phase);
  }
  return psi;
}

namespace {

// <m|D(alpha)|n> for m >= n.
cplx displacement_lower(cplx alpha, int m, int n) {
  const int k = m - n;
  const double mag = std::abs(alpha);
  if (mag == 0.0) return k == 0 ? cplx(1.0) : cplx(0.0);
  const double s = mag * mag;
  const double log_amp =
      0.5 * (std::lgamma(n + 1.0) - std::lgamma(m + 1.0)) + k * std::log(mag) - 0.5 * s;
  const double value = std::exp(log_amp) * assoc_laguerre(n, k, s);
  if (k == 0) return cplx(value, 0.0);
  return std::polar(1.0, k * std::arg(alpha)) * value;
}

}  // namespace

cplx displacement_element(cplx alpha, int m, int n) {
  if (m < 0 || n < 0) throw InvalidArgument("displacement_element: negative index");
  return m >= n ? displacement_lower(alpha, m, n) : std::conj(displacement_lower(-alpha, n, m));
}

double displacement_leakage(double magnitude, int column, int cutoff) {
  if (column < 0 || cutoff < 0) throw InvalidArgument("displacement_leakage: negative index");
  double sum = 0.0;
  // terms fall off super-exponentially once k is past the bulk at ~(sqrt(m) + |alpha|)^2
  const double bulk = std::pow(std::sqrt(static_cast<double>(column)) + magnitude, 2.0);
  for (int k = cutoff + 1;; ++k) {
    const double term = std::norm(displacement_lower(magnitude, std::max(k, column), std::min(k, column)));
    sum += term;
    if (k > bulk + 8.0 && (term == 0.0 || term < 1e-40 * sum || term < 1e-300)) break;
    if (k > cutoff + 4000) break;
  }
  return sum;
}

int trusted_cutoff(int cutoff, double magnitude, double tolerance) {
  int t = -1;
  for (int m = 0; m <= cutoff; ++m) {
    if (displacement_leakage(magnitude, m, cutoff) > tolerance) break;
    t = m;
  }
  return t;
}

int required_cutoff(int top, double magnitude, double tolerance) {
  for (int cut = top;; ++cut) {
    bool ok = true;
    for (int m = top; m >= 0 && ok; --m) ok = displacement_leakage(magnitude, m, cut) <= tolerance;
    if (ok) return cut;
  }
}

SingleModeOperator displacement_matrix(cplx alpha, Cutoff cutoff) {
  const int dim = cutoff.dim();
  SingleModeOperator d(dim, dim);
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n <= m; ++n) {
      d(m, n) = displacement_lower(alpha, m, n);
      if (m != n) d(n, m) = std::conj(displacement_lower(-alpha, m, n));
    }
  }
  return d;
}

cplx coherent_overlap(cplx alpha, cplx beta) {
  return std::exp(-0.5 * std::norm(alpha) - 0.5 * std::norm(beta) + std::conj(beta) * alpha);
}

cplx displacement_compose_phase(cplx alpha, cplx beta) {
  // (z - conj z)/2 = i Im z with z = alpha conj(beta)
  return std::polar(1.0, std::imag(alpha * std::conj(beta)));
}

int min_oracle_buffer(double magnitude) {
  return 2 * static_cast<int>(std::ceil(magnitude * magnitude + 3.0 * magnitude));
}

SingleModeOperator annihilation(Cutoff cutoff) {
  const int dim = cutoff.dim();
  SingleModeOperator a = SingleModeOperator::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

SingleModeOperator expm_displacement_oracle(cplx alpha, Cutoff cutoff, int buffer) {
  const int required = min_oracle_buffer(std::abs(alpha));
  if (buffer < required) {
    throw InvalidArgument("expm_displacement_oracle: buffer " + std::to_string(buffer) +
                          " below required " + std::to_string(required));
  }
  const Cutoff big(cutoff.max_occupation() + buffer);
  const SingleModeOperator a = annihilation(big);
  const SingleModeOperator gen = alpha * a.adjoint() - std::conj(alpha) * a;

  const double norm = gen.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const SingleModeOperator x = gen / std::ldexp(1.0, squarings);

  const int dim = big.dim();
  SingleModeOperator result = SingleModeOperator::Identity(dim, dim);
  SingleModeOperator term = SingleModeOperator::Identity(dim, dim);
  for (int j = 1; j < 60; ++j) {
    term = term * x / static_cast<double>(j);
    result += term;
    if (term.cwiseAbs().maxCoeff() < 1e-20) break;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result.topLeftCorner(cutoff.dim(), cutoff.dim());
}

}  // namespace fockgraph

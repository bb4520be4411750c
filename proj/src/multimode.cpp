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

#include "fockgraph/multimode.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fockgraph/fock_mode.hpp"

namespace fockgraph {

ModeSpace::ModeSpace(int modes, Cutoff cutoff) : modes_(modes), cutoff_(cutoff), dim_(1) {
  if (modes < 1) throw InvalidArgument("mode count must be at least 1");
  for (int j = 0; j < modes; ++j) dim_ *= cutoff.dim();
}

Eigen::Index ModeSpace::index_of(std::span<const int> occupations) const {
  if (static_cast<int>(occupations.size()) != modes_) {
    throw InvalidArgument("occupation tuple has wrong length");
  }
  Eigen::Index index = 0;
  for (int occ : occupations) {
    if (occ < 0 || occ > cutoff_.max_occupation()) {
      throw std::out_of_range("occupation " + std::to_string(occ) + " outside [0, " +
                              std::to_string(cutoff_.max_occupation()) + "]");
    }
    index = index * local_dim() + occ;
  }
  return index;
}

std::vector<int> ModeSpace::tuple_of(Eigen::Index index) const {
  if (index < 0 || index >= dim_) throw std::out_of_range("flat index out of range");
  std::vector<int> occ(modes_);
  for (int j = modes_ - 1; j >= 0; --j) {
    occ[j] = static_cast<int>(index % local_dim());
    index /= local_dim();
  }
  return occ;
}

std::vector<Eigen::Index> ModeSpace::trusted_indices(int max_occupation) const {
  std::vector<Eigen::Index> out;
  for (Eigen::Index i = 0; i < dim_; ++i) {
    const auto occ = tuple_of(i);
    if (*std::max_element(occ.begin(), occ.end()) <= max_occupation) out.push_back(i);
  }
  return out;
}

std::vector<Eigen::Index> ModeSpace::photon_number_indices(int total) const {
  std::vector<Eigen::Index> out;
  for (Eigen::Index i = 0; i < dim_; ++i) {
    const auto occ = tuple_of(i);
    if (std::accumulate(occ.begin(), occ.end(), 0) <= total) out.push_back(i);
  }
  return out;
}

UnitaryMatrix::UnitaryMatrix(CMatrix phi) : phi_(std::move(phi)) {
  if (phi_.rows() == 0 || phi_.rows() != phi_.cols()) {
    throw NotUnitary("phi not unitary: matrix must be square and non-empty");
  }
  if (!phi_.allFinite()) throw NotUnitary("phi not unitary: non-finite entry");
  const CMatrix gram = phi_.adjoint() * phi_;
  const double dev = max_abs_diff(gram, CMatrix::Identity(phi_.rows(), phi_.cols()));
  if (dev > kTolerance) {
    throw NotUnitary("phi not unitary: max |phi^dag phi - I| = " + std::to_string(dev));
  }
}

UnitaryMatrix UnitaryMatrix::identity(int n) { return UnitaryMatrix(CMatrix::Identity(n, n)); }

UnitaryMatrix UnitaryMatrix::dft(int n) {
  if (n < 1) throw InvalidArgument("dft: size must be positive");
  CMatrix phi(n, n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      // reduce j*k mod n so the n = 2 case is exactly real
      const int jk = (j * k) % n;
      if (2 * jk == n) {
        phi(j, k) = -norm;
      } else if (jk == 0) {
        phi(j, k) = norm;
      } else {
        phi(j, k) = std::polar(norm, 2.0 * kPi * jk / n);
      }
    }
  }
  return UnitaryMatrix(std::move(phi));
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

MultimodeOperator tensor_product(std::span<const CMatrix> factors) {
  CMatrix out = CMatrix::Identity(1, 1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

CVector tensor_product(std::span<const CVector> factors) {
  CVector out = CVector::Ones(1);
  for (const auto& f : factors) {
    CVector next(out.size() * f.size());
    for (Eigen::Index i = 0; i < out.size(); ++i) next.segment(i * f.size(), f.size()) = out(i) * f;
    out = std::move(next);
  }
  return out;
}

CMatrix apply_on_mode(const CMatrix& op, int mode, const ModeSpace& space, const CMatrix& columns) {
  const Eigen::Index d = space.local_dim();
  if (op.rows() != d || op.cols() != d) throw InvalidArgument("apply_on_mode: factor has wrong size");
  if (columns.rows() != space.dim()) throw InvalidArgument("apply_on_mode: vector has wrong size");
  if (mode < 0 || mode >= space.modes()) throw InvalidArgument("apply_on_mode: mode out of range");

  Eigen::Index stride = 1;
  for (int j = mode + 1; j < space.modes(); ++j) stride *= d;
  const Eigen::Index outer = space.dim() / (stride * d);

  // Each (column, outer) slice is a column-major stride x d matrix whose
  // column p holds occupation p of this mode; the factor acts from the right.
  CMatrix out(columns.rows(), columns.cols());
  const CMatrix op_t = op.transpose();
  for (Eigen::Index c = 0; c < columns.cols(); ++c) {
    for (Eigen::Index o = 0; o < outer; ++o) {
      const Eigen::Index base = o * d * stride;
      Eigen::Map<const CMatrix> in(columns.col(c).data() + base, stride, d);
      Eigen::Map<CMatrix> dst(out.col(c).data() + base, stride, d);
      dst.noalias() = in * op_t;
    }
  }
  return out;
}

CMatrix apply_local(std::span<const CMatrix> factors, const ModeSpace& space, const CMatrix& columns) {
  if (static_cast<int>(factors.size()) != space.modes()) {
    throw InvalidArgument("apply_local: need one factor per mode");
  }
  CMatrix out = columns;
  for (int j = 0; j < space.modes(); ++j) out = apply_on_mode(factors[j], j, space, out);
  return out;
}

CMatrix restrict_block(const CMatrix& op, std::span<const Eigen::Index> indices) {
  const auto k = static_cast<Eigen::Index>(indices.size());
  CMatrix out(k, k);
  for (Eigen::Index a = 0; a < k; ++a) {
    for (Eigen::Index b = 0; b < k; ++b) out(a, b) = op(indices[a], indices[b]);
  }
  return out;
}

CVector restrict_block(const CVector& v, std::span<const Eigen::Index> indices) {
  CVector out(indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a) out(a) = v(indices[a]);
  return out;
}

cplx inner(const SingleParticleVector& g, const SingleParticleVector& f) {
  if (g.size() != f.size()) throw InvalidArgument("inner: length mismatch");
  return g.dot(f);  // Eigen's dot conjugates the left operand
}

namespace {

void require_coords(const SingleParticleVector& f, const ModeSpace& space) {
  if (f.size() != space.modes()) {
    throw InvalidArgument("single-particle vector has " + std::to_string(f.size()) +
                          " coordinates, space has " + std::to_string(space.modes()) + " modes");
  }
}

}  // namespace

MultimodeOperator weyl_operator(const SingleParticleVector& f, const ModeSpace& space) {
  require_coords(f, space);
  std::vector<CMatrix> factors;
  factors.reserve(f.size());
  for (Eigen::Index j = 0; j < f.size(); ++j) factors.push_back(displacement_matrix(f(j), space.cutoff()));
  return tensor_product(factors);
}

cplx weyl_phase(const SingleParticleVector& f, const SingleParticleVector& g) {
  // [a^dag(f) - a(f), a^dag(g) - a(g)] = (g,f) - (f,g) = 2i Im(g,f)
  return std::polar(1.0, std::imag(inner(g, f)));
}

int weyl_trusted_cutoff(const ModeSpace& space, double magnitude, double tolerance) {
  return trusted_cutoff(space.cutoff().max_occupation(), magnitude, tolerance / space.modes());
}

MultimodeState exponential_vector_embed(const SingleParticleVector& f, const ModeSpace& space) {
  require_coords(f, space);
  std::vector<CVector> factors;
  factors.reserve(f.size());
  for (Eigen::Index j = 0; j < f.size(); ++j) factors.push_back(coherent_state(f(j), space.cutoff()));
  return MultimodeState{tensor_product(factors), 0.5 * f.squaredNorm()};
}

cplx state_inner(const MultimodeState& a, const MultimodeState& b) {
  return std::exp(a.log_scale + b.log_scale) * a.amplitudes.dot(b.amplitudes);
}

WeylActionCheck apply_weyl_to_exponential_check(const SingleParticleVector& f,
                                                const SingleParticleVector& g,
                                                const ModeSpace& space) {
  require_coords(f, space);
  require_coords(g, space);
  const MultimodeState eg = exponential_vector_embed(g, space);
  const CVector lhs = weyl_operator(f, space) * eg.physical();

  const MultimodeState efg = exponential_vector_embed(f + g, space);
  const cplx factor = std::exp(-0.5 * f.squaredNorm() - inner(f, g));
  const CVector rhs = factor * efg.physical();

  WeylActionCheck out;
  const double magnitude = std::max(f.cwiseAbs().maxCoeff(), g.cwiseAbs().maxCoeff());
  out.trusted_cutoff = weyl_trusted_cutoff(space, magnitude, 0.25 * kTruncationTolerance);
  const auto block = space.trusted_indices(out.trusted_cutoff);
  for (Eigen::Index i : block) out.deviation = std::max(out.deviation, std::abs(lhs(i) - rhs(i)));
  return out;
}

MultimodeState creation_poly_state(const SingleParticleVector& c, int k, const ModeSpace& space) {
  require_coords(c, space);
  if (std::abs(c.norm() - 1.0) > 1e-12) throw InvalidArgument("creation_poly_state: c must be a unit vector");
  if (k < 0 || k > space.cutoff().max_occupation()) {
    throw InvalidArgument("creation_poly_state: k must lie in [0, N]");
  }
  const double log_kfact = std::lgamma(k + 1.0);
  CVector amps = CVector::Zero(space.dim());
  for (Eigen::Index i = 0; i < space.dim(); ++i) {
    const auto occ = space.tuple_of(i);
    if (std::accumulate(occ.begin(), occ.end(), 0) != k) continue;
    double log_coef = 0.5 * log_kfact;
    cplx prod = 1.0;
    for (int j = 0; j < space.modes(); ++j) {
      log_coef -= 0.5 * std::lgamma(occ[j] + 1.0);
      for (int p = 0; p < occ[j]; ++p) prod *= c(j);
    }
    amps(i) = std::exp(log_coef) * prod;
  }
  return MultimodeState{std::move(amps), 0.0};
}

MultimodeOperator mode_ladder(const ModeSpace& space, int mode, Ladder kind) {
  if (mode < 0 || mode >= space.modes()) throw InvalidArgument("mode_ladder: mode out of range");
  const CMatrix a = annihilation(space.cutoff());
  std::vector<CMatrix> factors(space.modes(), CMatrix::Identity(space.local_dim(), space.local_dim()));
  factors[mode] = kind == Ladder::kAnnihilate ? a : CMatrix(a.adjoint());
  return tensor_product(factors);
}

}  // namespace fockgraph

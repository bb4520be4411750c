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

#include <span>
#include <vector>

#include "fockgraph/core.hpp"

namespace fockgraph {

/// Coordinates (alpha_1, ..., alpha_n) of a one-particle vector in the fixed
/// orthonormal basis f_1..f_n.
using SingleParticleVector = CVector;

/// n modes, each truncated at the same occupation N. Flat indices are
/// row-major over occupation tuples with mode 0 slowest.
class ModeSpace {
 public:
  ModeSpace(int modes, Cutoff cutoff);

  int modes() const { return modes_; }
  Cutoff cutoff() const { return cutoff_; }
  int local_dim() const { return cutoff_.dim(); }
  Eigen::Index dim() const { return dim_; }

  Eigen::Index index_of(std::span<const int> occupations) const;
  std::vector<int> tuple_of(Eigen::Index index) const;

  /// Indices whose largest per-mode occupation is <= max_occupation.
  std::vector<Eigen::Index> trusted_indices(int max_occupation) const;
  /// Indices whose total occupation is <= total.
  std::vector<Eigen::Index> photon_number_indices(int total) const;

  friend bool operator==(const ModeSpace&, const ModeSpace&) = default;

 private:
  int modes_;
  Cutoff cutoff_;
  Eigen::Index dim_;
};

/// Vector e^{log_scale} * amplitudes. The separate scale keeps exponential
/// vectors of large norm representable.
struct MultimodeState {
  CVector amplitudes;
  double log_scale = 0.0;

  CVector physical() const { return std::exp(log_scale) * amplitudes; }
};

/// An n x n matrix checked to be unitary at construction (max-norm of
/// U^dag U - I within 1e-12).
class UnitaryMatrix {
 public:
  static constexpr double kTolerance = 1e-12;

  explicit UnitaryMatrix(CMatrix phi);

  static UnitaryMatrix identity(int n);
  /// Discrete Fourier transform, entries e^{2 pi i j k / n} / sqrt(n).
  static UnitaryMatrix dft(int n);

  int size() const { return static_cast<int>(phi_.rows()); }
  const CMatrix& matrix() const { return phi_; }
  cplx operator()(int j, int k) const { return phi_(j, k); }
  CVector column(int k) const { return phi_.col(k); }

 private:
  CMatrix phi_;
};

/// Raised by UnitaryMatrix when the input fails the unitarity check.
class NotUnitary : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

CMatrix kron(const CMatrix& a, const CMatrix& b);
MultimodeOperator tensor_product(std::span<const CMatrix> factors);
CVector tensor_product(std::span<const CVector> factors);

/// Applies the tensor-local operator factors[0] x ... x factors[n-1] to every
/// column of `columns` without forming the Kronecker product.
CMatrix apply_local(std::span<const CMatrix> factors, const ModeSpace& space, const CMatrix& columns);

/// Applies `op` to mode `mode` only.
CMatrix apply_on_mode(const CMatrix& op, int mode, const ModeSpace& space, const CMatrix& columns);

/// Rows and columns of `op` restricted to `indices`.
CMatrix restrict_block(const CMatrix& op, std::span<const Eigen::Index> indices);
CVector restrict_block(const CVector& v, std::span<const Eigen::Index> indices);

/// (g, f) = sum_j conj(g_j) f_j.
cplx inner(const SingleParticleVector& g, const SingleParticleVector& f);

/// W(f) realised as the product of single-mode displacements D(f_j).
MultimodeOperator weyl_operator(const SingleParticleVector& f, const ModeSpace& space);

/// Phase in W(f) W(g) = phase * W(f+g), equal to e^{i Im(g,f)} with the
/// inner product antilinear in its first argument. For one mode this is
/// displacement_compose_phase(f_0, g_0).
cplx weyl_phase(const SingleParticleVector& f, const SingleParticleVector& g);

/// Per-mode trusted cutoff for products of two Weyl operators whose
/// coordinates are at most `magnitude` in modulus. A product of n per-mode
/// factors, each within eps of exact and bounded by 1, is within n eps, so
/// each mode gets tolerance / n.
int weyl_trusted_cutoff(const ModeSpace& space, double magnitude,
                        double tolerance = kTruncationTolerance);

/// Exponential vector e(f) in the product-of-coherent-states frame:
/// amplitudes are the product of coherent_state(f_j), log_scale = |f|^2 / 2.
MultimodeState exponential_vector_embed(const SingleParticleVector& f, const ModeSpace& space);

/// <a, b> including both scale factors.
cplx state_inner(const MultimodeState& a, const MultimodeState& b);

struct WeylActionCheck {
  double deviation = 0.0;
  int trusted_cutoff = 0;
};

/// Compares W(f) e(g) against e^{-|f|^2/2 - (f,g)} e(f+g) on tuples whose
/// occupations all lie in the trusted block of the largest |f_j|, |g_j|. The prefactor equals
/// e^{-|f|^2/2} weyl_phase(f, g) e^{-Re(f,g)}; it reduces to e^{-|f|^2/2} at g = 0.
WeylActionCheck apply_weyl_to_exponential_check(const SingleParticleVector& f,
                                                const SingleParticleVector& g,
                                                const ModeSpace& space);

/// (sum_j c_j a_j^dag)^k / sqrt(k!) |vac>, from the multinomial expansion.
/// Requires |c| = 1 within 1e-12 and 0 <= k <= N.
MultimodeState creation_poly_state(const SingleParticleVector& c, int k, const ModeSpace& space);

enum class Ladder { kCreate, kAnnihilate };

/// Truncated a_j or a_j^dag on the full space; `mode` is zero-based.
MultimodeOperator mode_ladder(const ModeSpace& space, int mode, Ladder kind);

}  // namespace fockgraph

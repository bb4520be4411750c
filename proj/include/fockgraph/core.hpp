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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace fockgraph {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Dense operator on a truncated single-mode Fock space, (N+1) x (N+1).
using SingleModeOperator = CMatrix;
/// Fock-basis amplitudes <n|psi>, n = 0..N.
using SingleModeState = CVector;
/// Dense operator on the (N+1)^n dimensional truncated multimode space.
using MultimodeOperator = CMatrix;

inline constexpr double kPi = 3.14159265358979323846;

/// Entrywise tolerance for identities that hold exactly in closed form.
inline constexpr double kExactTolerance = 1e-10;
/// Entrywise tolerance for identities limited by Fock-space truncation.
inline constexpr double kTruncationTolerance = 1e-8;

/// Raised when an argument violates an operation's precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Per-mode photon-number cutoff N; the truncated space has dimension N+1.
class Cutoff {
 public:
  explicit Cutoff(int max_occupation) : n_(max_occupation) {
    if (max_occupation < 0) {
      throw InvalidArgument("cutoff must be non-negative, got " + std::to_string(max_occupation));
    }
  }

  int max_occupation() const { return n_; }
  int dim() const { return n_ + 1; }

  friend bool operator==(const Cutoff&, const Cutoff&) = default;

 private:
  int n_;
};

/// A phase-space point alpha = r e^{i theta}, with theta normalised into [0, 2 pi).
struct PhasePoint {
  double r = 0.0;
  double theta = 0.0;

  static PhasePoint from_polar(double r, double theta);
  static PhasePoint from_complex(cplx alpha);
  cplx alpha() const { return std::polar(r, theta); }
};

/// Max-norm of the difference between two equally sized matrices.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// Makes op Hermitian by copying the conjugated strict lower triangle upward
/// and dropping the imaginary part of the diagonal.
void fill_upper_from_lower(CMatrix& op);

}  // namespace fockgraph

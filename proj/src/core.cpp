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

#include "fockgraph/core.hpp"

#include <cmath>

namespace fockgraph {

PhasePoint PhasePoint::from_polar(double r, double theta) {
  if (!(r >= 0.0)) throw InvalidArgument("phase point radius must be non-negative");
  double t = std::fmod(theta, 2.0 * kPi);
  if (t < 0.0) t += 2.0 * kPi;
  if (t >= 2.0 * kPi) t = 0.0;
  return PhasePoint{r, t};
}

PhasePoint PhasePoint::from_complex(cplx alpha) {
  return from_polar(std::abs(alpha), std::arg(alpha));
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidArgument("max_abs_diff: shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

void fill_upper_from_lower(CMatrix& op) {
  for (Eigen::Index n = 0; n < op.cols(); ++n) {
    op(n, n) = cplx(op(n, n).real(), 0.0);
    for (Eigen::Index m = n + 1; m < op.rows(); ++m) op(n, m) = std::conj(op(m, n));
  }
}

}  // namespace fockgraph

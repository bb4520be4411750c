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

#include "fockgraph/core.hpp"

namespace fockgraph {

/// Generalised Laguerre polynomial L_n^{(k)}(x) by the upward three-term
/// recurrence in n.
double assoc_laguerre(int n, int k, double x);

/// Truncated coherent state |alpha>: entry n is e^{-|alpha|^2/2} alpha^n / sqrt(n!).
/// The squared norm falls short of 1 by the Poisson(|alpha|^2) tail above N.
SingleModeState coherent_state(cplx alpha, Cutoff cutoff);

/// Exact matrix elements <m|D(alpha)|n> for m, n <= N, where
/// D(alpha) = exp(alpha a^dag - conj(alpha) a).
///
/// Entries are the infinite-dimensional values (not the exponential of the
/// truncated generator), so the block is not unitary near the cutoff. The
/// upper triangle is built from D(alpha)^dag = D(-alpha), which makes that
/// relation hold bit-for-bit.
SingleModeOperator displacement_matrix(cplx alpha, Cutoff cutoff);

/// Single exact element <m|D(alpha)|n>, any m, n >= 0.
cplx displacement_element(cplx alpha, int m, int n);

/// sum_{k > cutoff} |<k|D(alpha)|column>|^2 for |alpha| = magnitude: the
/// weight that D(alpha)|column> loses to truncation at `cutoff`.
double displacement_leakage(double magnitude, int column, int cutoff);

/// Largest t such that every column m <= t leaks at most `tolerance` at
/// `cutoff`; -1 if even the vacuum leaks more. The entry (m, n) of a product
/// of two truncated displacements misses sum_{k > N} of terms bounded by
/// sqrt(leak_m leak_n), so on the block m, n <= t it is off by <= tolerance.
int trusted_cutoff(int cutoff, double magnitude, double tolerance = kTruncationTolerance);

/// Smallest working cutoff L >= top such that every column m <= top leaks at
/// most `tolerance` at L.
int required_cutoff(int top, double magnitude, double tolerance);

/// <beta|alpha> = exp(-|alpha|^2/2 - |beta|^2/2 + conj(beta) alpha).
cplx coherent_overlap(cplx alpha, cplx beta);

/// Phase in D(alpha) D(beta) = phase * D(alpha + beta).
cplx displacement_compose_phase(cplx alpha, cplx beta);

/// Smallest buffer accepted by expm_displacement_oracle for a given |alpha|.
int min_oracle_buffer(double magnitude);

/// Reference D(alpha): exponentiates alpha a^dag - conj(alpha) a truncated at
/// N + buffer by scaling and squaring, then keeps the leading (N+1) block.
/// Throws InvalidArgument if buffer < min_oracle_buffer(|alpha|).
SingleModeOperator expm_displacement_oracle(cplx alpha, Cutoff cutoff, int buffer);

/// Truncated annihilation operator a on N+1 levels.
SingleModeOperator annihilation(Cutoff cutoff);

}  // namespace fockgraph

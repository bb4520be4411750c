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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "fockgraph/fock_mode.hpp"

namespace fockgraph {
namespace {

// Poisson(lambda) pmf by running products, no lgamma.
std::vector<double> poisson_pmf(double lambda, int up_to) {
  std::vector<double> p(up_to + 1);
  p[0] = std::exp(-lambda);
  for (int n = 1; n <= up_to; ++n) p[n] = p[n - 1] * lambda / n;
  return p;
}

double poisson_tail(double lambda, int above) {
  const auto p = poisson_pmf(lambda, above + 400);
  double tail = 0.0;
  for (int n = static_cast<int>(p.size()) - 1; n > above; --n) tail += p[n];
  return tail;
}

// Explicit sum L_n^(k)(x) = sum_i (-1)^i C(n+k, n-i) x^i / i!, plus the sum
// of |terms| as a conditioning scale.
std::pair<long double, long double> laguerre_direct(int n, int k, long double x) {
  long double value = 0.0L;
  long double scale = 0.0L;
  for (int i = 0; i <= n; ++i) {
    long double binom = 1.0L;
    for (int j = 1; j <= n - i; ++j) binom = binom * (k + i + j) / j;
    long double term = binom;
    for (int j = 1; j <= i; ++j) term = term * x / j;
    if (i % 2) term = -term;
    value += term;
    scale += std::fabs(term);
  }
  return {value, scale};
}

TEST(Cutoff, RejectsNegative) {
  EXPECT_THROW(Cutoff(-1), InvalidArgument);
  EXPECT_EQ(Cutoff(4).dim(), 5);
}

TEST(PhasePoint, NormalisesAngle) {
  const PhasePoint p = PhasePoint::from_polar(2.0, -kPi / 2);
  EXPECT_NEAR(p.theta, 1.5 * kPi, 1e-15);
  EXPECT_NEAR(std::abs(p.alpha() - cplx(0.0, -2.0)), 0.0, 1e-15);
  EXPECT_THROW(PhasePoint::from_polar(-1.0, 0.0), InvalidArgument);
}

TEST(AssocLaguerre, MatchesExplicitSum) {
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= 12; ++k) {
      for (double x : {0.0, 0.3, 1.0, 2.5, 7.0, 13.0, 25.0}) {
        const auto [ref, scale] = laguerre_direct(n, k, x);
        EXPECT_LE(std::abs(assoc_laguerre(n, k, x) - static_cast<double>(ref)),
                  1e-10 * static_cast<double>(std::max(std::fabs(ref), 1e-3L * scale)))
            << "n=" << n << " k=" << k << " x=" << x;
      }
    }
  }
}

TEST(CoherentState, Vacuum) {
  const SingleModeState psi = coherent_state(0.0, Cutoff(4));
  SingleModeState expected = SingleModeState::Zero(5);
  expected(0) = 1.0;
  EXPECT_EQ(psi, expected);
}

TEST(CoherentState, VacuumAmplitude) {
  for (int n : {0, 3, 12}) EXPECT_NEAR(coherent_state(1.0, Cutoff(n))(0).real(), 0.6065306597, 1e-10);
}

TEST(CoherentState, PoissonMasses) {
  for (cplx alpha : {cplx(1.0, 0.0), cplx(-0.4, 1.3), cplx(0.0, 2.0)}) {
    const auto p = poisson_pmf(std::norm(alpha), 30);
    const SingleModeState psi = coherent_state(alpha, Cutoff(30));
    for (int n = 0; n <= 30; ++n) EXPECT_NEAR(std::norm(psi(n)), p[n], 1e-14 * std::max(p[n], 1e-3));
  }
}

TEST(CoherentState, NormDeficitIsPoissonTail) {
  for (double r : {0.5, 1.0, 2.0}) {
    for (int n : {8, 12, 20}) {
      const double deficit = 1.0 - coherent_state(std::polar(r, 0.4), Cutoff(n)).squaredNorm();
      EXPECT_NEAR(deficit, poisson_tail(r * r, n), 1e-15) << "r=" << r << " N=" << n;
    }
  }
  EXPECT_GE(coherent_state(1.0, Cutoff(16)).squaredNorm(), 1.0 - 1e-12);
}

TEST(CoherentState, PhaseOfEntries) {
  const cplx alpha(0.3, -0.8);
  const SingleModeState psi = coherent_state(alpha, Cutoff(6));
  double fact = 1.0;
  for (int n = 0; n <= 6; ++n) {
    if (n > 0) fact *= n;
    const cplx expected = std::exp(-0.5 * std::norm(alpha)) * std::pow(alpha, n) / std::sqrt(fact);
    EXPECT_NEAR(std::abs(psi(n) - expected), 0.0, 1e-15);
  }
}

TEST(Displacement, ZeroIsIdentity) {
  const SingleModeOperator d = displacement_matrix(0.0, Cutoff(6));
  EXPECT_EQ(d, SingleModeOperator::Identity(7, 7));
}

TEST(Displacement, FirstColumnIsCoherentState) {
  for (cplx alpha : {cplx(1.0, 0.0), cplx(0.7, -1.1), cplx(0.0, 2.0)}) {
    const Cutoff c(15);
    EXPECT_LE(max_abs_diff(displacement_matrix(alpha, c).col(0), coherent_state(alpha, c)), 1e-15);
  }
}

TEST(Displacement, VacuumElement) {
  EXPECT_NEAR(displacement_matrix(1.0, Cutoff(4))(0, 0).real(), 0.6065306597, 1e-10);
  EXPECT_NEAR(expm_displacement_oracle(1.0, Cutoff(4), 20)(0, 0).real(), 0.6065306597, 1e-10);
}

TEST(Displacement, AdjointIsNegatedArgumentExactly) {
  for (cplx alpha : {cplx(0.4, 0.9), cplx(-1.7, 0.2), cplx(0.0, -2.0)}) {
    const SingleModeOperator d = displacement_matrix(alpha, Cutoff(12));
    const SingleModeOperator adj = d.adjoint();
    EXPECT_TRUE(adj == displacement_matrix(-alpha, Cutoff(12)));
  }
}

TEST(Displacement, ElementMatchesMatrix) {
  const cplx alpha(0.6, -1.2);
  const SingleModeOperator d = displacement_matrix(alpha, Cutoff(9));
  for (int m = 0; m <= 9; ++m)
    for (int n = 0; n <= 9; ++n) EXPECT_EQ(displacement_element(alpha, m, n), d(m, n));
}

TEST(Displacement, MatchesExpmOracle) {
  EXPECT_LE(max_abs_diff(displacement_matrix(1.0, Cutoff(8)), expm_displacement_oracle(1.0, Cutoff(8), 16)),
            1e-10);
  for (double r : {0.5, 1.0, 1.5, 2.0}) {
    for (double th : {0.0, 1.1, 2.9, 4.4}) {
      const cplx alpha = std::polar(r, th);
      EXPECT_LE(max_abs_diff(displacement_matrix(alpha, Cutoff(8)),
                             expm_displacement_oracle(alpha, Cutoff(8), 24)),
                1e-10)
          << alpha;
    }
  }
}

TEST(ExpmOracle, ZeroIsIdentity) {
  EXPECT_LE(max_abs_diff(expm_displacement_oracle(0.0, Cutoff(5), 0), SingleModeOperator::Identity(6, 6)),
            1e-16);
}

TEST(ExpmOracle, VacuumColumnIsCoherent) {
  const cplx alpha(0.0, 2.0);
  EXPECT_LE(max_abs_diff(expm_displacement_oracle(alpha, Cutoff(6), 24).col(0), coherent_state(alpha, Cutoff(6))),
            1e-10);
}

TEST(ExpmOracle, RejectsSmallBuffer) {
  EXPECT_EQ(min_oracle_buffer(1.0), 8);
  EXPECT_THROW(expm_displacement_oracle(1.0, Cutoff(8), 7), InvalidArgument);
  EXPECT_NO_THROW(expm_displacement_oracle(1.0, Cutoff(8), 8));
}

TEST(Leakage, VacuumColumnIsPoissonTail) {
  for (double r : {0.5, 1.0, 2.0}) {
    for (int n : {4, 10, 20}) {
      const double tail = poisson_tail(r * r, n);
      EXPECT_NEAR(displacement_leakage(r, 0, n), tail, 1e-12 * tail + 1e-300);
    }
  }
}

TEST(Leakage, ColumnNormDeficit) {
  // For a moderate cutoff the deficit 1 - sum_{k<=N} |D_km|^2 is large enough
  // to be resolved directly.
  const double r = 1.3;
  const SingleModeOperator d = displacement_matrix(r, Cutoff(8));
  for (int m = 0; m <= 8; ++m) {
    EXPECT_NEAR(displacement_leakage(r, m, 8), 1.0 - d.col(m).squaredNorm(), 1e-13);
  }
}

TEST(TrustedBlock, UnitarityHolds) {
  for (double r : {0.5, 1.0, 1.5, 2.0}) {
    for (int n : {20, 24, 30}) {
      const cplx alpha = std::polar(r, 0.9);
      const int t = trusted_cutoff(n, r);
      ASSERT_LE(t, n);
      if (t < 0) continue;
      const SingleModeOperator d = displacement_matrix(alpha, Cutoff(n));
      const CMatrix gram = (d.adjoint() * d).topLeftCorner(t + 1, t + 1);
      EXPECT_LE(max_abs_diff(gram, CMatrix::Identity(t + 1, t + 1)), kTruncationTolerance)
          << "r=" << r << " N=" << n << " t=" << t;
    }
  }
}

TEST(TrustedBlock, GrowsWithCutoffAndShrinksWithAmplitude) {
  EXPECT_LT(trusted_cutoff(20, 1.0), trusted_cutoff(30, 1.0));
  EXPECT_GT(trusted_cutoff(24, 0.5), trusted_cutoff(24, 2.0));
  EXPECT_EQ(trusted_cutoff(10, 0.0), 10);
}

TEST(TrustedBlock, CompositionLaw) {
  const int n = 24;
  for (auto [a, b] : {std::pair{cplx(0.3, 0.8), cplx(-0.5, 0.2)}, std::pair{cplx(1.0, 0.0), cplx(0.0, 1.0)},
                      std::pair{cplx(-0.2, -1.1), cplx(0.6, 0.4)}}) {
    const double mag = std::max(std::abs(a), std::abs(b));
    const int t = trusted_cutoff(n, mag);
    ASSERT_GE(t, 0);
    const Cutoff c(n);
    const CMatrix lhs = displacement_matrix(a, c) * displacement_matrix(b, c);
    const CMatrix rhs = displacement_compose_phase(a, b) * displacement_matrix(a + b, c);
    EXPECT_LE(max_abs_diff(lhs.topLeftCorner(t + 1, t + 1), rhs.topLeftCorner(t + 1, t + 1)),
              kTruncationTolerance);
  }
}

TEST(CoherentOverlap, SelfOverlapHasUnitModulus) {
  for (cplx a : {cplx(0.0), cplx(1.0, 1.0), cplx(-2.0, 0.5)}) EXPECT_NEAR(std::abs(coherent_overlap(a, a)), 1.0, 1e-15);
}

TEST(CoherentOverlap, KnownModulus) {
  EXPECT_NEAR(std::norm(coherent_overlap(0.0, 1.0)), 0.3678794412, 1e-10);
  const cplx a(0.3, -1.2), b(1.1, 0.4);
  EXPECT_NEAR(std::norm(coherent_overlap(a, b)), std::exp(-std::norm(a - b)), 1e-15);
}

TEST(CoherentOverlap, MatchesTruncatedDotProduct) {
  const Cutoff c(40);
  for (auto [a, b] : {std::pair{cplx(1.0, 0.5), cplx(-0.7, 1.4)}, std::pair{cplx(2.0, 0.0), cplx(0.0, -2.0)},
                      std::pair{cplx(-1.2, -1.1), cplx(1.3, 0.9)}}) {
    // <b|a> with the inner product antilinear in the first slot
    const cplx numeric = coherent_state(b, c).dot(coherent_state(a, c));
    EXPECT_LE(std::abs(numeric - coherent_overlap(a, b)), 1e-12);
  }
}

TEST(ComposePhase, Values) {
  EXPECT_EQ(displacement_compose_phase(cplx(0.4, 0.3), 0.0), cplx(1.0));
  EXPECT_NEAR(std::abs(displacement_compose_phase(0.7, -1.9) - 1.0), 0.0, 1e-16);
  const cplx p = displacement_compose_phase(1.0, cplx(0.0, 1.0));
  EXPECT_NEAR(p.real(), 0.5403023059, 1e-10);
  EXPECT_NEAR(p.imag(), -0.8414709848, 1e-10);
}

TEST(Annihilation, LowersOccupation) {
  const SingleModeOperator a = annihilation(Cutoff(5));
  EXPECT_DOUBLE_EQ(a(1, 2).real(), std::sqrt(2.0));
  const CMatrix comm = a * a.adjoint() - a.adjoint() * a;
  for (int m = 0; m < 5; ++m) EXPECT_NEAR(comm(m, m).real(), 1.0, 1e-15);
}

}  // namespace
}  // namespace fockgraph

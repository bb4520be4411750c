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

#include <vector>

#include "fockgraph/multimode.hpp"
#include "fockgraph/quadrature.hpp"

namespace fockgraph {

/// A truncated instance of the operator graph built from an n x n unitary.
///
/// `cutoff` bounds the photon number k of the rank-one terms |v_k><v_k| and
/// is the nominal per-mode truncation. Displaced code vectors spill above it,
/// so operators live on a working space with per-mode cutoff
/// cutoff + headroom. Headroom 0 is plain truncation at N.
class GraphSpec {
 public:
  GraphSpec(UnitaryMatrix phi, Cutoff cutoff, int headroom = 0);

  const UnitaryMatrix& phi() const { return phi_; }
  int modes() const { return phi_.size(); }
  Cutoff cutoff() const { return cutoff_; }
  int headroom() const { return headroom_; }

  ModeSpace code_space() const { return ModeSpace(modes(), cutoff_); }
  ModeSpace working_space() const {
    return ModeSpace(modes(), Cutoff(cutoff_.max_occupation() + headroom_));
  }

  GraphSpec with_headroom(int headroom) const { return GraphSpec(phi_, cutoff_, headroom); }

 private:
  UnitaryMatrix phi_;
  Cutoff cutoff_;
  int headroom_;
};

/// Headroom under which code vectors displaced by per-mode amplitudes up to
/// `magnitude` lose at most `tolerance` of their weight to truncation.
int recommended_headroom(Cutoff cutoff, double magnitude, double tolerance = 1e-13);

/// (R, Theta): radial amplitudes and phases for columns 2..n of phi.
struct GeneratorParams {
  std::vector<double> radii;
  std::vector<double> phases;
};

/// (X, Gamma) labelling an anticlique projection.
struct AnticliqueParams {
  std::vector<double> amplitudes;
  std::vector<double> phases;

  GeneratorParams as_generator() const { return GeneratorParams{amplitudes, phases}; }
};

enum class Backend { kDirect, kRank };

const char* to_string(Backend backend);

struct GraphElement {
  MultimodeOperator op;
  GeneratorParams params;
  Backend backend;
};

/// Throws InvalidArgument unless both lists have length n-1 and radii >= 0.
void validate(const GraphSpec& spec, const GeneratorParams& params);

/// h_j = sum_{k>=2} e^{i theta_k} r_k phi_{j,k}.
SingleParticleVector displacement_coords(const GraphSpec& spec, const GeneratorParams& params);

/// Columns v_0..v_N (creation_poly_state of phi's first column) on the working space.
CMatrix code_vectors(const GraphSpec& spec);

/// Columns u_k = D_{R,Theta,phi} v_k: the rank factors of a graph generator.
CMatrix displaced_code_vectors(const GraphSpec& spec, const GeneratorParams& params);

/// Q_phi = sum_k |v_k><v_k|, an exact orthogonal projection of rank N+1.
MultimodeOperator q_phi(const GraphSpec& spec);

/// Q_phi from the phase-space integral of products of coherent states
/// |r e^{i theta} phi_{j,1}>; agrees with q_phi on tuples of total
/// occupation <= N when the scheme is exact there.
MultimodeOperator q_phi_quadrature(const GraphSpec& spec, const PolarScheme& scheme);

/// Product of single-mode D(h_j) on the working space.
MultimodeOperator d_displacement(const GraphSpec& spec, const GeneratorParams& params);

/// D op D^dag with D = d_displacement(spec, params), applied factor by factor.
MultimodeOperator conjugate_displaced(const GraphSpec& spec, const GeneratorParams& params,
                                      const MultimodeOperator& op);

/// Largest |h_j| over the displacement coordinates of `params`.
double max_mode_displacement(const GraphSpec& spec, const GeneratorParams& params);

/// D Q_phi D^dag. The direct backend conjugates the dense projection; the rank
/// backend sums |u_k><u_k|. Both give the same operator up to rounding.
GraphElement graph_generator(const GraphSpec& spec, const GeneratorParams& params, Backend backend);

/// P_{phi,Gamma,X}: the graph generator at parameters (X, Gamma), rank backend.
MultimodeOperator anticlique_projection(const GraphSpec& spec, const AnticliqueParams& ap);

/// prod_k |<r_{k+1} e^{i theta_{k+1}} | X_k e^{i Gamma_k}>|^2
///   = prod_k exp(-|r_{k+1} e^{i theta_{k+1}} - X_k e^{i Gamma_k}|^2).
double anticlique_constant(const AnticliqueParams& ap, const GeneratorParams& gp);

struct CompressionReport {
  cplx scalar_measured;    // tr(PAP) / tr(P)
  cplx scalar_predicted;   // sum_i w_i C_i
  double frobenius_deviation = 0.0;  // |PAP - cP|_F / |P|_F
  double scalar_relative_error = 0.0;
};

/// Checks P A P = c P for A = sum_i weights[i] G_i, working on the rank factors
/// through (N+1) x (N+1) Gram matrices. `weights` empty means all ones.
CompressionReport compression_check(const GraphSpec& spec, const AnticliqueParams& ap,
                                    const std::vector<GeneratorParams>& gps,
                                    const std::vector<cplx>& weights = {});

/// Same quantities from dense P and A, without a predicted constant.
CompressionReport compress_dense(const CMatrix& projection, const CMatrix& element);

/// max |A - A^dag|.
double hermiticity_defect(const CMatrix& op);
/// Smallest eigenvalue of the Hermitian part of op.
double min_eigenvalue(const CMatrix& op);

}  // namespace fockgraph

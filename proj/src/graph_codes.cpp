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

#include "fockgraph/graph_codes.hpp"

#include <cmath>

#include "fockgraph/fock_mode.hpp"

namespace fockgraph {

GraphSpec::GraphSpec(UnitaryMatrix phi, Cutoff cutoff, int headroom)
    : phi_(std::move(phi)), cutoff_(cutoff), headroom_(headroom) {
  if (headroom < 0) throw InvalidArgument("headroom must be non-negative");
}

int recommended_headroom(Cutoff cutoff, double magnitude, double tolerance) {
  if (magnitude <= 0.0) return 0;
  const int top = cutoff.max_occupation();
  return required_cutoff(top, magnitude, tolerance) - top;
}

const char* to_string(Backend backend) { return backend == Backend::kDirect ? "direct" : "rank"; }

void validate(const GraphSpec& spec, const GeneratorParams& params) {
  const std::size_t want = static_cast<std::size_t>(spec.modes() - 1);
  if (params.radii.size() != want || params.phases.size() != want) {
    throw InvalidArgument("generator parameters need " + std::to_string(want) + " radii and phases");
  }
  for (double r : params.radii) {
    if (!(r >= 0.0) || !std::isfinite(r)) throw InvalidArgument("generator radii must be finite and >= 0");
  }
  for (double t : params.phases) {
    if (!std::isfinite(t)) throw InvalidArgument("generator phases must be finite");
  }
}

SingleParticleVector displacement_coords(const GraphSpec& spec, const GeneratorParams& params) {
  validate(spec, params);
  const int n = spec.modes();
  SingleParticleVector h = SingleParticleVector::Zero(n);
  for (int k = 1; k < n; ++k) {
    const cplx amp = std::polar(params.radii[k - 1], params.phases[k - 1]);
    for (int j = 0; j < n; ++j) h(j) += amp * spec.phi()(j, k);
  }
  return h;
}

CMatrix code_vectors(const GraphSpec& spec) {
  const ModeSpace space = spec.working_space();
  const int count = spec.cutoff().dim();
  const CVector first = spec.phi().column(0);
  CMatrix v(space.dim(), count);
  for (int k = 0; k < count; ++k) v.col(k) = creation_poly_state(first, k, space).amplitudes;
  return v;
}

namespace {

std::vector<CMatrix> displacement_factors(const GraphSpec& spec, const GeneratorParams& params) {
  const SingleParticleVector h = displacement_coords(spec, params);
  const Cutoff work = spec.working_space().cutoff();
  std::vector<CMatrix> factors;
  factors.reserve(h.size());
  for (Eigen::Index j = 0; j < h.size(); ++j) factors.push_back(displacement_matrix(h(j), work));
  return factors;
}

CMatrix hermitian_outer(const CMatrix& u) {
  CMatrix out = CMatrix::Zero(u.rows(), u.rows());
  out.selfadjointView<Eigen::Lower>().rankUpdate(u);
  fill_upper_from_lower(out);
  return out;
}

}  // namespace

CMatrix displaced_code_vectors(const GraphSpec& spec, const GeneratorParams& params) {
  const auto factors = displacement_factors(spec, params);
  return apply_local(factors, spec.working_space(), code_vectors(spec));
}

MultimodeOperator q_phi(const GraphSpec& spec) { return hermitian_outer(code_vectors(spec)); }

MultimodeOperator q_phi_quadrature(const GraphSpec& spec, const PolarScheme& scheme) {
  const ModeSpace space = spec.working_space();
  const CVector first = spec.phi().column(0);
  CMatrix acc = CMatrix::Zero(space.dim(), space.dim());
  std::vector<CVector> kets(spec.modes());
  for (const PolarNode& node : scheme.nodes()) {
    const cplx alpha = node.alpha();
    for (int j = 0; j < spec.modes(); ++j) kets[j] = coherent_state(alpha * first(j), space.cutoff());
    // |first| = 1, so the product state carries exactly e^{-s/2}
    const CVector psi = std::exp(0.5 * node.s) * tensor_product(kets);
    acc.selfadjointView<Eigen::Lower>().rankUpdate(psi, node.weight);
  }
  fill_upper_from_lower(acc);
  return acc;
}

MultimodeOperator d_displacement(const GraphSpec& spec, const GeneratorParams& params) {
  return tensor_product(displacement_factors(spec, params));
}

GraphElement graph_generator(const GraphSpec& spec, const GeneratorParams& params, Backend backend) {
  if (backend == Backend::kRank) {
    return GraphElement{hermitian_outer(displaced_code_vectors(spec, params)), params, backend};
  }
  return GraphElement{conjugate_displaced(spec, params, q_phi(spec)), params, backend};
}

MultimodeOperator conjugate_displaced(const GraphSpec& spec, const GeneratorParams& params,
                                      const MultimodeOperator& op) {
  const auto factors = displacement_factors(spec, params);
  const ModeSpace space = spec.working_space();
  const CMatrix left = apply_local(factors, space, op);
  // (D (D op)^dag)^dag = D op D^dag
  return apply_local(factors, space, left.adjoint()).adjoint();
}

double max_mode_displacement(const GraphSpec& spec, const GeneratorParams& params) {
  const SingleParticleVector h = displacement_coords(spec, params);
  return h.size() == 0 ? 0.0 : h.cwiseAbs().maxCoeff();
}

MultimodeOperator anticlique_projection(const GraphSpec& spec, const AnticliqueParams& ap) {
  return graph_generator(spec, ap.as_generator(), Backend::kRank).op;
}

double anticlique_constant(const AnticliqueParams& ap, const GeneratorParams& gp) {
  if (ap.amplitudes.size() != gp.radii.size() || ap.phases.size() != gp.phases.size() ||
      ap.amplitudes.size() != ap.phases.size()) {
    throw InvalidArgument("anticlique_constant: parameter lists differ in length");
  }
  double exponent = 0.0;
  for (std::size_t k = 0; k < ap.amplitudes.size(); ++k) {
    exponent += std::norm(std::polar(gp.radii[k], gp.phases[k]) - std::polar(ap.amplitudes[k], ap.phases[k]));
  }
  return std::exp(-exponent);
}

namespace {

// Frobenius data of U X U^dag given the Gram matrix G = U^dag U:
// |U X U^dag|_F^2 = tr(X^dag G X G).
double factored_frobenius(const CMatrix& gram, const CMatrix& x) {
  return std::sqrt(std::max(0.0, (x.adjoint() * gram * x * gram).trace().real()));
}

}  // namespace

CompressionReport compression_check(const GraphSpec& spec, const AnticliqueParams& ap,
                                    const std::vector<GeneratorParams>& gps,
                                    const std::vector<cplx>& weights) {
  if (gps.empty()) throw InvalidArgument("compression_check: need at least one generator");
  if (!weights.empty() && weights.size() != gps.size()) {
    throw InvalidArgument("compression_check: weights and generators differ in length");
  }
  const CMatrix u = displaced_code_vectors(spec, ap.as_generator());
  const CMatrix gram = u.adjoint() * u;

  // U^dag A U accumulated in declaration order
  CMatrix middle = CMatrix::Zero(gram.rows(), gram.cols());
  cplx predicted = 0.0;
  for (std::size_t i = 0; i < gps.size(); ++i) {
    const cplx w = weights.empty() ? cplx(1.0) : weights[i];
    const CMatrix overlap = u.adjoint() * displaced_code_vectors(spec, gps[i]);
    middle += w * (overlap * overlap.adjoint());
    predicted += w * anticlique_constant(ap, gps[i]);
  }

  // With P = U U^dag: P A P - c P = U (M - c I) U^dag, M = U^dag A U.
  CompressionReport report;
  const CMatrix identity = CMatrix::Identity(gram.rows(), gram.cols());
  report.scalar_measured = (gram * middle).trace() / gram.trace().real();
  report.frobenius_deviation = factored_frobenius(gram, middle - report.scalar_measured * identity) /
                               factored_frobenius(gram, identity);
  report.scalar_predicted = predicted;
  report.scalar_relative_error = std::abs(report.scalar_measured - predicted) / std::abs(predicted);
  return report;
}

CompressionReport compress_dense(const CMatrix& projection, const CMatrix& element) {
  const CMatrix pap = projection * element * projection;
  CompressionReport report;
  report.scalar_measured = pap.trace() / projection.trace();
  report.frobenius_deviation = (pap - report.scalar_measured * projection).norm() / projection.norm();
  return report;
}

double hermiticity_defect(const CMatrix& op) { return max_abs_diff(op, op.adjoint()); }

double min_eigenvalue(const CMatrix& op) {
  const CMatrix herm = 0.5 * (op + op.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace fockgraph

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

#include "fockgraph/experiment.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <fstream>
#include <set>

#include "fockgraph/fock_mode.hpp"
#include "fockgraph/quadrature.hpp"
#include "fockgraph/random.hpp"
#include "fockgraph/resolution.hpp"

namespace fockgraph {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::array<std::pair<ExperimentKind, const char*>, 6> kKindNames{{
    {ExperimentKind::kGs, "gs"},
    {ExperimentKind::kCovariantGs, "covariant_gs"},
    {ExperimentKind::kProjection, "projection"},
    {ExperimentKind::kResolution, "resolution"},
    {ExperimentKind::kAnticlique, "anticlique"},
    {ExperimentKind::kConvergence, "convergence"},
}};

const std::set<std::string> kKnownFields{
    "experiment",   "n",        "cutoff", "phi",           "generator_params", "anticlique_params",
    "radial_order", "angular_order", "tolerance", "trusted_block", "seed", "cutoff_ladder",
    "beta",         "backend"};

// dense experiments hold ((N+1)^n)^2 complex entries
constexpr double kMaxDenseDim = 4096;

[[noreturn]] void fail(const std::string& msg) { throw ConfigError(msg); }

int get_int(const json& doc, const char* field) {
  const json& v = doc.at(field);
  if (!v.is_number_integer()) fail("field '" + std::string(field) + "' must be an integer");
  return v.get<int>();
}

double get_number(const json& v, const std::string& where) {
  if (!v.is_number()) fail(where + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(where + " must be finite");
  return x;
}

cplx get_complex(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    fail("malformed complex entry " + where + ": expected [re, im]");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

std::vector<double> get_reals(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where + " must be a list of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(get_number(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

void require_pairs(const std::vector<double>& xs, int n, const std::string& where) {
  if (static_cast<int>(xs.size()) != n - 1) {
    fail(where + " must hold n-1 = " + std::to_string(n - 1) + " values, got " + std::to_string(xs.size()));
  }
}

GeneratorParams parse_generator(const json& v, int n, const std::string& where) {
  if (!v.is_object() || !v.contains("R") || !v.contains("Theta")) {
    fail(where + " must be an object with fields 'R' and 'Theta'");
  }
  GeneratorParams p{get_reals(v["R"], where + ".R"), get_reals(v["Theta"], where + ".Theta")};
  require_pairs(p.radii, n, where + ".R");
  require_pairs(p.phases, n, where + ".Theta");
  for (double r : p.radii) {
    if (r < 0.0) fail(where + ".R must be non-negative");
  }
  return p;
}

AnticliqueParams parse_anticlique(const json& v, int n) {
  if (!v.is_object() || !v.contains("X") || !v.contains("Gamma")) {
    fail("anticlique_params must be an object with fields 'X' and 'Gamma'");
  }
  AnticliqueParams p{get_reals(v["X"], "anticlique_params.X"), get_reals(v["Gamma"], "anticlique_params.Gamma")};
  require_pairs(p.amplitudes, n, "anticlique_params.X");
  require_pairs(p.phases, n, "anticlique_params.Gamma");
  for (double x : p.amplitudes) {
    if (x < 0.0) fail("anticlique_params.X must be non-negative");
  }
  return p;
}

ordered_json complex_json(cplx z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json generator_json(const GeneratorParams& p) {
  return ordered_json{{"R", p.radii}, {"Theta", p.phases}};
}

GeneratorParams random_params(int pairs, CounterRng& rng) {
  GeneratorParams p;
  for (int k = 0; k < pairs; ++k) {
    p.radii.push_back(rng.uniform());
    p.phases.push_back(rng.uniform(0.0, 2.0 * kPi));
  }
  return p;
}

double dense_dim(int n, int cutoff) { return std::pow(cutoff + 1.0, n); }

struct Deviation {
  double max_abs = 0.0;
  double frobenius = 0.0;
};

Deviation from_identity(const CMatrix& block) {
  const CMatrix diff = block - CMatrix::Identity(block.rows(), block.cols());
  return {diff.size() ? diff.cwiseAbs().maxCoeff() : 0.0, diff.norm()};
}

Deviation resolution_deviation(const ExperimentConfig& cfg, int cutoff, Backend backend) {
  const GraphSpec spec(UnitaryMatrix(cfg.phi), Cutoff(cutoff));
  const PolarScheme scheme(cfg.effective_radial_order(), cfg.effective_angular_order());
  const CMatrix res = integrate_resolution(spec, {scheme}, backend);
  const auto block = spec.working_space().trusted_indices(cfg.effective_trusted_block());
  return from_identity(restrict_block(res, block));
}

}  // namespace

const char* to_string(ExperimentKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<ExperimentKind> parse_experiment_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (name == n) return k;
  }
  return std::nullopt;
}

double ExperimentConfig::effective_tolerance() const {
  if (tolerance) return *tolerance;
  switch (experiment) {
    case ExperimentKind::kGs: return 1e-12;
    case ExperimentKind::kCovariantGs: return 1e-6;
    case ExperimentKind::kProjection: return 1e-8;
    case ExperimentKind::kResolution: return 1e-10;
    case ExperimentKind::kAnticlique: return 1e-6;
    case ExperimentKind::kConvergence: return 1e-4;
  }
  return 1e-8;
}

int ExperimentConfig::effective_trusted_block() const {
  if (trusted_block) return *trusted_block;
  switch (experiment) {
    case ExperimentKind::kCovariantGs:
      return std::max(0, trusted_cutoff(cutoff, std::abs(effective_beta())));
    case ExperimentKind::kProjection:
    case ExperimentKind::kResolution:
      // max occupation <= N/n keeps the total occupation <= N
      return cutoff / n;
    case ExperimentKind::kConvergence: return 5;
    default: return cutoff;
  }
}

int ExperimentConfig::effective_radial_order() const {
  if (radial_order) return *radial_order;
  if (experiment == ExperimentKind::kConvergence) return 8;
  return std::min(cutoff + 1, kMaxRadialOrder);
}

int ExperimentConfig::effective_angular_order() const {
  if (angular_order) return *angular_order;
  if (experiment == ExperimentKind::kConvergence) return 24;
  return 2 * cutoff + 2;
}

Backend ExperimentConfig::effective_backend() const {
  if (backend) return *backend;
  return experiment == ExperimentKind::kConvergence ? Backend::kDirect : Backend::kRank;
}

std::vector<int> ExperimentConfig::effective_ladder() const {
  return cutoff_ladder.empty() ? std::vector<int>{12, 16, 20} : cutoff_ladder;
}

cplx ExperimentConfig::effective_beta() const { return beta.value_or(cplx(1.0, 0.0)); }

void ExperimentConfig::validate() const {
  if (n < 1) fail("n must be >= 1");
  if (cutoff < 4) fail("cutoff must be >= 4, got " + std::to_string(cutoff));
  if (phi.rows() != n || phi.cols() != n) fail("phi must be " + std::to_string(n) + "x" + std::to_string(n));
  try {
    UnitaryMatrix check(phi);
  } catch (const NotUnitary& e) {
    fail(e.what());
  }
  if (tolerance && !(*tolerance > 0.0)) fail("tolerance must be > 0");
  if (trusted_block && (*trusted_block < 0 || *trusted_block > cutoff)) {
    fail("trusted_block must lie in [0, cutoff]");
  }
  if (radial_order && (*radial_order < 1 || *radial_order > kMaxRadialOrder)) {
    fail("radial_order must lie in [1, " + std::to_string(kMaxRadialOrder) + "]");
  }
  if (angular_order && *angular_order < 1) fail("angular_order must be >= 1");
  for (const auto& g : generator_params) {
    if (static_cast<int>(g.radii.size()) != n - 1 || static_cast<int>(g.phases.size()) != n - 1) {
      fail("generator_params entries must hold n-1 values");
    }
  }
  if (anticlique_params && (static_cast<int>(anticlique_params->amplitudes.size()) != n - 1 ||
                            static_cast<int>(anticlique_params->phases.size()) != n - 1)) {
    fail("anticlique_params must hold n-1 values");
  }
  const bool needs_pairs = experiment == ExperimentKind::kResolution || experiment == ExperimentKind::kAnticlique ||
                           experiment == ExperimentKind::kConvergence;
  if (needs_pairs && n < 2) fail(std::string(to_string(experiment)) + " needs n >= 2");

  if (experiment == ExperimentKind::kConvergence) {
    const auto ladder = effective_ladder();
    for (int c : ladder) {
      if (c < 4) fail("cutoff_ladder entries must be >= 4");
      if (dense_dim(n, c) > kMaxDenseDim) fail("cutoff_ladder entry " + std::to_string(c) + " too large for n");
    }
    if (!std::is_sorted(ladder.begin(), ladder.end()) ||
        std::adjacent_find(ladder.begin(), ladder.end()) != ladder.end()) {
      fail("cutoff_ladder must be strictly increasing");
    }
    if (effective_trusted_block() > ladder.front()) fail("trusted_block must not exceed the smallest ladder cutoff");
  } else if (!cutoff_ladder.empty()) {
    fail("cutoff_ladder is only meaningful for the convergence experiment");
  }
  if ((experiment == ExperimentKind::kProjection || experiment == ExperimentKind::kResolution) &&
      dense_dim(n, cutoff) > kMaxDenseDim) {
    fail("(cutoff+1)^n exceeds " + std::to_string(static_cast<int>(kMaxDenseDim)) + " for a dense experiment");
  }
}

ExperimentConfig parse_config(const json& doc) {
  if (!doc.is_object()) fail("config must be a JSON object");
  for (const char* field : {"experiment", "n", "cutoff", "phi"}) {
    if (!doc.contains(field)) fail("missing required field '" + std::string(field) + "'");
  }
  for (const auto& item : doc.items()) {
    if (!kKnownFields.count(item.key())) fail("unknown field '" + item.key() + "'");
  }

  ExperimentConfig cfg;
  if (!doc["experiment"].is_string()) fail("field 'experiment' must be a string");
  const auto name = doc["experiment"].get<std::string>();
  const auto kind = parse_experiment_kind(name);
  if (!kind) fail("unknown experiment '" + name + "'");
  cfg.experiment = *kind;
  cfg.n = get_int(doc, "n");
  if (cfg.n < 1) fail("n must be >= 1");
  cfg.cutoff = get_int(doc, "cutoff");

  const json& phi = doc["phi"];
  if (!phi.is_array()) fail("phi must be a row-major list of [re, im] entries");
  const std::size_t want = static_cast<std::size_t>(cfg.n) * cfg.n;
  if (phi.size() != want) {
    fail("phi must hold n*n = " + std::to_string(want) + " entries, got " + std::to_string(phi.size()));
  }
  cfg.phi.resize(cfg.n, cfg.n);
  for (std::size_t i = 0; i < want; ++i) {
    cfg.phi(i / cfg.n, i % cfg.n) = get_complex(phi[i], "at phi[" + std::to_string(i) + "]");
  }

  if (doc.contains("generator_params")) {
    const json& g = doc["generator_params"];
    if (!g.is_array()) fail("generator_params must be a list");
    for (std::size_t i = 0; i < g.size(); ++i) {
      cfg.generator_params.push_back(parse_generator(g[i], cfg.n, "generator_params[" + std::to_string(i) + "]"));
    }
  }
  if (doc.contains("anticlique_params")) cfg.anticlique_params = parse_anticlique(doc["anticlique_params"], cfg.n);
  if (doc.contains("radial_order")) cfg.radial_order = get_int(doc, "radial_order");
  if (doc.contains("angular_order")) cfg.angular_order = get_int(doc, "angular_order");
  if (doc.contains("tolerance")) cfg.tolerance = get_number(doc["tolerance"], "field 'tolerance'");
  if (doc.contains("trusted_block")) cfg.trusted_block = get_int(doc, "trusted_block");
  if (doc.contains("seed")) {
    const json& seed = doc["seed"];
    if (!seed.is_number_integer() || (!seed.is_number_unsigned() && seed.get<std::int64_t>() < 0)) {
      fail("field 'seed' must be an unsigned integer");
    }
    cfg.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("cutoff_ladder")) {
    const json& l = doc["cutoff_ladder"];
    if (!l.is_array()) fail("cutoff_ladder must be a list of integers");
    for (const auto& c : l) {
      if (!c.is_number_integer()) fail("cutoff_ladder must be a list of integers");
      cfg.cutoff_ladder.push_back(c.get<int>());
    }
  }
  if (doc.contains("beta")) cfg.beta = get_complex(doc["beta"], "in field 'beta'");
  if (doc.contains("backend")) {
    const json& b = doc["backend"];
    if (b == "rank") {
      cfg.backend = Backend::kRank;
    } else if (b == "direct") {
      cfg.backend = Backend::kDirect;
    } else {
      fail("field 'backend' must be \"rank\" or \"direct\"");
    }
  }
  cfg.validate();
  return cfg;
}

std::vector<ExperimentConfig> parse_config_document(const json& doc) {
  std::vector<ExperimentConfig> out;
  if (doc.is_array()) {
    if (doc.empty()) fail("config list is empty");
    for (const auto& item : doc) out.push_back(parse_config(item));
  } else {
    out.push_back(parse_config(doc));
  }
  return out;
}

std::vector<ExperimentConfig> load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open config file '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    fail("config '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return parse_config_document(doc);
}

CMatrix dft2() { return UnitaryMatrix::dft(2).matrix(); }

std::vector<ExperimentConfig> default_suite(std::uint64_t seed) {
  std::vector<ExperimentConfig> out;
  for (ExperimentKind kind : {ExperimentKind::kGs, ExperimentKind::kCovariantGs, ExperimentKind::kProjection,
                              ExperimentKind::kResolution, ExperimentKind::kAnticlique}) {
    ExperimentConfig cfg;
    cfg.experiment = kind;
    cfg.n = 2;
    cfg.cutoff = 16;
    cfg.phi = dft2();
    cfg.seed = seed;
    cfg.validate();
    out.push_back(cfg);
  }
  return out;
}

ordered_json echo(const ExperimentConfig& cfg) {
  ordered_json j;
  j["experiment"] = to_string(cfg.experiment);
  j["n"] = cfg.n;
  j["cutoff"] = cfg.cutoff;
  ordered_json phi = ordered_json::array();
  for (int r = 0; r < cfg.n; ++r)
    for (int c = 0; c < cfg.n; ++c) phi.push_back(complex_json(cfg.phi(r, c)));
  j["phi"] = phi;
  if (!cfg.generator_params.empty()) {
    ordered_json g = ordered_json::array();
    for (const auto& p : cfg.generator_params) g.push_back(generator_json(p));
    j["generator_params"] = g;
  }
  if (cfg.anticlique_params) {
    j["anticlique_params"] = ordered_json{{"X", cfg.anticlique_params->amplitudes},
                                          {"Gamma", cfg.anticlique_params->phases}};
  }
  if (cfg.experiment != ExperimentKind::kAnticlique) {
    j["radial_order"] = cfg.effective_radial_order();
    j["angular_order"] = cfg.effective_angular_order();
  }
  j["tolerance"] = cfg.effective_tolerance();
  j["trusted_block"] = cfg.effective_trusted_block();
  j["seed"] = cfg.seed;
  if (cfg.experiment == ExperimentKind::kConvergence) j["cutoff_ladder"] = cfg.effective_ladder();
  if (cfg.experiment == ExperimentKind::kCovariantGs) j["beta"] = complex_json(cfg.effective_beta());
  if (cfg.experiment == ExperimentKind::kResolution || cfg.experiment == ExperimentKind::kConvergence) {
    j["backend"] = to_string(cfg.effective_backend());
  }
  return j;
}

VerificationReport run_experiment(const ExperimentConfig& input) {
  input.validate();
  const auto start = std::chrono::steady_clock::now();
  ExperimentConfig cfg = input;
  const double tol = cfg.effective_tolerance();
  const int block = cfg.effective_trusted_block();

  VerificationReport report;
  report.experiment = to_string(cfg.experiment);
  report.tolerance = tol;
  report.trusted_block = block;
  report.tool_version = tool_version();

  switch (cfg.experiment) {
    case ExperimentKind::kGs:
    case ExperimentKind::kCovariantGs: {
      const PolarScheme scheme(cfg.effective_radial_order(), cfg.effective_angular_order());
      const Cutoff cut(cfg.cutoff);
      const CMatrix op = cfg.experiment == ExperimentKind::kGs
                             ? integrate_gs(cut, scheme)
                             : integrate_covariant_gs(cfg.effective_beta(), cut, scheme);
      const Deviation d = from_identity(op.topLeftCorner(block + 1, block + 1));
      report.max_abs_deviation = d.max_abs;
      report.frobenius_deviation = d.frobenius;
      report.pass = within(d.max_abs, tol);
      break;
    }
    case ExperimentKind::kProjection: {
      const GraphSpec spec(UnitaryMatrix(cfg.phi), Cutoff(cfg.cutoff));
      const CMatrix q = q_phi(spec);
      const CMatrix defect = q * q - q;
      const CMatrix quad = q_phi_quadrature(spec, PolarScheme(cfg.effective_radial_order(),
                                                               cfg.effective_angular_order()));
      const auto idx = spec.working_space().trusted_indices(block);
      const double agree = max_abs_diff(restrict_block(quad, idx), restrict_block(q, idx));
      const double trace_error = std::abs(q.trace().real() - cfg.cutoff - 1.0);
      report.max_abs_deviation = std::max({defect.cwiseAbs().maxCoeff(), hermiticity_defect(q), trace_error, agree});
      report.frobenius_deviation = defect.norm();
      report.pass = within(report.max_abs_deviation, tol) && within(report.frobenius_deviation, tol);
      break;
    }
    case ExperimentKind::kResolution: {
      const Deviation d = resolution_deviation(cfg, cfg.cutoff, cfg.effective_backend());
      report.max_abs_deviation = d.max_abs;
      report.frobenius_deviation = d.frobenius;
      report.pass = within(d.max_abs, tol);
      break;
    }
    case ExperimentKind::kAnticlique: {
      CounterRng root(cfg.seed);
      if (!cfg.anticlique_params) {
        CounterRng rng = root.split(1);
        const GeneratorParams p = random_params(cfg.n - 1, rng);
        cfg.anticlique_params = AnticliqueParams{p.radii, p.phases};
      }
      if (cfg.generator_params.empty()) {
        CounterRng rng = root.split(2);
        for (int i = 0; i < 3; ++i) cfg.generator_params.push_back(random_params(cfg.n - 1, rng));
      }
      const GraphSpec base(UnitaryMatrix(cfg.phi), Cutoff(cfg.cutoff));
      double magnitude = max_mode_displacement(base, cfg.anticlique_params->as_generator());
      for (const auto& g : cfg.generator_params) magnitude = std::max(magnitude, max_mode_displacement(base, g));
      const GraphSpec spec = base.with_headroom(recommended_headroom(base.cutoff(), magnitude));
      const CompressionReport r = compression_check(spec, *cfg.anticlique_params, cfg.generator_params);
      report.max_abs_deviation = r.scalar_relative_error;
      report.frobenius_deviation = r.frobenius_deviation;
      report.scalar_measured = r.scalar_measured.real();
      report.scalar_predicted = r.scalar_predicted.real();
      report.pass = within(r.scalar_relative_error, tol) && within(r.frobenius_deviation, tol) &&
                    std::isfinite(r.scalar_measured.imag());
      break;
    }
    case ExperimentKind::kConvergence: {
      std::vector<double> sequence;
      bool finite = true;
      for (int c : cfg.effective_ladder()) {
        const Deviation d = resolution_deviation(cfg, c, cfg.effective_backend());
        report.ladder.push_back(LadderStep{c, d.max_abs, d.frobenius, within(d.max_abs, tol)});
        sequence.push_back(d.max_abs);
        finite = finite && std::isfinite(d.max_abs) && std::isfinite(d.frobenius);
      }
      report.max_abs_deviation = report.ladder.back().max_abs_deviation;
      report.frobenius_deviation = report.ladder.back().frobenius_deviation;
      // rounding-level deviations carry no ordering information
      report.pass = finite && non_increasing(sequence, 1e-12) && report.ladder.back().pass;
      break;
    }
  }

  report.parameters = echo(cfg);
  if (!report.ladder.empty()) {
    ordered_json steps = ordered_json::array();
    for (const auto& s : report.ladder) {
      steps.push_back(ordered_json{{"cutoff", s.cutoff},
                                   {"max_abs_deviation", s.max_abs_deviation},
                                   {"frobenius_deviation", s.frobenius_deviation},
                                   {"pass", s.pass}});
    }
    report.parameters["ladder_results"] = steps;
  }
  if (!std::isfinite(report.max_abs_deviation) || !std::isfinite(report.frobenius_deviation)) report.pass = false;
  report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace fockgraph

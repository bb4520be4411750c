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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fockgraph/graph_codes.hpp"
#include "fockgraph/report.hpp"

namespace fockgraph {

enum class ExperimentKind { kGs, kCovariantGs, kProjection, kResolution, kAnticlique, kConvergence };

const char* to_string(ExperimentKind kind);
std::optional<ExperimentKind> parse_experiment_kind(std::string_view name);

/// Bad or inconsistent configuration input.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One validated experiment. Optional fields take per-experiment defaults
/// when the experiment runs; `effective_*` resolve them.
struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::kGs;
  int n = 2;
  int cutoff = 16;
  CMatrix phi;
  std::vector<GeneratorParams> generator_params;
  std::optional<AnticliqueParams> anticlique_params;
  std::optional<int> radial_order;
  std::optional<int> angular_order;
  std::optional<double> tolerance;
  std::optional<int> trusted_block;
  std::uint64_t seed = 42;
  std::vector<int> cutoff_ladder;
  // beyond the required fields
  std::optional<cplx> beta;
  std::optional<Backend> backend;

  double effective_tolerance() const;
  int effective_trusted_block() const;
  int effective_radial_order() const;
  int effective_angular_order() const;
  Backend effective_backend() const;
  std::vector<int> effective_ladder() const;
  cplx effective_beta() const;

  /// Re-checks every invariant; throws ConfigError.
  void validate() const;
};

/// Parses one experiment object. Throws ConfigError with a message naming
/// the offending field.
ExperimentConfig parse_config(const nlohmann::json& doc);

/// Parses a document holding one experiment object or an array of them.
std::vector<ExperimentConfig> parse_config_document(const nlohmann::json& doc);

/// Reads and parses a config file (JSON).
std::vector<ExperimentConfig> load_config(const std::filesystem::path& path);

/// gs, covariant_gs, projection, resolution and anticlique at n = 2, N = 16,
/// phi = DFT-2.
std::vector<ExperimentConfig> default_suite(std::uint64_t seed = 42);

/// The 2x2 DFT as a config phi.
CMatrix dft2();

/// Runs one experiment. Deterministic in (config, seed) apart from
/// runtime_ms. Numerical exceptions propagate; a non-finite deviation fails.
VerificationReport run_experiment(const ExperimentConfig& config);

/// Effective configuration, defaults filled in, as echoed in reports.
nlohmann::ordered_json echo(const ExperimentConfig& config);

}  // namespace fockgraph

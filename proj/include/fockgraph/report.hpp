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
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace fockgraph {

struct LadderStep {
  int cutoff = 0;
  double max_abs_deviation = 0.0;
  double frobenius_deviation = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::string experiment;
  nlohmann::ordered_json parameters;
  double max_abs_deviation = 0.0;
  double frobenius_deviation = 0.0;
  std::optional<double> scalar_measured;   // anticlique only
  std::optional<double> scalar_predicted;  // anticlique only
  int trusted_block = 0;
  bool pass = false;
  double tolerance = 0.0;
  std::int64_t runtime_ms = 0;
  std::string tool_version;
  std::vector<LadderStep> ladder;  // convergence only
};

enum class ReportFormat { kJson, kCsv };

/// Keys in the fixed order experiment, parameters, max_abs_deviation,
/// frobenius_deviation, scalar_measured, scalar_predicted, trusted_block,
/// pass, tolerance, runtime_ms, tool_version. Missing scalars are null.
nlohmann::ordered_json to_json(const VerificationReport& report);

/// A single report as an object, several as an array; newline terminated.
std::string render_json(const std::vector<VerificationReport>& reports);

/// Header cutoff,max_abs_deviation,frobenius_deviation,pass and one row per
/// ladder step (one row at the run cutoff for other experiments).
std::string render_csv(const std::vector<VerificationReport>& reports);

std::string render(const std::vector<VerificationReport>& reports, ReportFormat format);

/// Writes the rendering to `path`; throws std::runtime_error on I/O failure.
void write_report(const std::vector<VerificationReport>& reports, ReportFormat format,
                  const std::filesystem::path& path);

/// Pass requires every deviation finite and within tolerance.
bool within(double deviation, double tolerance);

const char* tool_version();

}  // namespace fockgraph

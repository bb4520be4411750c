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

#include "fockgraph/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace fockgraph {

namespace {

using nlohmann::ordered_json;

std::string sci(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

ordered_json optional_number(const std::optional<double>& x) {
  if (!x) return nullptr;
  return *x;
}

}  // namespace

const char* tool_version() { return FOCKGRAPH_VERSION; }

bool within(double deviation, double tolerance) { return std::isfinite(deviation) && deviation <= tolerance; }

ordered_json to_json(const VerificationReport& r) {
  ordered_json j;
  j["experiment"] = r.experiment;
  j["parameters"] = r.parameters;
  j["max_abs_deviation"] = r.max_abs_deviation;
  j["frobenius_deviation"] = r.frobenius_deviation;
  j["scalar_measured"] = optional_number(r.scalar_measured);
  j["scalar_predicted"] = optional_number(r.scalar_predicted);
  j["trusted_block"] = r.trusted_block;
  j["pass"] = r.pass;
  j["tolerance"] = r.tolerance;
  j["runtime_ms"] = r.runtime_ms;
  j["tool_version"] = r.tool_version;
  return j;
}

std::string render_json(const std::vector<VerificationReport>& reports) {
  if (reports.size() == 1) return to_json(reports.front()).dump(2) + "\n";
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

std::string render_csv(const std::vector<VerificationReport>& reports) {
  std::string out = "cutoff,max_abs_deviation,frobenius_deviation,pass\n";
  auto row = [&out](int cutoff, double max_abs, double frob, bool pass) {
    out += std::to_string(cutoff) + "," + sci(max_abs) + "," + sci(frob) + "," + (pass ? "true" : "false") + "\n";
  };
  for (const auto& r : reports) {
    if (!r.ladder.empty()) {
      for (const auto& s : r.ladder) row(s.cutoff, s.max_abs_deviation, s.frobenius_deviation, s.pass);
    } else {
      const int cutoff = r.parameters.contains("cutoff") ? r.parameters["cutoff"].get<int>() : 0;
      row(cutoff, r.max_abs_deviation, r.frobenius_deviation, r.pass);
    }
  }
  return out;
}

std::string render(const std::vector<VerificationReport>& reports, ReportFormat format) {
  return format == ReportFormat::kJson ? render_json(reports) : render_csv(reports);
}

void write_report(const std::vector<VerificationReport>& reports, ReportFormat format,
                  const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << render(reports, format);
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace fockgraph

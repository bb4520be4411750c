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

// verify: runs fockgraph experiments and writes a verification report.
//
// Exit codes: 0 all experiments passed, 1 a verification failed, 2 bad
// command line or config, 3 internal error.

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fockgraph/fockgraph.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitInternal = 3;

int exit_for(fg_status status) {
  return status == FG_ERR_CONFIG || status == FG_ERR_INVALID_ARGUMENT ? kExitConfig : kExitInternal;
}

int report_error(const char* what, fg_status status) {
  std::fprintf(stderr, "verify: %s: %s\n", what, fg_last_error());
  return exit_for(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of coherent-state resolutions and graph-code anticliques"};
  std::string config_path;
  std::optional<std::string> experiment;
  std::string out_path;
  std::string format = "json";
  std::optional<int> cutoff;
  std::optional<std::uint64_t> seed;
  bool quiet = false;

  app.add_option("--config", config_path, "Experiment config (JSON); the default suite runs without one");
  app.add_option("--experiment", experiment, "Run only this experiment")
      ->check(CLI::IsMember({"gs", "covariant_gs", "projection", "resolution", "anticlique", "convergence"}));
  app.add_option("--out", out_path, "Report path (default: stdout)");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--cutoff", cutoff, "Override the per-mode cutoff N");
  app.add_option("--seed", seed, "Override the random seed");
  app.add_flag("--quiet", quiet, "No summary on stderr");
  app.set_version_flag("--version", fg_version());

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  fg_config* config = nullptr;
  fg_status status = config_path.empty() ? fg_config_default_suite(seed.value_or(42), &config)
                                         : fg_config_load(config_path.c_str(), &config);
  if (status != FG_OK) return report_error("config", status);

  if (status == FG_OK && experiment) status = fg_config_set_experiment(config, experiment->c_str());
  if (status == FG_OK && cutoff) status = fg_config_set_cutoff(config, *cutoff);
  if (status == FG_OK && seed) status = fg_config_set_seed(config, *seed);
  if (status != FG_OK) {
    fg_config_free(config);
    return report_error("config", status);
  }

  fg_report* report = nullptr;
  status = fg_run(config, &report);
  fg_config_free(config);
  if (status != FG_OK) return report_error("run", status);

  const fg_format fmt = format == "csv" ? FG_FORMAT_CSV : FG_FORMAT_JSON;
  if (out_path.empty()) {
    std::fputs(fg_report_render(report, fmt), stdout);
    std::fflush(stdout);
  } else if ((status = fg_report_write(report, out_path.c_str(), fmt)) != FG_OK) {
    fg_report_free(report);
    std::fprintf(stderr, "verify: report: %s\n", fg_last_error());
    return kExitInternal;
  }

  if (!quiet) {
    for (size_t i = 0; i < fg_report_count(report); ++i) {
      std::fprintf(stderr, "%s %-13s max_abs_deviation=%.3e frobenius_deviation=%.3e\n",
                   fg_report_entry_passed(report, i) ? "PASS" : "FAIL", fg_report_experiment(report, i),
                   fg_report_max_abs_deviation(report, i), fg_report_frobenius_deviation(report, i));
    }
  }
  const int code = fg_report_passed(report) ? kExitPass : kExitFail;
  fg_report_free(report);
  return code;
}

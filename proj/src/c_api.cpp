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

#include "fockgraph/fockgraph.h"

#include <exception>
#include <ios>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "fockgraph/experiment.hpp"
#include "fockgraph/fock_mode.hpp"
#include "fockgraph/quadrature.hpp"

struct fg_config {
  std::vector<fockgraph::ExperimentConfig> entries;
};

struct fg_report {
  std::vector<fockgraph::VerificationReport> entries;
  std::string rendered;
};

namespace {

thread_local std::string g_last_error;

fg_status record(fg_status status, const std::string& msg) {
  g_last_error = msg;
  return status;
}

// Maps exceptions escaping `fn` onto status codes.
template <class Fn>
fg_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return FG_OK;
  } catch (const fockgraph::ConfigError& e) {
    return record(FG_ERR_CONFIG, e.what());
  } catch (const fockgraph::InvalidArgument& e) {
    return record(FG_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return record(FG_ERR_INTERNAL, "out of memory");
  } catch (const std::ios_base::failure& e) {
    return record(FG_ERR_IO, e.what());
  } catch (const std::runtime_error& e) {
    return record(FG_ERR_NUMERICAL, e.what());
  } catch (const std::exception& e) {
    return record(FG_ERR_INTERNAL, e.what());
  } catch (...) {
    return record(FG_ERR_INTERNAL, "unknown error");
  }
}

bool valid_entry(const fg_report* r, size_t i) { return r && i < r->entries.size(); }

fockgraph::ReportFormat to_format(fg_format f) {
  return f == FG_FORMAT_CSV ? fockgraph::ReportFormat::kCsv : fockgraph::ReportFormat::kJson;
}

void write_complex(const fockgraph::CMatrix& m, double* out) {
  size_t k = 0;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      out[k++] = m(r, c).real();
      out[k++] = m(r, c).imag();
    }
  }
}

}  // namespace

extern "C" {

const char* fg_version(void) { return fockgraph::tool_version(); }

const char* fg_last_error(void) { return g_last_error.c_str(); }

fg_status fg_config_load(const char* path, fg_config** out) {
  if (!path || !out) return record(FG_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto cfg = std::make_unique<fg_config>();
    cfg->entries = fockgraph::load_config(path);
    *out = cfg.release();
  });
}

fg_status fg_config_parse(const char* json_text, fg_config** out) {
  if (!json_text || !out) return record(FG_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
      throw fockgraph::ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    auto cfg = std::make_unique<fg_config>();
    cfg->entries = fockgraph::parse_config_document(doc);
    *out = cfg.release();
  });
}

fg_status fg_config_default_suite(uint64_t seed, fg_config** out) {
  if (!out) return record(FG_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto cfg = std::make_unique<fg_config>();
    cfg->entries = fockgraph::default_suite(seed);
    *out = cfg.release();
  });
}

void fg_config_free(fg_config* config) { delete config; }

size_t fg_config_count(const fg_config* config) { return config ? config->entries.size() : 0; }

fg_status fg_config_set_experiment(fg_config* config, const char* name) {
  if (!config || !name) return record(FG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto kind = fockgraph::parse_experiment_kind(name);
    if (!kind) throw fockgraph::ConfigError("unknown experiment '" + std::string(name) + "'");
    std::vector<fockgraph::ExperimentConfig> kept;
    for (const auto& e : config->entries) {
      if (e.experiment == *kind) kept.push_back(e);
    }
    if (kept.empty() && config->entries.size() == 1) {
      kept.push_back(config->entries.front());
      kept.front().experiment = *kind;
      kept.front().validate();
    }
    if (kept.empty()) throw fockgraph::ConfigError("config has no '" + std::string(name) + "' experiment");
    config->entries = std::move(kept);
  });
}

fg_status fg_config_set_cutoff(fg_config* config, int cutoff) {
  if (!config) return record(FG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto entries = config->entries;
    for (auto& e : entries) {
      e.cutoff = cutoff;
      e.validate();
    }
    config->entries = std::move(entries);
  });
}

fg_status fg_config_set_seed(fg_config* config, uint64_t seed) {
  if (!config) return record(FG_ERR_INVALID_ARGUMENT, "null argument");
  for (auto& e : config->entries) e.seed = seed;
  g_last_error.clear();
  return FG_OK;
}

fg_status fg_run(const fg_config* config, fg_report** out) {
  if (!config || !out) return record(FG_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto report = std::make_unique<fg_report>();
    for (const auto& e : config->entries) report->entries.push_back(fockgraph::run_experiment(e));
    *out = report.release();
  });
}

void fg_report_free(fg_report* report) { delete report; }

size_t fg_report_count(const fg_report* report) { return report ? report->entries.size() : 0; }

int fg_report_passed(const fg_report* report) {
  if (!report || report->entries.empty()) return 0;
  for (const auto& e : report->entries) {
    if (!e.pass) return 0;
  }
  return 1;
}

const char* fg_report_experiment(const fg_report* report, size_t index) {
  return valid_entry(report, index) ? report->entries[index].experiment.c_str() : nullptr;
}

int fg_report_entry_passed(const fg_report* report, size_t index) {
  return valid_entry(report, index) && report->entries[index].pass ? 1 : 0;
}

double fg_report_max_abs_deviation(const fg_report* report, size_t index) {
  return valid_entry(report, index) ? report->entries[index].max_abs_deviation : -1.0;
}

double fg_report_frobenius_deviation(const fg_report* report, size_t index) {
  return valid_entry(report, index) ? report->entries[index].frobenius_deviation : -1.0;
}

const char* fg_report_render(fg_report* report, fg_format format) {
  if (!report) return nullptr;
  report->rendered = fockgraph::render(report->entries, to_format(format));
  return report->rendered.c_str();
}

fg_status fg_report_write(const fg_report* report, const char* path, fg_format format) {
  if (!report || !path) return record(FG_ERR_INVALID_ARGUMENT, "null argument");
  try {
    fockgraph::write_report(report->entries, to_format(format), path);
  } catch (const std::exception& e) {
    return record(FG_ERR_IO, e.what());
  }
  g_last_error.clear();
  return FG_OK;
}

fg_status fg_displacement_matrix(double alpha_re, double alpha_im, int cutoff, double* out) {
  if (!out) return record(FG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    write_complex(fockgraph::displacement_matrix({alpha_re, alpha_im}, fockgraph::Cutoff(cutoff)), out);
  });
}

fg_status fg_coherent_state(double alpha_re, double alpha_im, int cutoff, double* out) {
  if (!out) return record(FG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    write_complex(fockgraph::coherent_state({alpha_re, alpha_im}, fockgraph::Cutoff(cutoff)).transpose(), out);
  });
}

fg_status fg_gauss_laguerre(int order, double* nodes, double* weights) {
  if (!nodes || !weights) return record(FG_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto scheme = fockgraph::gauss_laguerre(order);
    for (int i = 0; i < order; ++i) {
      nodes[i] = scheme.nodes[i];
      weights[i] = scheme.weights[i];
    }
  });
}

}  // extern "C"

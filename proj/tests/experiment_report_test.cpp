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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "fockgraph/experiment.hpp"
#include "fockgraph/report.hpp"

namespace fockgraph {
namespace {

using nlohmann::json;

json base_doc(const char* experiment) {
  const double h = std::sqrt(0.5);
  return json{{"experiment", experiment},
              {"n", 2},
              {"cutoff", 8},
              {"phi", json::array({{h, 0.0}, {h, 0.0}, {h, 0.0}, {-h, 0.0}})}};
}

std::string config_error(const json& doc) {
  try {
    parse_config_document(doc);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

TEST(ExperimentKind, RoundTrip) {
  for (const char* name : {"gs", "covariant_gs", "projection", "resolution", "anticlique", "convergence"}) {
    const auto kind = parse_experiment_kind(name);
    ASSERT_TRUE(kind.has_value()) << name;
    EXPECT_STREQ(to_string(*kind), name);
  }
  EXPECT_FALSE(parse_experiment_kind("GS").has_value());
}

TEST(ParseConfig, MinimalDocument) {
  const ExperimentConfig cfg = parse_config(base_doc("projection"));
  EXPECT_EQ(cfg.experiment, ExperimentKind::kProjection);
  EXPECT_EQ(cfg.n, 2);
  EXPECT_EQ(cfg.cutoff, 8);
  EXPECT_EQ(cfg.seed, 42u);
  EXPECT_LE(max_abs_diff(cfg.phi, dft2()), 1e-15);
}

TEST(ParseConfig, DistinctMessages) {
  json missing = base_doc("gs");
  missing.erase("cutoff");
  EXPECT_EQ(config_error(missing), "missing required field 'cutoff'");

  json unknown = base_doc("gs");
  unknown["cutof"] = 3;
  EXPECT_EQ(config_error(unknown), "unknown field 'cutof'");

  json malformed = base_doc("gs");
  malformed["phi"][1] = json::array({1.0});
  EXPECT_EQ(config_error(malformed), "malformed complex entry at phi[1]: expected [re, im]");

  json short_phi = base_doc("gs");
  short_phi["phi"].erase(3);
  EXPECT_EQ(config_error(short_phi), "phi must hold n*n = 4 entries, got 3");

  json singular = base_doc("gs");
  singular["phi"][3] = json::array({0.0, 0.0});
  EXPECT_TRUE(contains(config_error(singular), "phi not unitary"));

  json small = base_doc("gs");
  small["cutoff"] = 3;
  EXPECT_EQ(config_error(small), "cutoff must be >= 4, got 3");

  json kind = base_doc("gs");
  kind["experiment"] = "bogus";
  EXPECT_EQ(config_error(kind), "unknown experiment 'bogus'");

  json backend = base_doc("resolution");
  backend["backend"] = "fast";
  EXPECT_TRUE(contains(config_error(backend), "backend"));

  json ladder = base_doc("gs");
  ladder["cutoff_ladder"] = json::array({8, 10});
  EXPECT_TRUE(contains(config_error(ladder), "cutoff_ladder"));

  json unsorted = base_doc("convergence");
  unsorted["cutoff_ladder"] = json::array({12, 8});
  EXPECT_TRUE(contains(config_error(unsorted), "strictly increasing"));

  json pairs = base_doc("anticlique");
  pairs["generator_params"] = json::array({json{{"R", {0.1, 0.2}}, {"Theta", {0.0, 0.0}}}});
  EXPECT_TRUE(contains(config_error(pairs), "n-1 = 1"));

  json negative = base_doc("anticlique");
  negative["anticlique_params"] = json{{"X", {-0.5}}, {"Gamma", {0.0}}};
  EXPECT_TRUE(contains(config_error(negative), "non-negative"));

  json dense = base_doc("projection");
  dense["cutoff"] = 80;
  EXPECT_TRUE(contains(config_error(dense), "exceeds"));

  json seed = base_doc("gs");
  seed["seed"] = -1;
  EXPECT_EQ(config_error(seed), "field 'seed' must be an unsigned integer");

  EXPECT_EQ(config_error(json::array()), "config list is empty");
  EXPECT_EQ(config_error(json(3)), "config must be a JSON object");
}

TEST(ParseConfig, ArrayOfExperiments) {
  const auto cfgs = parse_config_document(json::array({base_doc("gs"), base_doc("projection")}));
  ASSERT_EQ(cfgs.size(), 2u);
  EXPECT_EQ(cfgs[1].experiment, ExperimentKind::kProjection);
}

TEST(ParseConfig, OptionalFields) {
  json doc = base_doc("anticlique");
  doc["anticlique_params"] = json{{"X", {0.8}}, {"Gamma", {1.2}}};
  doc["generator_params"] = json::array({json{{"R", {0.3}}, {"Theta", {0.1}}}});
  doc["tolerance"] = 1e-7;
  doc["seed"] = 7;
  const ExperimentConfig cfg = parse_config(doc);
  ASSERT_TRUE(cfg.anticlique_params.has_value());
  EXPECT_EQ(cfg.anticlique_params->amplitudes, std::vector<double>{0.8});
  ASSERT_EQ(cfg.generator_params.size(), 1u);
  EXPECT_EQ(cfg.generator_params[0].phases, std::vector<double>{0.1});
  EXPECT_EQ(cfg.effective_tolerance(), 1e-7);
  EXPECT_EQ(cfg.seed, 7u);
}

TEST(LoadConfig, FileErrors) {
  EXPECT_THROW(load_config("/nonexistent/config.json"), ConfigError);
  const auto path = std::filesystem::temp_directory_path() / "fockgraph_bad_config.json";
  {
    std::ofstream out(path);
    out << "{\"experiment\": ";
  }
  try {
    load_config(path);
    ADD_FAILURE() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_TRUE(contains(e.what(), "not valid JSON"));
  }
  std::filesystem::remove(path);
}

TEST(Defaults, PerExperiment) {
  ExperimentConfig cfg = parse_config(base_doc("gs"));
  EXPECT_EQ(cfg.effective_tolerance(), 1e-12);
  EXPECT_EQ(cfg.effective_trusted_block(), 8);
  EXPECT_EQ(cfg.effective_radial_order(), 9);
  EXPECT_EQ(cfg.effective_angular_order(), 18);
  cfg.experiment = ExperimentKind::kResolution;
  EXPECT_EQ(cfg.effective_trusted_block(), 4);
  EXPECT_EQ(cfg.effective_backend(), Backend::kRank);
  cfg.experiment = ExperimentKind::kConvergence;
  EXPECT_EQ(cfg.effective_backend(), Backend::kDirect);
  EXPECT_EQ(cfg.effective_ladder(), (std::vector<int>{12, 16, 20}));
  EXPECT_EQ(cfg.effective_tolerance(), 1e-4);
  cfg.experiment = ExperimentKind::kCovariantGs;
  EXPECT_EQ(cfg.effective_beta(), cplx(1.0, 0.0));
}

TEST(DefaultSuite, FiveExperiments) {
  const auto suite = default_suite();
  ASSERT_EQ(suite.size(), 5u);
  EXPECT_EQ(suite[0].experiment, ExperimentKind::kGs);
  EXPECT_EQ(suite[4].experiment, ExperimentKind::kAnticlique);
  for (const auto& cfg : suite) {
    EXPECT_EQ(cfg.n, 2);
    EXPECT_EQ(cfg.cutoff, 16);
    EXPECT_EQ(cfg.seed, 42u);
  }
}

TEST(RunExperiment, ReportKeyOrder) {
  const VerificationReport r = run_experiment(parse_config(base_doc("gs")));
  const auto j = to_json(r);
  std::vector<std::string> keys;
  for (const auto& item : j.items()) keys.push_back(item.key());
  const std::vector<std::string> expected{"experiment",      "parameters",       "max_abs_deviation",
                                          "frobenius_deviation", "scalar_measured", "scalar_predicted",
                                          "trusted_block",   "pass",             "tolerance",
                                          "runtime_ms",      "tool_version"};
  EXPECT_EQ(keys, expected);
  EXPECT_TRUE(j["scalar_measured"].is_null());
  EXPECT_EQ(j["parameters"]["cutoff"], 8);
  EXPECT_EQ(j["tool_version"], tool_version());
  EXPECT_TRUE(r.pass);
}

TEST(RunExperiment, AnticliqueScalars) {
  json doc = base_doc("anticlique");
  doc["anticlique_params"] = json{{"X", {0.8}}, {"Gamma", {1.2}}};
  doc["generator_params"] = json::array({json{{"R", {0.8}}, {"Theta", {1.2}}}});
  const VerificationReport r = run_experiment(parse_config(doc));
  ASSERT_TRUE(r.scalar_measured.has_value());
  ASSERT_TRUE(r.scalar_predicted.has_value());
  // generator equal to the anticlique: the constant is 1
  EXPECT_EQ(*r.scalar_predicted, 1.0);
  EXPECT_NEAR(*r.scalar_measured, 1.0, 1e-8);
  EXPECT_TRUE(r.pass);
}

TEST(RunExperiment, TightToleranceFails) {
  json doc = base_doc("gs");
  doc["tolerance"] = 1e-30;
  const VerificationReport r = run_experiment(parse_config(doc));
  EXPECT_FALSE(r.pass);
  EXPECT_GT(r.max_abs_deviation, 0.0);
}

TEST(RunExperiment, DeterministicAcrossRuns) {
  const auto suite = default_suite(42);
  for (const auto& cfg : suite) {
    auto a = to_json(run_experiment(cfg));
    auto b = to_json(run_experiment(cfg));
    a.erase("runtime_ms");
    b.erase("runtime_ms");
    EXPECT_EQ(a.dump(), b.dump()) << to_string(cfg.experiment);
  }
}

TEST(RunExperiment, SeedChangesAnticliqueDraw) {
  ExperimentConfig cfg = default_suite(42)[4];
  const auto a = run_experiment(cfg);
  cfg.seed = 43;
  const auto b = run_experiment(cfg);
  EXPECT_NE(a.parameters["anticlique_params"].dump(), b.parameters["anticlique_params"].dump());
}

VerificationReport sample_report() {
  VerificationReport r;
  r.experiment = "gs";
  r.parameters = nlohmann::ordered_json{{"cutoff", 12}};
  r.max_abs_deviation = 1.234567890123456789e-13;
  r.frobenius_deviation = 9.87654321098765e-13;
  r.trusted_block = 12;
  r.pass = true;
  r.tolerance = 1e-12;
  r.tool_version = tool_version();
  return r;
}

TEST(Report, JsonRoundTrip) {
  const VerificationReport r = sample_report();
  const json back = json::parse(render_json({r}));
  EXPECT_NEAR(back["max_abs_deviation"].get<double>(), r.max_abs_deviation, 1e-12 * r.max_abs_deviation);
  EXPECT_NEAR(back["frobenius_deviation"].get<double>(), r.frobenius_deviation, 1e-12 * r.frobenius_deviation);
  EXPECT_EQ(back["experiment"], "gs");
  EXPECT_TRUE(json::parse(render_json({r, r})).is_array());
}

TEST(Report, CsvSingleRow) {
  const std::string csv = render_csv({sample_report()});
  std::istringstream in(csv);
  std::string header, row, extra;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header, "cutoff,max_abs_deviation,frobenius_deviation,pass");
  EXPECT_FALSE(std::getline(in, extra));
  EXPECT_EQ(row.substr(0, 3), "12,");
  EXPECT_EQ(row.substr(row.size() - 4), "true");
  // 17 significant digits survive the round trip
  const double parsed = std::strtod(row.c_str() + 3, nullptr);
  EXPECT_NEAR(parsed, 1.234567890123456789e-13, 1e-12 * 1.23e-13);
}

TEST(Report, CsvLadderRows) {
  VerificationReport r = sample_report();
  r.experiment = "convergence";
  r.ladder = {{12, 1e-5, 2e-5, true}, {16, 1e-6, 2e-6, true}, {20, 1e-7, 2e-7, false}};
  const std::string csv = render_csv({r});
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
  EXPECT_TRUE(contains(csv, "\n20,"));
  EXPECT_TRUE(contains(csv, ",false\n"));
}

TEST(Report, WriteFailsForMissingDirectory) {
  EXPECT_THROW(write_report({sample_report()}, ReportFormat::kJson, "/nonexistent/dir/report.json"),
               std::runtime_error);
}

TEST(Report, WithinRejectsNonFinite) {
  EXPECT_TRUE(within(1e-13, 1e-12));
  EXPECT_FALSE(within(1e-11, 1e-12));
  EXPECT_FALSE(within(std::nan(""), 1.0));
  EXPECT_FALSE(within(INFINITY, 1.0));
}

}  // namespace
}  // namespace fockgraph

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
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "fockgraph/fockgraph.h"

namespace {

const char* kGsConfig = R"({"experiment": "gs", "n": 1, "cutoff": 8, "phi": [[1, 0]]})";

TEST(CApi, Version) { EXPECT_STRNE(fg_version(), ""); }

TEST(CApi, NullArguments) {
  EXPECT_EQ(fg_config_parse(nullptr, nullptr), FG_ERR_INVALID_ARGUMENT);
  EXPECT_STRNE(fg_last_error(), "");
  EXPECT_EQ(fg_run(nullptr, nullptr), FG_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(fg_config_count(nullptr), 0u);
  EXPECT_EQ(fg_report_passed(nullptr), 0);
  EXPECT_EQ(fg_report_experiment(nullptr, 0), nullptr);
  fg_config_free(nullptr);
  fg_report_free(nullptr);
}

TEST(CApi, ConfigErrors) {
  fg_config* cfg = nullptr;
  EXPECT_EQ(fg_config_parse("{\"n\": 1}", &cfg), FG_ERR_CONFIG);
  EXPECT_EQ(cfg, nullptr);
  EXPECT_EQ(std::string(fg_last_error()), "missing required field 'experiment'");
  EXPECT_EQ(fg_config_parse("{", &cfg), FG_ERR_CONFIG);
  EXPECT_EQ(fg_config_load("/nonexistent/config.json", &cfg), FG_ERR_CONFIG);
}

TEST(CApi, RunAndInspect) {
  fg_config* cfg = nullptr;
  ASSERT_EQ(fg_config_parse(kGsConfig, &cfg), FG_OK);
  EXPECT_STREQ(fg_last_error(), "");
  EXPECT_EQ(fg_config_count(cfg), 1u);
  fg_report* report = nullptr;
  ASSERT_EQ(fg_run(cfg, &report), FG_OK);
  EXPECT_EQ(fg_report_count(report), 1u);
  EXPECT_EQ(fg_report_passed(report), 1);
  EXPECT_STREQ(fg_report_experiment(report, 0), "gs");
  EXPECT_LE(fg_report_max_abs_deviation(report, 0), 1e-12);
  EXPECT_GE(fg_report_frobenius_deviation(report, 0), 0.0);
  EXPECT_EQ(fg_report_experiment(report, 1), nullptr);
  EXPECT_EQ(fg_report_max_abs_deviation(report, 1), -1.0);

  const std::string csv = fg_report_render(report, FG_FORMAT_CSV);
  EXPECT_EQ(csv.rfind("cutoff,max_abs_deviation,frobenius_deviation,pass\n8,", 0), 0u);
  const std::string json = fg_report_render(report, FG_FORMAT_JSON);
  EXPECT_EQ(json.front(), '{');
  fg_report_free(report);
  fg_config_free(cfg);
}

TEST(CApi, Overrides) {
  fg_config* cfg = nullptr;
  ASSERT_EQ(fg_config_default_suite(42, &cfg), FG_OK);
  EXPECT_EQ(fg_config_count(cfg), 5u);
  EXPECT_EQ(fg_config_set_experiment(cfg, "bogus"), FG_ERR_CONFIG);
  EXPECT_EQ(fg_config_count(cfg), 5u);
  ASSERT_EQ(fg_config_set_experiment(cfg, "projection"), FG_OK);
  EXPECT_EQ(fg_config_count(cfg), 1u);
  // a rejected cutoff leaves the config untouched
  EXPECT_EQ(fg_config_set_cutoff(cfg, 3), FG_ERR_CONFIG);
  ASSERT_EQ(fg_config_set_cutoff(cfg, 6), FG_OK);
  ASSERT_EQ(fg_config_set_seed(cfg, 9), FG_OK);
  fg_report* report = nullptr;
  ASSERT_EQ(fg_run(cfg, &report), FG_OK);
  EXPECT_STREQ(fg_report_experiment(report, 0), "projection");
  const std::string csv = fg_report_render(report, FG_FORMAT_CSV);
  EXPECT_NE(csv.find("\n6,"), std::string::npos);
  fg_report_free(report);
  fg_config_free(cfg);
}

TEST(CApi, SingleEntrySwitchesExperiment) {
  fg_config* cfg = nullptr;
  ASSERT_EQ(fg_config_parse(kGsConfig, &cfg), FG_OK);
  ASSERT_EQ(fg_config_set_experiment(cfg, "covariant_gs"), FG_OK);
  fg_report* report = nullptr;
  ASSERT_EQ(fg_run(cfg, &report), FG_OK);
  EXPECT_STREQ(fg_report_experiment(report, 0), "covariant_gs");
  fg_report_free(report);
  fg_config_free(cfg);
}

TEST(CApi, WriteReport) {
  fg_config* cfg = nullptr;
  fg_report* report = nullptr;
  ASSERT_EQ(fg_config_parse(kGsConfig, &cfg), FG_OK);
  ASSERT_EQ(fg_run(cfg, &report), FG_OK);
  EXPECT_EQ(fg_report_write(report, "/nonexistent/dir/out.json", FG_FORMAT_JSON), FG_ERR_IO);
  const std::string path = ::testing::TempDir() + "fockgraph_c_api_report.json";
  ASSERT_EQ(fg_report_write(report, path.c_str(), FG_FORMAT_JSON), FG_OK);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), std::string(fg_report_render(report, FG_FORMAT_JSON)));
  std::remove(path.c_str());
  fg_report_free(report);
  fg_config_free(cfg);
}

TEST(CApi, DisplacementMatrixVacuumColumn) {
  const int cutoff = 6;
  std::vector<double> d(2 * (cutoff + 1) * (cutoff + 1));
  ASSERT_EQ(fg_displacement_matrix(0.5, -0.25, cutoff, d.data()), FG_OK);
  std::vector<double> c(2 * (cutoff + 1));
  ASSERT_EQ(fg_coherent_state(0.5, -0.25, cutoff, c.data()), FG_OK);
  // column 0 of D(alpha) is |alpha>; row-major interleaved layout
  for (int m = 0; m <= cutoff; ++m) {
    const int k = 2 * (m * (cutoff + 1));
    EXPECT_NEAR(d[k], c[2 * m], 1e-14);
    EXPECT_NEAR(d[k + 1], c[2 * m + 1], 1e-14);
  }
  // <0|alpha> = exp(-|alpha|^2 / 2)
  EXPECT_NEAR(c[0], std::exp(-0.5 * 0.3125), 1e-15);
  EXPECT_EQ(fg_displacement_matrix(0.5, 0.0, -1, d.data()), FG_ERR_INVALID_ARGUMENT);
}

TEST(CApi, GaussLaguerre) {
  double nodes[2], weights[2];
  ASSERT_EQ(fg_gauss_laguerre(2, nodes, weights), FG_OK);
  EXPECT_NEAR(nodes[0], 2.0 - std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(nodes[1], 2.0 + std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(weights[0] + weights[1], 1.0, 1e-15);
  EXPECT_NE(fg_gauss_laguerre(0, nodes, weights), FG_OK);
}

}  // namespace

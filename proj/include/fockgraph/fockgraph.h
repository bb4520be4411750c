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

/* C interface to the fockgraph verification library. */
#ifndef FOCKGRAPH_FOCKGRAPH_H
#define FOCKGRAPH_FOCKGRAPH_H

#include <stddef.h>
#include <stdint.h>

#if defined(FOCKGRAPH_BUILDING_LIBRARY)
#define FG_API __attribute__((visibility("default")))
#else
#define FG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fg_status {
  FG_OK = 0,
  FG_ERR_INVALID_ARGUMENT = 1, /* null handle, bad index, out-of-range number */
  FG_ERR_CONFIG = 2,           /* unreadable, malformed or inconsistent config */
  FG_ERR_IO = 3,               /* report could not be written */
  FG_ERR_NUMERICAL = 4,        /* numerical routine failed */
  FG_ERR_INTERNAL = 5
} fg_status;

typedef enum fg_format { FG_FORMAT_JSON = 0, FG_FORMAT_CSV = 1 } fg_format;

/* A list of experiment configurations. */
typedef struct fg_config fg_config;
/* Results of running a config, one entry per experiment. */
typedef struct fg_report fg_report;

FG_API const char* fg_version(void);

/* Message for the last failing call on this thread; "" if none. */
FG_API const char* fg_last_error(void);

FG_API fg_status fg_config_load(const char* path, fg_config** out);
FG_API fg_status fg_config_parse(const char* json_text, fg_config** out);
/* gs, covariant_gs, projection, resolution, anticlique at n=2, N=16, DFT-2. */
FG_API fg_status fg_config_default_suite(uint64_t seed, fg_config** out);
FG_API void fg_config_free(fg_config* config);

FG_API size_t fg_config_count(const fg_config* config);
/* Keeps only experiments named `name`; a single-entry config is switched to
 * that experiment instead. FG_ERR_CONFIG when the name is unknown. */
FG_API fg_status fg_config_set_experiment(fg_config* config, const char* name);
FG_API fg_status fg_config_set_cutoff(fg_config* config, int cutoff);
FG_API fg_status fg_config_set_seed(fg_config* config, uint64_t seed);

FG_API fg_status fg_run(const fg_config* config, fg_report** out);
FG_API void fg_report_free(fg_report* report);

FG_API size_t fg_report_count(const fg_report* report);
/* 1 when every entry passed, 0 otherwise (also for a null report). */
FG_API int fg_report_passed(const fg_report* report);
FG_API const char* fg_report_experiment(const fg_report* report, size_t index);
FG_API int fg_report_entry_passed(const fg_report* report, size_t index);
FG_API double fg_report_max_abs_deviation(const fg_report* report, size_t index);
FG_API double fg_report_frobenius_deviation(const fg_report* report, size_t index);

/* Rendered report, valid until the report is freed or rendered again. */
FG_API const char* fg_report_render(fg_report* report, fg_format format);
FG_API fg_status fg_report_write(const fg_report* report, const char* path, fg_format format);

/* Numeric kernels. Complex outputs are interleaved (re, im); matrices are
 * row-major. Buffers must hold the stated number of doubles. */

/* <m|D(alpha)|n> for m, n <= cutoff: 2 (cutoff+1)^2 doubles. */
FG_API fg_status fg_displacement_matrix(double alpha_re, double alpha_im, int cutoff, double* out);
/* Amplitudes of |alpha> truncated at cutoff: 2 (cutoff+1) doubles. */
FG_API fg_status fg_coherent_state(double alpha_re, double alpha_im, int cutoff, double* out);
/* Gauss-Laguerre nodes and weights, `order` doubles each. */
FG_API fg_status fg_gauss_laguerre(int order, double* nodes, double* weights);

#ifdef __cplusplus
}
#endif

#endif

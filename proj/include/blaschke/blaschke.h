/*
Copyright 2026 The Blaschke Toolkit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS-IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/


#ifndef BLASCHKE_BLASCHKE_H_
#define BLASCHKE_BLASCHKE_H_

#include <stddef.h>

#if defined(BLASCHKE_BUILDING_LIBRARY)
#define BL_API __attribute__((visibility("default")))
#else
#define BL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bl_status {
  BL_OK = 0,
  BL_INVALID_INPUT = 1,
  BL_POLE_PROXIMITY = 2,
  BL_SOLVER_FAILURE = 3,
  BL_DEGENERATE_INPUT = 4,
  BL_NO_INTERIOR_FIXED_POINT = 5,
  BL_COUNT_MISMATCH = 6,
  BL_VERIFICATION_FAILURE = 7,
  BL_EIGENSOLVER_FAILURE = 8,
  BL_DEGENERATE_ENVELOPE = 9,
  BL_TRACKING_FAILURE = 10,
  BL_NON_BIJECTIVE = 11,
  BL_GEOMETRY_FAILURE = 12,
  BL_INTERNAL_ERROR = 13
} bl_status;

typedef struct bl_product bl_product;
typedef struct bl_options bl_options;
typedef struct bl_report bl_report;

BL_API const char* bl_version(void);
BL_API const char* bl_status_name(bl_status status);
/* 0 ok, 2 input error, 3 solver failure, 4 verification failure. */
BL_API int bl_status_exit_code(bl_status status);
/* Message of the last failure on the calling thread; "" if none. */
BL_API const char* bl_last_error(void);

BL_API bl_options* bl_options_new(void);
BL_API void bl_options_free(bl_options* options);
/* Keys: root_tol, cluster_tol, identity_tol, conic_residual_tol,
   circle_samples, lambda_samples, skip. */
BL_API bl_status bl_options_set(bl_options* options, const char* key, double value);

BL_API bl_status bl_product_from_json(const char* json, bl_product** out);
BL_API bl_status bl_product_from_demo(const char* name, bl_product** out);
/* zeros holds n (re, im) pairs. */
BL_API bl_status bl_product_from_zeros(double gamma_re, double gamma_im, const double* zeros,
                                       size_t n, bl_product** out);
BL_API void bl_product_free(bl_product* product);
BL_API size_t bl_product_degree(const bl_product* product);
BL_API bl_status bl_product_zero(const bl_product* product, size_t index, double* re,
                                 double* im);
BL_API bl_status bl_product_evaluate(const bl_product* product, double re, double im,
                                     double* out_re, double* out_im);
BL_API bl_status bl_product_derivative(const bl_product* product, double re, double im,
                                       double* out_re, double* out_im);

BL_API size_t bl_demo_count(void);
BL_API const char* bl_demo_name(size_t index);

/* Runs a command by name; options may be NULL. */
BL_API bl_status bl_run(const char* command, const bl_product* product,
                        const bl_options* options, bl_report** out);
BL_API bl_status bl_analyze(const bl_product* product, const bl_options* options,
                            bl_report** out);
BL_API bl_status bl_curve(const bl_product* product, const bl_options* options,
                          bl_report** out);
BL_API bl_status bl_package(const bl_product* product, const bl_options* options,
                            bl_report** out);
BL_API bl_status bl_nrange(const bl_product* product, const bl_options* options,
                           bl_report** out);
BL_API bl_status bl_decompose(const bl_product* product, const bl_options* options,
                              bl_report** out);
BL_API bl_status bl_monodromy(const bl_product* product, const bl_options* options,
                              bl_report** out);
BL_API bl_status bl_invariants(const bl_product* product, const bl_options* options,
                               bl_report** out);

/* A report is a list of named text artifacts; entry 0 is report.json. */
BL_API size_t bl_report_count(const bl_report* report);
BL_API const char* bl_report_name(const bl_report* report, size_t index);
BL_API const char* bl_report_content(const bl_report* report, size_t index);
BL_API void bl_report_free(bl_report* report);

#ifdef __cplusplus
}
#endif

#endif /* BLASCHKE_BLASCHKE_H_ */

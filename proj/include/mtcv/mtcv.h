/* Copyright (C) 2026 The mtcverify Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the mtcverify library. All objects are opaque handles owned
 * by the caller and released with the matching *_free function. Functions
 * return MTCV_OK or an error code; the message of the most recent error on
 * the calling thread is available from mtcv_last_error().
 */
#ifndef MTCV_MTCV_H_
#define MTCV_MTCV_H_

#include <stddef.h>

#if defined(_WIN32)
#if defined(MTCV_BUILDING_LIBRARY)
#define MTCV_API __declspec(dllexport)
#else
#define MTCV_API __declspec(dllimport)
#endif
#else
#define MTCV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mtcv_status {
  MTCV_OK = 0,
  MTCV_ERR_INVALID_ARGUMENT = 1,
  MTCV_ERR_PARSE = 2,
  MTCV_ERR_IO = 3,
  MTCV_ERR_VALIDATION = 4,
  MTCV_ERR_UNSUPPORTED = 5,
  MTCV_ERR_DOMAIN = 6,
  MTCV_ERR_MISSING_DATA = 7,
  MTCV_ERR_INTERNAL = 8
} mtcv_status;

typedef enum mtcv_check_status {
  MTCV_CHECK_PASS = 0,
  MTCV_CHECK_FAIL = 1,
  MTCV_CHECK_SKIP = 2
} mtcv_check_status;

typedef struct mtcv_dataset mtcv_dataset;
typedef struct mtcv_report mtcv_report;

typedef struct mtcv_verify_options {
  double eps;     /* entry tolerance, default 1e-9 */
  double eps_det; /* determinant threshold, default 1e-8 */
  double tau_re;  /* character evaluation point, default 2i */
  double tau_im;
  int order;      /* character truncation order, default 400 */
} mtcv_verify_options;

MTCV_API const char* mtcv_version(void);

/* Message of the last failed call on this thread; never NULL. */
MTCV_API const char* mtcv_last_error(void);

/* Releases strings returned through char** out-parameters. */
MTCV_API void mtcv_string_free(char* s);

/* Data sets ---------------------------------------------------------------- */

MTCV_API mtcv_status mtcv_dataset_load_file(const char* path, mtcv_dataset** out);
MTCV_API mtcv_status mtcv_dataset_from_catalog(const char* name, mtcv_dataset** out);
MTCV_API mtcv_status mtcv_dataset_parse(const char* text, size_t length, mtcv_dataset** out);
MTCV_API void mtcv_dataset_free(mtcv_dataset* set);

/* Canonical "mtc-data v1" text. */
MTCV_API mtcv_status mtcv_dataset_export(const mtcv_dataset* set, char** out);

/* Returned strings are owned by the data set. */
MTCV_API mtcv_status mtcv_dataset_name(const mtcv_dataset* set, const char** out);
MTCV_API mtcv_status mtcv_dataset_rank(const mtcv_dataset* set, int* out);
MTCV_API mtcv_status mtcv_dataset_label_name(const mtcv_dataset* set, int label, const char** out);
MTCV_API mtcv_status mtcv_dataset_unit(const mtcv_dataset* set, int* out);
MTCV_API mtcv_status mtcv_dataset_dual(const mtcv_dataset* set, int label, int* out);
MTCV_API mtcv_status mtcv_dataset_h(const mtcv_dataset* set, int label, long long* num,
                                    long long* den);
MTCV_API mtcv_status mtcv_dataset_c(const mtcv_dataset* set, long long* num, long long* den);
MTCV_API mtcv_status mtcv_dataset_fusion(const mtcv_dataset* set, int a, int b, int c, int* out);
MTCV_API mtcv_status mtcv_dataset_s_entry(const mtcv_dataset* set, int a, int b, double* re,
                                          double* im);
MTCV_API mtcv_status mtcv_dataset_has_fr(const mtcv_dataset* set, int* out);
MTCV_API mtcv_status mtcv_dataset_has_chars(const mtcv_dataset* set, int* out);

/* Verlinde tensor, written as m*m*m values indexed (a*m + b)*m + c. */
MTCV_API mtcv_status mtcv_verlinde(const mtcv_dataset* set, double* re, double* im,
                                   size_t capacity);

/* Characters --------------------------------------------------------------- */

/* Leading exponent num/den and the coefficients as space-separated decimals. */
MTCV_API mtcv_status mtcv_character_series(const mtcv_dataset* set, int label, int order,
                                           long long* alpha_num, long long* alpha_den,
                                           char** coeffs);
MTCV_API mtcv_status mtcv_character_eval(const mtcv_dataset* set, int label, int order,
                                         double tau_re, double tau_im, double* re, double* im);

/* Verification ------------------------------------------------------------- */

MTCV_API void mtcv_verify_options_init(mtcv_verify_options* options);

/* checks is "all" or a comma-separated list; options may be NULL. */
MTCV_API mtcv_status mtcv_verify(const mtcv_dataset* set, const char* checks,
                                 const mtcv_verify_options* options, mtcv_report** out);
MTCV_API void mtcv_report_free(mtcv_report* report);
MTCV_API mtcv_status mtcv_report_size(const mtcv_report* report, size_t* out);

/* Strings are owned by the report; any out-parameter may be NULL. */
MTCV_API mtcv_status mtcv_report_check(const mtcv_report* report, size_t index, const char** name,
                                       mtcv_check_status* status, double* residual, double* tol,
                                       const char** detail);
MTCV_API mtcv_status mtcv_report_text(const mtcv_report* report, char** out);
MTCV_API mtcv_status mtcv_report_json(const mtcv_report* report, const char* source, char** out);

/* 0 when no check failed, 1 otherwise; 2 for a NULL report. */
MTCV_API int mtcv_report_exit_code(const mtcv_report* report);

/* Catalog and expressions --------------------------------------------------- */

MTCV_API size_t mtcv_catalog_count(void);
/* Static storage; NULL when index is out of range. */
MTCV_API const char* mtcv_catalog_name(size_t index);

MTCV_API mtcv_status mtcv_parse_number_expr(const char* text, double* re, double* im);

#ifdef __cplusplus
}
#endif

#endif /* MTCV_MTCV_H_ */

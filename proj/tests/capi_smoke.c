/* Copyright (C) 2026 The mtcverify Authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include <stdio.h>

#include "mtcv/mtcv.h"

int main(void) {
  mtcv_dataset* set = NULL;
  mtcv_report* report = NULL;
  int code;
  if (mtcv_dataset_from_catalog("ising", &set) != MTCV_OK) {
    fprintf(stderr, "load failed: %s\n", mtcv_last_error());
    return 1;
  }
  if (mtcv_verify(set, "all", NULL, &report) != MTCV_OK) {
    fprintf(stderr, "verify failed: %s\n", mtcv_last_error());
    mtcv_dataset_free(set);
    return 1;
  }
  code = mtcv_report_exit_code(report);
  mtcv_report_free(report);
  mtcv_dataset_free(set);
  printf("mtcv %s: ising exit code %d\n", mtcv_version(), code);
  return code;
}

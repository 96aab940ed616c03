// Copyright (C) 2026 The mtcverify Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mtcv/data_file.hpp"
#include "mtcv/report.hpp"

namespace mtcv {

enum class CheckStatus { pass, fail, skip };

std::string_view to_string(CheckStatus status) noexcept;

/// One named check of the suite. residual/tol are taken from the first failing
/// entry of the underlying report, or from its largest residual when all pass.
struct CheckOutcome {
  std::string name;
  CheckStatus status = CheckStatus::skip;
  double residual = 0.0;
  double tol = 0.0;
  std::string detail;
  VerificationReport report;
};

struct VerifyOptions {
  ToleranceConfig tol;
  Complex tau{0.0, 2.0};
  int order = 400;
};

/// unit, assoc, symmetry, unitrow, diag, verlinde, balancing, nondeg, pentagon,
/// hexagon, rigidity, ms1, ms2, sfromfr, chars.
const std::vector<std::string>& check_names();

/// "all" or a comma-separated list, returned in suite order without
/// duplicates. Throws Error(invalid_argument) on unknown or empty names.
std::vector<std::string> parse_check_selection(std::string_view selection);

/// Runs the selected checks concurrently. Results come back in suite order.
/// A check that throws is reported as failed with an infinite residual.
std::vector<CheckOutcome> run_verification(const ModularDataSet& set,
                                           const std::vector<std::string>& checks,
                                           const VerifyOptions& options = {});

/// One line per check, e.g. "symmetry FAIL residual=1.000e+00 tol=1.000e-09".
std::string format_text(const std::vector<CheckOutcome>& outcomes);

/// {"source", "tol", "checks": [{"name", "status", "residual"}]}; non-finite
/// residuals are written as null.
std::string format_json(std::string_view source, const ToleranceConfig& tol,
                        const std::vector<CheckOutcome>& outcomes);

/// 0 when no selected check failed, 1 otherwise.
int exit_code(const std::vector<CheckOutcome>& outcomes) noexcept;

}  // namespace mtcv

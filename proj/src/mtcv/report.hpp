// Copyright (C) 2026 The mtcverify Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mtcv {

struct CheckResult {
  std::string check_name;
  bool passed = false;
  double residual = 0.0;
  double tol = 0.0;
  std::string detail;
};

/// Ordered list of named check results. An entry passes iff its residual does
/// not exceed its tolerance; a NaN residual never passes.
class VerificationReport {
 public:
  void add(std::string name, double residual, double tol, std::string detail = {});

  /// Lower-bound check: passes iff value >= threshold. Stored as the shortfall
  /// max(0, threshold - value) against a zero tolerance.
  void add_lower_bound(std::string name, double value, double threshold,
                       std::string detail = {});

  void append(const VerificationReport& other);

  const std::vector<CheckResult>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  bool all_passed() const noexcept;

  /// First entry with exactly this name, or nullptr.
  const CheckResult* find(std::string_view name) const noexcept;

  /// Largest residual among entries whose name starts with `prefix`.
  double max_residual(std::string_view prefix = {}) const noexcept;

 private:
  std::vector<CheckResult> entries_;
};

}  // namespace mtcv

// Copyright (C) 2026 The mtcverify Authors
// SPDX-License-Identifier: Apache-2.0

#include "mtcv/report.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace mtcv {

void VerificationReport::add(std::string name, double residual, double tol,
                             std::string detail) {
  const bool passed = !std::isnan(residual) && residual <= tol;
  entries_.push_back({std::move(name), passed, residual, tol, std::move(detail)});
}

void VerificationReport::add_lower_bound(std::string name, double value,
                                         double threshold, std::string detail) {
  const double shortfall = std::isnan(value) ? value : std::max(0.0, threshold - value);
  if (detail.empty()) detail = fmt::format("value={:.6e} threshold={:.3e}", value, threshold);
  add(std::move(name), shortfall, 0.0, std::move(detail));
}

void VerificationReport::append(const VerificationReport& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

bool VerificationReport::all_passed() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const CheckResult& r) { return r.passed; });
}

const CheckResult* VerificationReport::find(std::string_view name) const noexcept {
  for (const auto& e : entries_)
    if (e.check_name == name) return &e;
  return nullptr;
}

double VerificationReport::max_residual(std::string_view prefix) const noexcept {
  double worst = 0.0;
  for (const auto& e : entries_) {
    if (!std::string_view(e.check_name).starts_with(prefix)) continue;
    if (std::isnan(e.residual)) return e.residual;
    worst = std::max(worst, e.residual);
  }
  return worst;
}

}  // namespace mtcv

// Copyright (C) 2026 The mtcverify Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>
#include <vector>

#include "mtcv/fusion_data.hpp"

namespace fixture {

/// Fusion data from a list of nonzero (a, b, c, N) entries; the unit row and
/// column are added automatically with label 0 as unit.
inline mtcv::FusionData fusion(std::vector<std::string> names, std::vector<int> dual,
                               std::vector<mtcv::Rational> h, mtcv::Rational c,
                               const std::vector<std::array<int, 4>>& entries) {
  const int m = static_cast<int>(names.size());
  std::vector<int> n(static_cast<std::size_t>(m) * m * m, 0);
  for (int a = 0; a < m; ++a) {
    n[(0 * m + a) * m + a] = 1;
    n[(a * m + 0) * m + a] = 1;
  }
  for (const auto& [a, b, cc, k] : entries) n[(a * m + b) * m + cc] = k;
  std::vector<mtcv::Label> d;
  for (int x : dual) d.emplace_back(x);
  return mtcv::FusionData(std::move(names), mtcv::Label(0), std::move(d), std::move(h), c,
                          std::move(n));
}

/// Z/2 fusion rules (the toric-code-like "semion" ring) with the given weights.
inline mtcv::FusionData z2(mtcv::Rational h1) {
  return fusion({"1", "s"}, {0, 1}, {0, h1}, mtcv::Rational(1), {{1, 1, 0, 1}});
}

/// Fibonacci fusion rules.
inline mtcv::FusionData fib() {
  return fusion({"1", "tau"}, {0, 1}, {0, mtcv::Rational(2, 5)}, mtcv::Rational(14, 5),
                {{1, 1, 0, 1}, {1, 1, 1, 1}});
}

}  // namespace fixture

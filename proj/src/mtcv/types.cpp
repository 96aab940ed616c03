// Copyright (C) 2026 The mtcverify Authors
// SPDX-License-Identifier: Apache-2.0

#include "mtcv/types.hpp"

#include <cmath>

namespace mtcv {

Complex root_of_unity(const Rational& r) {
  // Reduce to [0, 1) before touching floating point so that large numerators
  // do not lose the fractional part.
  std::int64_t num = r.numerator() % r.denominator();
  if (num < 0) num += r.denominator();
  const Rational frac(num, r.denominator());
  const Rational quarters = frac * 4;
  if (quarters.denominator() == 1) {
    switch (quarters.numerator()) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
      default: break;
    }
  }
  return turn_phase(to_double(frac));
}

Complex turn_phase(double x) {
  const double angle = 2.0 * kPi * x;
  return {std::cos(angle), std::sin(angle)};
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace mtcv

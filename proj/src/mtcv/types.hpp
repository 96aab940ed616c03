// Copyright (C) 2026 The mtcverify Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/rational.hpp>

namespace mtcv {

using Complex = std::complex<double>;
using Rational = boost::rational<std::int64_t>;

inline constexpr double kPi = 3.14159265358979323846;

/// Dense index of a simple object. Only meaningful relative to the data set
/// that owns it.
struct Label {
  int index = 0;

  constexpr Label() = default;
  constexpr explicit Label(int i) : index(i) {}

  friend constexpr auto operator<=>(Label, Label) = default;
};

enum class ErrorCode {
  invalid_argument,
  parse,
  io,
  validation,
  unsupported,
  domain,
  missing_data,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// e^{2 pi i r}, exact on multiples of a quarter turn.
Complex root_of_unity(const Rational& r);

/// e^{2 pi i x} for a real turn count.
Complex turn_phase(double x);

double to_double(const Rational& r);

std::string to_string(const Rational& r);

}  // namespace mtcv

// Copyright (C) 2026 The mtcverify Authors
// SPDX-License-Identifier: Apache-2.0

#include "mtcv/number_expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <algorithm>
#include <cstdint>

#include <fmt/format.h>

namespace mtcv {

ExprError::ExprError(std::size_t position, const std::string& message)
    : Error(ErrorCode::parse, fmt::format("{} at position {}", message, position)),
      position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Complex parse() {
    Complex v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw ExprError(0, "non-finite value");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ExprError(pos_, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(fmt::format("expected '{}'", c));
  }

  bool accept_word(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    const std::size_t end = pos_ + word.size();
    if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
    pos_ = end;
    return true;
  }

  std::int64_t integer() {
    skip_space();
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec == std::errc::result_out_of_range) fail("integer literal too large");
    if (ec != std::errc() || ptr == begin) fail("expected integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  Complex expr() {
    Complex v = term();
    for (;;) {
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }

  Complex term() {
    Complex v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        const Complex d = unary();
        if (d == Complex{}) throw ExprError(at, "division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  Complex unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return atom();
  }

  Complex atom() {
    if (accept('(')) {
      Complex v = expr();
      expect(')');
      return v;
    }
    if (accept_word("sqrt")) {
      expect('(');
      Complex v = expr();
      expect(')');
      // Principal branch; a negative real argument gives +i sqrt(|x|).
      if (v.imag() == 0.0 && v.real() < 0.0) return {0.0, std::sqrt(-v.real())};
      return std::sqrt(v);
    }
    if (accept_word("e")) {
      expect('(');
      const bool negative = accept('-');
      std::int64_t p = integer();
      std::int64_t q = 1;
      if (accept('/')) {
        const std::size_t at = pos_;
        q = integer();
        if (q == 0) throw ExprError(at, "division by zero");
      }
      expect(')');
      return root_of_unity(Rational(negative ? -p : p, q));
    }
    skip_space();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      return {static_cast<double>(integer()), 0.0};
    fail(pos_ < text_.size() ? "unexpected character" : "unexpected end of expression");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string decimal(double x) {
  // Shortest round-trip digits, then rewritten with integers only.
  std::string s = fmt::format("{}", std::abs(x));
  std::string mantissa = s;
  int exponent = 0;
  if (auto e = s.find('e'); e != std::string::npos) {
    mantissa = s.substr(0, e);
    exponent = std::stoi(s.substr(e + 1));
  }
  if (auto dot = mantissa.find('.'); dot != std::string::npos) {
    exponent -= static_cast<int>(mantissa.size() - dot - 1);
    mantissa.erase(dot, 1);
  }
  mantissa.erase(0, std::min(mantissa.find_first_not_of('0'), mantissa.size() - 1));
  std::string out = mantissa;
  // Powers of ten in chunks that fit a 64-bit literal.
  const char* op = exponent > 0 ? "*1" : "/1";
  for (int left = std::abs(exponent); left > 0; left -= 18)
    out += op + std::string(std::min(left, 18), '0');
  return out;
}

}  // namespace

Complex parse_number_expr(std::string_view text) { return Parser(text).parse(); }

std::string format_number_expr(Complex value) {
  const double re = value.real();
  const double im = value.imag();
  if (!std::isfinite(re) || !std::isfinite(im))
    throw Error(ErrorCode::domain, "cannot format a non-finite value");
  std::string out;
  if (im == 0.0 || re != 0.0) out = (re < 0.0 ? "-" : "") + decimal(re);
  if (im != 0.0) {
    const std::string mag = decimal(im) + "*e(1/4)";
    if (out.empty())
      out = (im < 0.0 ? "-" : "") + mag;
    else
      out += (im < 0.0 ? " - " : " + ") + mag;
  }
  return out;
}

}  // namespace mtcv

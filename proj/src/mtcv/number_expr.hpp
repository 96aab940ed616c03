// Copyright (C) 2026 The mtcverify Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "mtcv/types.hpp"

namespace mtcv {

/// Syntax or evaluation error in a number expression; position is the
/// 0-based byte offset where the problem was found.
class ExprError : public Error {
 public:
  ExprError(std::size_t position, const std::string& message);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Evaluates an exact number expression:
///
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := ('+' | '-') unary | atom
///   atom   := integer | '(' expr ')' | 'sqrt' '(' expr ')' | 'e' '(' ['-'] p ['/' q] ')'
///
/// e(p/q) is e^{2 pi i p/q}, exact on quarter turns; sqrt takes the principal
/// branch. Division by zero and non-finite results are errors.
Complex parse_number_expr(std::string_view text);

/// Decimal fallback for values without a stored expression, in a form that
/// parse_number_expr reads back to within about 1e-17 relative error.
std::string format_number_expr(Complex value);

}  // namespace mtcv

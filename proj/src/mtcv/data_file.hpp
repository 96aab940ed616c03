// Copyright (C) 2026 The mtcverify Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mtcv/characters.hpp"
#include "mtcv/fr_symbols.hpp"
#include "mtcv/fusion_data.hpp"
#include "mtcv/report.hpp"

namespace mtcv {

/// Error in an "mtc-data v1" text; line is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message);

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Structurally well-formed input whose data fail validation.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& message, VerificationReport report);

  const VerificationReport& report() const noexcept { return report_; }

 private:
  VerificationReport report_;
};

/// Source text of each stored number, so that export reproduces the input.
struct ExpressionText {
  std::map<std::pair<int, int>, std::string> s;
  std::map<FIndex, std::string> f;
  std::map<RIndex, std::string> r;
};

struct ModularDataSet {
  std::string name;
  FusionData data;
  SMatrix S;
  std::optional<FRSymbols> fr;
  std::optional<CharacterGenerator> chars;
  std::vector<std::string> notes;
  ExpressionText text;
};

/// Parses and validates an "mtc-data v1" text.
///
///   mtc-data v1                 first line
///   # ...                       comment (also trailing, except on note lines)
///   name <id>
///   note <free text>            repeatable
///   labels <l1> ... <lm>
///   unit <l>
///   dual <d(l1)> ... <d(lm)>
///   h <rational> ...            one per label
///   c <rational>
///   N <a> <b> <c> = <k>         omitted entries are 0; N[e][a][b] is implied
///   S <row> = <expr>, ...       one line per label
///   F <a1> ... <a6> = <expr>
///   R <a> <b> <c> = <expr>
///   chars ising | chars su2 <k>
///
/// Throws ParseError for malformed text and ValidationError when the parsed
/// fusion data fail validate() or S does not have one row per label.
ModularDataSet parse_data_file(std::string_view text);

/// Reads and parses a file. Throws Error(io) when it cannot be read.
ModularDataSet load_data_file(const std::filesystem::path& path);

/// Canonical text: header, name, notes, labels, unit, dual, h, c, nonzero N
/// outside the unit row, S rows, F and R sorted by index, chars.
std::string export_data_file(const ModularDataSet& set);

}  // namespace mtcv

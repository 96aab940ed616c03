// Copyright (C) 2026 The mtcverify Authors
// SPDX-License-Identifier: Apache-2.0

#include "mtcv/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include <fmt/format.h>

namespace mtcv {

namespace {

constexpr std::string_view kTrivial = R"mtc(mtc-data v1
name trivial
note Rank-one category of the trivial theory.
labels 1
unit 1
dual 1
h 0
c 0
S 1 = 1
F 1 1 1 1 1 1 = 1
R 1 1 1 = 1
)mtc";

constexpr std::string_view kFibonacci = R"mtc(mtc-data v1
name fibonacci
note Fibonacci category (tau x tau = 1 + tau), unitary gauge.
note No character data: the series are not part of the catalog.
labels 1 tau
unit 1
dual 1 tau
h 0 2/5
c 14/5
N tau 1 tau = 1
N tau tau 1 = 1
N tau tau tau = 1
S 1 = 1/sqrt((5+sqrt(5))/2), (1+sqrt(5))/2/sqrt((5+sqrt(5))/2)
S tau = (1+sqrt(5))/2/sqrt((5+sqrt(5))/2), -1/sqrt((5+sqrt(5))/2)
F 1 1 1 1 1 1 = 1
F 1 1 tau tau tau 1 = 1
F 1 tau 1 tau tau tau = 1
F 1 tau tau 1 1 tau = 1
F 1 tau tau tau tau tau = 1
F tau 1 1 tau 1 tau = 1
F tau 1 tau 1 tau tau = 1
F tau 1 tau tau tau tau = 1
F tau tau 1 1 tau 1 = 1
F tau tau 1 tau tau tau = 1
F tau tau tau 1 tau tau = 1
F tau tau tau tau 1 1 = (sqrt(5)-1)/2
F tau tau tau tau 1 tau = sqrt((sqrt(5)-1)/2)
F tau tau tau tau tau 1 = sqrt((sqrt(5)-1)/2)
F tau tau tau tau tau tau = (1-sqrt(5))/2
R 1 1 1 = 1
R 1 tau tau = 1
R tau 1 tau = 1
R tau tau 1 = e(-2/5)
R tau tau tau = e(3/10)
)mtc";

constexpr std::string_view kIsing = R"mtc(mtc-data v1
name ising
note Ising category (c = 1/2 minimal model), unitary gauge.
labels 1 sigma psi
unit 1
dual 1 sigma psi
h 0 1/16 1/2
c 1/2
N sigma 1 sigma = 1
N sigma sigma 1 = 1
N sigma sigma psi = 1
N sigma psi sigma = 1
N psi 1 psi = 1
N psi sigma sigma = 1
N psi psi 1 = 1
S 1 = 1/2, sqrt(2)/2, 1/2
S sigma = sqrt(2)/2, 0, -sqrt(2)/2
S psi = 1/2, -sqrt(2)/2, 1/2
F 1 1 1 1 1 1 = 1
F 1 1 sigma sigma sigma 1 = 1
F 1 1 psi psi psi 1 = 1
F 1 sigma 1 sigma sigma sigma = 1
F 1 sigma sigma 1 1 sigma = 1
F 1 sigma sigma psi psi sigma = 1
F 1 sigma psi sigma sigma sigma = 1
F 1 psi 1 psi psi psi = 1
F 1 psi sigma sigma sigma psi = 1
F 1 psi psi 1 1 psi = 1
F sigma 1 1 sigma 1 sigma = 1
F sigma 1 sigma 1 sigma sigma = 1
F sigma 1 sigma psi sigma sigma = 1
F sigma 1 psi sigma psi sigma = 1
F sigma sigma 1 1 sigma 1 = 1
F sigma sigma 1 psi sigma psi = 1
F sigma sigma sigma sigma 1 1 = sqrt(2)/2
F sigma sigma sigma sigma 1 psi = sqrt(2)/2
F sigma sigma sigma sigma psi 1 = sqrt(2)/2
F sigma sigma sigma sigma psi psi = -sqrt(2)/2
F sigma sigma psi 1 sigma psi = 1
F sigma sigma psi psi sigma 1 = 1
F sigma psi 1 sigma psi sigma = 1
F sigma psi sigma 1 sigma sigma = 1
F sigma psi sigma psi sigma sigma = -1
F sigma psi psi sigma 1 sigma = 1
F psi 1 1 psi 1 psi = 1
F psi 1 sigma sigma sigma psi = 1
F psi 1 psi 1 psi psi = 1
F psi sigma 1 sigma sigma sigma = 1
F psi sigma sigma 1 psi sigma = 1
F psi sigma sigma psi 1 sigma = 1
F psi sigma psi sigma sigma sigma = -1
F psi psi 1 1 psi 1 = 1
F psi psi sigma sigma sigma 1 = 1
F psi psi psi psi 1 1 = 1
R 1 1 1 = 1
R 1 sigma sigma = 1
R 1 psi psi = 1
R sigma 1 sigma = 1
R sigma sigma 1 = e(-1/16)
R sigma sigma psi = e(3/16)
R sigma psi sigma = e(-1/4)
R psi 1 psi = 1
R psi sigma sigma = e(-1/4)
R psi psi 1 = -1
chars ising
)mtc";
constexpr int kMaxLevel = 8;

std::string su2_text(int k) {
  const int K = k + 2;
  const int m = k + 1;
  std::vector<std::string> out = {
      "mtc-data v1",
      fmt::format("name su2-{}", k),
      fmt::format("note Level-{} su(2) WZW category; label l is twice the spin.", k),
      "note S is the Kac-Peterson matrix written with roots of unity.",
  };
  std::string line = "labels";
  for (int l = 0; l < m; ++l) line += fmt::format(" {}", l);
  out.push_back(line);
  out.push_back("unit 0");
  line = "dual";
  for (int l = 0; l < m; ++l) line += fmt::format(" {}", l);
  out.push_back(line);
  line = "h";
  for (int l = 0; l < m; ++l) line += " " + to_string(Rational(l * (l + 2), 4 * K));
  out.push_back(line);
  out.push_back("c " + to_string(Rational(3 * k, K)));
  for (int a = 1; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        if (std::abs(a - b) <= c && c <= std::min(a + b, 2 * k - a - b) && (a + b + c) % 2 == 0)
          out.push_back(fmt::format("N {} {} {} = 1", a, b, c));
  for (int a = 0; a < m; ++a) {
    line = fmt::format("S {} =", a);
    for (int b = 0; b < m; ++b) {
      const std::string r = to_string(Rational((a + 1) * (b + 1), 2 * K));
      line += fmt::format("{} sqrt(2/{})*(e({})-e(-{}))/(2*e(1/4))", b ? "," : "", K, r, r);
    }
    out.push_back(line);
  }
  out.push_back(fmt::format("chars su2 {}", k));
  std::string text;
  for (const auto& l : out) text += l + "\n";
  return text;
}

int su2_level(std::string_view name) {
  if (name.size() != 5 || name.substr(0, 4) != "su2-") return 0;
  const int k = name[4] - '0';
  return k >= 1 && k <= kMaxLevel ? k : 0;
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> names = {"trivial", "fibonacci", "ising"};
  for (int k = 1; k <= kMaxLevel; ++k) names.push_back(fmt::format("su2-{}", k));
  return names;
}

std::string catalog_text(std::string_view name) {
  if (name == "trivial") return std::string(kTrivial);
  if (name == "fibonacci") return std::string(kFibonacci);
  if (name == "ising") return std::string(kIsing);
  if (const int k = su2_level(name)) return su2_text(k);
  throw Error(ErrorCode::invalid_argument, fmt::format("unknown catalog entry '{}'", name));
}

CatalogEntry get_entry(std::string_view name) { return parse_data_file(catalog_text(name)); }

SMatrix su2k_smatrix(int k) {
  if (k < 1 || k > kMaxLevel)
    throw Error(ErrorCode::invalid_argument,
                fmt::format("su2 level must lie in [1, {}], got {}", kMaxLevel, k));
  const int m = k + 1;
  const double K = k + 2;
  Eigen::MatrixXcd s(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      s(a, b) = std::sqrt(2.0 / K) * std::sin(kPi * (a + 1) * (b + 1) / K);
  return SMatrix(std::move(s));
}

namespace {

CharacterGenerator generator_of(std::string_view entry) {
  const CatalogEntry e = get_entry(entry);
  if (!e.chars)
    throw Error(ErrorCode::unsupported, fmt::format("'{}' has no character data", entry));
  return *e.chars;
}

}  // namespace

QCharacter character_series(std::string_view entry, Label a, int order) {
  return character_series(generator_of(entry), a, order);
}

VerificationReport verify_modular_S(std::string_view entry, const SMatrix& S, Complex tau,
                                    int order, double tol) {
  return verify_modular_S(generator_of(entry), S, tau, order, tol);
}

}  // namespace mtcv

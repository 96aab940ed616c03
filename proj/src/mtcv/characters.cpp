// Copyright (C) 2026 The mtcverify Authors
// SPDX-License-Identifier: Apache-2.0

#include "mtcv/characters.hpp"

#include <cmath>

#include <fmt/format.h>

#include "mtcv/fusion_modular.hpp"

namespace mtcv {

namespace {

constexpr int kMaxOrder = 100000;

// Multiplies the series in place by 1 / (1 - q^n).
void divide_by_one_minus(std::vector<BigInt>& s, int n) {
  for (std::size_t i = n; i < s.size(); ++i) s[i] += s[i - n];
}

// Multiplies the series in place by (1 + q^n).
void multiply_by_one_plus(std::vector<BigInt>& s, int n) {
  for (std::size_t i = s.size(); i-- > static_cast<std::size_t>(n);) s[i] += s[i - n];
}

QCharacter ising_series(int a, int order) {
  if (a == 1) {
    std::vector<BigInt> s(order);
    s[0] = 1;
    for (int n = 1; n < order; ++n) multiply_by_one_plus(s, n);
    return {Rational(1, 24), std::move(s)};
  }
  // prod (1 + t^{2n-1}) in t = q^{1/2}; even powers give chi_1, odd chi_psi.
  std::vector<BigInt> t(2 * static_cast<std::size_t>(order) + 1);
  t[0] = 1;
  for (int k = 1; k < static_cast<int>(t.size()); k += 2) multiply_by_one_plus(t, k);
  std::vector<BigInt> s(order);
  const int offset = a == 0 ? 0 : 1;
  for (int j = 0; j < order; ++j) s[j] = t[2 * j + offset];
  return {a == 0 ? Rational(-1, 48) : Rational(23, 48), std::move(s)};
}

QCharacter su2_series(int level, int lambda, int order) {
  const std::int64_t K = level + 2;
  const std::int64_t m = lambda + 1;
  std::vector<BigInt> s(order);
  // sum_n (m + 2Kn) q^{K n^2 + m n}; the exponent is nonnegative since 0 < m < K.
  for (std::int64_t n = 0;; ++n) {
    const std::int64_t e = K * n * n + m * n;
    if (e >= order) break;
    s[e] += m + 2 * K * n;
  }
  for (std::int64_t n = -1;; --n) {
    const std::int64_t e = K * n * n + m * n;
    if (e >= order) break;
    s[e] += m + 2 * K * n;
  }
  for (int n = 1; n < order; ++n)
    for (int r = 0; r < 3; ++r) divide_by_one_minus(s, n);
  return {Rational(m * m, 4 * K) - Rational(1, 8), std::move(s)};
}

}  // namespace

int CharacterGenerator::rank() const {
  switch (family) {
    case CharacterFamily::ising:
      return 3;
    case CharacterFamily::su2:
      if (level < 1) throw Error(ErrorCode::invalid_argument, "su2 level must be positive");
      return level + 1;
  }
  throw Error(ErrorCode::invalid_argument, "unknown character family");
}

QCharacter character_series(const CharacterGenerator& gen, Label a, int order) {
  const int m = gen.rank();
  if (a.index < 0 || a.index >= m)
    throw Error(ErrorCode::invalid_argument,
                fmt::format("character label {} out of range [0, {})", a.index, m));
  if (order < 1 || order > kMaxOrder)
    throw Error(ErrorCode::invalid_argument,
                fmt::format("truncation order must lie in [1, {}], got {}", kMaxOrder, order));
  if (gen.family == CharacterFamily::ising) return ising_series(a.index, order);
  return su2_series(gen.level, a.index, order);
}

Complex eval_character(const QCharacter& chi, Complex tau) {
  if (!(tau.imag() > 0.0))
    throw Error(ErrorCode::domain, fmt::format("Im tau must be positive, got {}", tau.imag()));
  const Complex two_pi_i_tau = Complex(0.0, 2.0 * kPi) * tau;
  const Complex q = std::exp(two_pi_i_tau);
  Complex sum{};
  Complex qn{1.0, 0.0};
  for (const auto& c : chi.coeffs) {
    if (c != 0) sum += c.convert_to<double>() * qn;
    qn *= q;
  }
  return std::exp(two_pi_i_tau * to_double(chi.alpha)) * sum;
}

VerificationReport verify_modular_S(const CharacterGenerator& gen, const SMatrix& S, Complex tau,
                                    int order, double tol) {
  const int m = gen.rank();
  if (S.rank() != m)
    throw Error(ErrorCode::invalid_argument,
                fmt::format("S has rank {}, characters have rank {}", S.rank(), m));
  const Complex tau_s = -1.0 / tau;
  if (tau.imag() < 0.5 || tau_s.imag() < 0.5)
    throw Error(ErrorCode::domain,
                fmt::format("need Im tau >= 0.5 and Im(-1/tau) >= 0.5, got {} and {}", tau.imag(),
                            tau_s.imag()));
  std::vector<Complex> at_tau(m);
  std::vector<Complex> at_s(m);
  for (int a = 0; a < m; ++a) {
    const QCharacter chi = character_series(gen, Label(a), order);
    at_tau[a] = eval_character(chi, tau);
    at_s[a] = eval_character(chi, tau_s);
  }
  double worst = 0.0;
  int where = 0;
  for (int a = 0; a < m; ++a) {
    Complex rhs{};
    for (int b = 0; b < m; ++b) rhs += S(a, b) * at_tau[b];
    const double res = std::abs(at_s[a] - rhs);
    if (res > worst) {
      worst = res;
      where = a;
    }
  }
  VerificationReport report;
  report.add("modular-S", worst, tol, fmt::format("label index {}", where));
  return report;
}

VerificationReport verify_t_consistency(const CharacterGenerator& gen, const FusionData& data,
                                        Complex tau, int order, double tol) {
  const int m = gen.rank();
  if (data.rank() != m)
    throw Error(ErrorCode::invalid_argument,
                fmt::format("fusion data has rank {}, characters have rank {}", data.rank(), m));
  const TMatrix T = t_matrix(data);
  VerificationReport report;
  double worst = 0.0;
  std::string exponent_issue;
  std::string coeff_issue;
  for (int a = 0; a < m; ++a) {
    const QCharacter chi = character_series(gen, Label(a), order);
    const double res =
        std::abs(eval_character(chi, tau + 1.0) - T.diagonal[a] * eval_character(chi, tau));
    worst = std::max(worst, res);
    const Rational expected = data.weights()[a] - data.c() / Rational(24);
    if (chi.alpha != expected && exponent_issue.empty())
      exponent_issue = fmt::format("{}: alpha {} but h - c/24 = {}", data.names()[a],
                                   to_string(chi.alpha), to_string(expected));
    if (coeff_issue.empty()) {
      if (chi.coeffs[0] < 1) coeff_issue = fmt::format("{}: leading coefficient < 1", data.names()[a]);
      for (int n = 0; n < chi.order() && coeff_issue.empty(); ++n)
        if (chi.coeffs[n] < 0)
          coeff_issue = fmt::format("{}: negative coefficient at n={}", data.names()[a], n);
    }
  }
  report.add("t-consistency", worst, tol);
  report.add("leading-exponent", exponent_issue.empty() ? 0.0 : 1.0, 0.0, exponent_issue);
  report.add("coefficients", coeff_issue.empty() ? 0.0 : 1.0, 0.0, coeff_issue);
  return report;
}

}  // namespace mtcv

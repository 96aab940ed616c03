// Copyright (C) 2026 The mtcverify Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mtcv/fusion_data.hpp"
#include "mtcv/report.hpp"

namespace mtcv {

using BigInt = boost::multiprecision::cpp_int;

/// Truncated q-series q^alpha * sum_{n < order} coeffs[n] q^n.
struct QCharacter {
  Rational alpha;
  std::vector<BigInt> coeffs;

  int order() const noexcept { return static_cast<int>(coeffs.size()); }
};

enum class CharacterFamily {
  /// c = 1/2 minimal model, labels (1, sigma, psi).
  ising,
  /// Level-k affine su(2), labels lambda = 0..k (twice the spin).
  su2,
};

struct CharacterGenerator {
  CharacterFamily family = CharacterFamily::ising;
  int level = 0;

  /// Number of characters. Throws Error(invalid_argument) for a bad level.
  int rank() const;
};

/// Throws Error(invalid_argument) for a label outside the family or order < 1.
QCharacter character_series(const CharacterGenerator& gen, Label a, int order);

/// sum_n coeffs[n] e^{2 pi i tau (alpha + n)}. Throws Error(domain) unless Im tau > 0.
Complex eval_character(const QCharacter& chi, Complex tau);

/// max_a |chi_a(-1/tau) - sum_b S_a^b chi_b(tau)|. Requires Im tau >= 0.5 and
/// Im(-1/tau) >= 0.5 so that both truncations converge; throws Error(domain)
/// otherwise.
VerificationReport verify_modular_S(const CharacterGenerator& gen, const SMatrix& S, Complex tau,
                                    int order, double tol);

/// chi_a(tau + 1) = T_a chi_a(tau), leading exponents against h_a - c/24 and
/// nonnegativity of the coefficients.
VerificationReport verify_t_consistency(const CharacterGenerator& gen, const FusionData& data,
                                        Complex tau, int order, double tol);

}  // namespace mtcv

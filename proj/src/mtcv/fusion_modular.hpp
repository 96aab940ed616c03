// Copyright (C) 2026 The mtcverify Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "mtcv/fusion_data.hpp"
#include "mtcv/report.hpp"

namespace mtcv {

/// Diagonal of the modular T matrix, T_a = e^{2 pi i (h_a - c/24)}.
struct TMatrix {
  std::vector<Complex> diagonal;
};

/// Ribbon twists theta_a = e^{2 pi i h_a}.
struct Twist {
  std::vector<Complex> theta;
};

TMatrix t_matrix(const FusionData& data);
Twist twist(const FusionData& data);

/// m*m*m complex tensor indexed like the fusion tensor.
class ComplexTensor3 {
 public:
  explicit ComplexTensor3(int rank)
      : rank_(rank), values_(static_cast<std::size_t>(rank) * rank * rank) {}

  int rank() const noexcept { return rank_; }
  Complex& operator()(int a, int b, int c) noexcept { return values_[(a * rank_ + b) * rank_ + c]; }
  Complex operator()(int a, int b, int c) const noexcept {
    return values_[(a * rank_ + b) * rank_ + c];
  }

 private:
  int rank_;
  std::vector<Complex> values_;
};

/// N(a) with (a1, a2) entry N_{a a1}^{a2}.
Eigen::MatrixXi fusion_matrix(const FusionData& data, Label a);

/// Commutativity, associativity and the dual channel N_{ab}^e = delta_{b,a'}.
VerificationReport verify_fusion_axioms(const FusionData& data);

/// sum_x S_{a1}^x S_{a2}^x S_x^{a3'} / S_e^x. Throws Error(domain) if some
/// |S_e^x| < eps.
ComplexTensor3 verlinde_fusion(const SMatrix& S, std::span<const Label> dual, Label unit,
                               double eps = ToleranceConfig{}.eps);

/// Integrality of the Verlinde tensor (1e-6 rule) and exact agreement of its
/// rounding with the stored fusion rules.
VerificationReport verify_verlinde(const FusionData& data, const SMatrix& S,
                                   const ToleranceConfig& tol = {});

/// S^{-1} N S for every label: off-diagonal size and diagonal against
/// S_a^x / S_e^x. Throws Error(domain) for a singular S.
VerificationReport verify_diagonalization(const FusionData& data, const SMatrix& S,
                                          const ToleranceConfig& tol = {});

/// Symmetry, non-vanishing unit row and |det S|.
VerificationReport verify_s_properties(const SMatrix& S, Label unit,
                                       const ToleranceConfig& tol = {});

/// d_a = S_e^a / S_e^e. Throws Error(domain) if |S_e^e| < eps.
Complex quantum_dimension(const SMatrix& S, Label unit, Label a,
                          double eps = ToleranceConfig{}.eps);

/// Twist expansion of the double-braiding trace against S_{a1}^{a2} / S_e^e.
VerificationReport verify_balancing(const FusionData& data, const SMatrix& S,
                                    const ToleranceConfig& tol = {});

/// Determinant of the matrix S_{a1}^{a2} / S_e^e against eps_det.
VerificationReport verify_nondegeneracy(const FusionData& data, const SMatrix& S,
                                        const ToleranceConfig& tol = {});

/// Inverse of S, throwing Error(domain) when S is numerically singular.
Eigen::MatrixXcd checked_inverse(const SMatrix& S);

}  // namespace mtcv

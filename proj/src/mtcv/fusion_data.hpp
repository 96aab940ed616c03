// Copyright (C) 2026 The mtcverify Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "mtcv/report.hpp"
#include "mtcv/types.hpp"

namespace mtcv {

/// Label set with unit, duality, conformal weights, central charge and the
/// fusion multiplicities N_{ab}^c. Construction only checks shapes and index
/// ranges; the algebraic invariants are checked by validate().
class FusionData {
 public:
  /// `fusion` is the flat m*m*m tensor indexed as (a*m + b)*m + c.
  FusionData(std::vector<std::string> names, Label unit, std::vector<Label> dual,
             std::vector<Rational> weights, Rational central_charge,
             std::vector<int> fusion);

  int rank() const noexcept { return rank_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Label a) const { return names_.at(checked(a)); }
  Label unit() const noexcept { return unit_; }
  Label dual(Label a) const { return dual_.at(checked(a)); }
  const Rational& h(Label a) const { return weights_.at(checked(a)); }
  const std::vector<Rational>& weights() const noexcept { return weights_; }
  const Rational& c() const noexcept { return central_charge_; }

  int N(Label a, Label b, Label c) const {
    return n(checked(a), checked(b), checked(c));
  }
  /// Unchecked raw-index access for inner loops.
  int n(int a, int b, int c) const noexcept { return fusion_[(a * rank_ + b) * rank_ + c]; }
  int dual_index(int a) const noexcept { return dual_[a].index; }
  double weight(int a) const noexcept { return weight_values_[a]; }
  int unit_index() const noexcept { return unit_.index; }

  const std::vector<int>& fusion_tensor() const noexcept { return fusion_; }

  std::optional<Label> find(std::string_view name) const noexcept;

  /// Throws Error(invalid_argument) when the index is out of range.
  Label label(int index) const;

  bool multiplicity_free() const noexcept;

 private:
  int checked(Label a) const;

  int rank_;
  std::vector<std::string> names_;
  Label unit_;
  std::vector<Label> dual_;
  std::vector<Rational> weights_;
  std::vector<double> weight_values_;
  Rational central_charge_;
  std::vector<int> fusion_;
};

/// The modular S matrix, S(a1, a2) = S_{a1}^{a2}. Invertibility is validated by
/// verify_s_properties, not assumed here.
class SMatrix {
 public:
  explicit SMatrix(Eigen::MatrixXcd entries);

  int rank() const noexcept { return static_cast<int>(entries_.rows()); }
  Complex operator()(int a1, int a2) const noexcept { return entries_(a1, a2); }
  Complex at(Label a1, Label a2) const;
  const Eigen::MatrixXcd& matrix() const noexcept { return entries_; }

 private:
  Eigen::MatrixXcd entries_;
};

struct ToleranceConfig {
  double eps = 1e-9;
  double eps_det = 1e-8;

  /// Throws Error(invalid_argument) unless 0 < eps < 1 and eps_det > 0.
  void check() const;
};

/// One entry per structural invariant of FusionData. Never throws.
VerificationReport validate(const FusionData& data);

}  // namespace mtcv

// Copyright (C) 2026 The mtcverify Authors
// SPDX-License-Identifier: Apache-2.0

#include "mtcv/fusion_data.hpp"

#include <set>

#include <fmt/format.h>

namespace mtcv {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::invalid_argument, message);
}

}  // namespace

FusionData::FusionData(std::vector<std::string> names, Label unit, std::vector<Label> dual,
                       std::vector<Rational> weights, Rational central_charge,
                       std::vector<int> fusion)
    : rank_(static_cast<int>(names.size())),
      names_(std::move(names)),
      unit_(unit),
      dual_(std::move(dual)),
      weights_(std::move(weights)),
      central_charge_(central_charge),
      fusion_(std::move(fusion)) {
  require(rank_ > 0, "fusion data needs at least one label");
  require(unit_.index >= 0 && unit_.index < rank_, "unit label out of range");
  require(static_cast<int>(dual_.size()) == rank_,
          fmt::format("dual has {} entries, expected {}", dual_.size(), rank_));
  for (Label d : dual_) require(d.index >= 0 && d.index < rank_, "dual label out of range");
  require(static_cast<int>(weights_.size()) == rank_,
          fmt::format("h has {} entries, expected {}", weights_.size(), rank_));
  const auto cube = static_cast<std::size_t>(rank_) * rank_ * rank_;
  require(fusion_.size() == cube,
          fmt::format("fusion tensor has {} entries, expected {}", fusion_.size(), cube));
  weight_values_.reserve(weights_.size());
  for (const auto& w : weights_) weight_values_.push_back(to_double(w));
}

int FusionData::checked(Label a) const {
  if (a.index < 0 || a.index >= rank_)
    throw Error(ErrorCode::invalid_argument,
                fmt::format("label index {} out of range [0, {})", a.index, rank_));
  return a.index;
}

Label FusionData::label(int index) const { return Label(checked(Label(index))); }

std::optional<Label> FusionData::find(std::string_view name) const noexcept {
  for (int i = 0; i < rank_; ++i)
    if (names_[i] == name) return Label(i);
  return std::nullopt;
}

bool FusionData::multiplicity_free() const noexcept {
  for (int v : fusion_)
    if (v > 1) return false;
  return true;
}

SMatrix::SMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
  require(entries_.rows() > 0 && entries_.rows() == entries_.cols(),
          "S matrix must be square and non-empty");
}

Complex SMatrix::at(Label a1, Label a2) const {
  require(a1.index >= 0 && a1.index < rank() && a2.index >= 0 && a2.index < rank(),
          "S matrix index out of range");
  return entries_(a1.index, a2.index);
}

void ToleranceConfig::check() const {
  require(eps > 0.0 && eps < 1.0, fmt::format("eps must lie in (0, 1), got {}", eps));
  require(eps_det > 0.0, fmt::format("eps_det must be positive, got {}", eps_det));
}

VerificationReport validate(const FusionData& data) {
  VerificationReport report;
  const int m = data.rank();
  const int e = data.unit_index();

  auto add_flag = [&report](std::string name, const std::string& first_violation) {
    report.add(std::move(name), first_violation.empty() ? 0.0 : 1.0, 0.0, first_violation);
  };
  const auto& names = data.names();

  std::string violation;
  for (int a = 0; a < m && violation.empty(); ++a)
    if (data.dual_index(data.dual_index(a)) != a)
      violation = fmt::format("dual(dual({})) = {}", names[a], names[data.dual_index(data.dual_index(a))]);
  add_flag("dual-involution", violation);

  violation.clear();
  if (data.dual_index(e) != e) violation = fmt::format("dual(e) = {}", names[data.dual_index(e)]);
  add_flag("dual-unit", violation);

  violation.clear();
  for (int a = 0; a < m && violation.empty(); ++a)
    for (int b = 0; b < m && violation.empty(); ++b)
      if (data.n(e, a, b) != (a == b ? 1 : 0))
        violation = fmt::format("N[e][{}][{}] = {}", names[a], names[b], data.n(e, a, b));
  add_flag("unit-fusion", violation);

  violation.clear();
  for (int a = 0; a < m && violation.empty(); ++a)
    if (data.n(a, data.dual_index(a), e) != 1)
      violation = fmt::format("N[{}][{}][e] = {}", names[a], names[data.dual_index(a)],
                              data.n(a, data.dual_index(a), e));
  add_flag("dual-channel", violation);

  violation.clear();
  for (int a = 0; a < m && violation.empty(); ++a)
    for (int b = 0; b < m && violation.empty(); ++b)
      for (int c = 0; c < m && violation.empty(); ++c)
        if (data.n(a, b, c) < 0)
          violation = fmt::format("N[{}][{}][{}] = {}", names[a], names[b], names[c], data.n(a, b, c));
  add_flag("nonnegative", violation);

  violation.clear();
  if (data.h(data.unit()).numerator() != 0) violation = "h_e = " + to_string(data.h(data.unit()));
  add_flag("unit-weight", violation);

  violation.clear();
  std::set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second && violation.empty()) violation = "duplicate label " + n;
  add_flag("distinct-names", violation);

  return report;
}

}  // namespace mtcv

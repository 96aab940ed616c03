// Copyright (C) 2026 The mtcverify Authors
// SPDX-License-Identifier: Apache-2.0

#include "mtcv/fusion_modular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace mtcv {

namespace {

// Integrality rule for the Verlinde tensor.
constexpr double kIntegralTol = 1e-6;

void require_same_rank(const FusionData& data, const SMatrix& S) {
  if (data.rank() != S.rank())
    throw Error(ErrorCode::invalid_argument,
                fmt::format("S is {0}x{0} but the data has {1} labels", S.rank(), data.rank()));
}

std::vector<Label> dual_labels(const FusionData& data) {
  std::vector<Label> dual;
  dual.reserve(data.rank());
  for (int a = 0; a < data.rank(); ++a) dual.push_back(data.dual(Label(a)));
  return dual;
}

}  // namespace

TMatrix t_matrix(const FusionData& data) {
  TMatrix t;
  const Rational shift = data.c() / 24;
  for (const auto& h : data.weights()) t.diagonal.push_back(root_of_unity(h - shift));
  return t;
}

Twist twist(const FusionData& data) {
  Twist t;
  for (const auto& h : data.weights()) t.theta.push_back(root_of_unity(h));
  return t;
}

Eigen::MatrixXi fusion_matrix(const FusionData& data, Label a) {
  const int m = data.rank();
  const int row = data.label(a.index).index;
  Eigen::MatrixXi out(m, m);
  for (int a1 = 0; a1 < m; ++a1)
    for (int a2 = 0; a2 < m; ++a2) out(a1, a2) = data.n(row, a1, a2);
  return out;
}

VerificationReport verify_fusion_axioms(const FusionData& data) {
  VerificationReport report;
  const int m = data.rank();
  const int e = data.unit_index();
  const auto& names = data.names();

  std::string violation;
  for (int a = 0; a < m && violation.empty(); ++a)
    for (int b = 0; b < m && violation.empty(); ++b)
      for (int c = 0; c < m && violation.empty(); ++c)
        if (data.n(a, b, c) != data.n(b, a, c))
          violation = fmt::format("N[{0}][{1}][{2}] = {3} but N[{1}][{0}][{2}] = {4}", names[a],
                                  names[b], names[c], data.n(a, b, c), data.n(b, a, c));
  report.add("commutativity", violation.empty() ? 0.0 : 1.0, 0.0, violation);

  violation.clear();
  for (int a = 0; a < m && violation.empty(); ++a)
    for (int b = 0; b < m && violation.empty(); ++b)
      for (int c = 0; c < m && violation.empty(); ++c)
        for (int d = 0; d < m && violation.empty(); ++d) {
          long left = 0;
          long right = 0;
          for (int x = 0; x < m; ++x) {
            left += static_cast<long>(data.n(a, b, x)) * data.n(x, c, d);
            right += static_cast<long>(data.n(b, c, x)) * data.n(a, x, d);
          }
          if (left != right)
            violation = fmt::format("(({0}{1}){2} -> {3}) = {4} but ({0}({1}{2}) -> {3}) = {5}",
                                    names[a], names[b], names[c], names[d], left, right);
        }
  report.add("associativity", violation.empty() ? 0.0 : 1.0, 0.0, violation);

  violation.clear();
  for (int a = 0; a < m && violation.empty(); ++a)
    for (int b = 0; b < m && violation.empty(); ++b) {
      const int expected = b == data.dual_index(a) ? 1 : 0;
      if (data.n(a, b, e) != expected)
        violation = fmt::format("N[{}][{}][e] = {}, expected {}", names[a], names[b],
                                data.n(a, b, e), expected);
    }
  report.add("dual-channel", violation.empty() ? 0.0 : 1.0, 0.0, violation);
  return report;
}

ComplexTensor3 verlinde_fusion(const SMatrix& S, std::span<const Label> dual, Label unit,
                               double eps) {
  const int m = S.rank();
  if (static_cast<int>(dual.size()) != m || unit.index < 0 || unit.index >= m)
    throw Error(ErrorCode::invalid_argument, "dual map or unit does not match the S matrix");
  const int e = unit.index;
  for (int x = 0; x < m; ++x)
    if (std::abs(S(e, x)) < eps)
      throw Error(ErrorCode::domain,
                  fmt::format("|S_e^{}| = {:.3e} is below eps; S is inconsistent", x,
                              std::abs(S(e, x))));
  ComplexTensor3 out(m);
  for (int a1 = 0; a1 < m; ++a1)
    for (int a2 = 0; a2 < m; ++a2)
      for (int a3 = 0; a3 < m; ++a3) {
        Complex sum = 0.0;
        const int a3_dual = dual[a3].index;
        for (int x = 0; x < m; ++x) sum += S(a1, x) * S(a2, x) * S(x, a3_dual) / S(e, x);
        out(a1, a2, a3) = sum;
      }
  return out;
}

VerificationReport verify_verlinde(const FusionData& data, const SMatrix& S,
                                   const ToleranceConfig& tol) {
  require_same_rank(data, S);
  const int m = data.rank();
  const auto dual = dual_labels(data);
  const auto verlinde = verlinde_fusion(S, dual, data.unit(), tol.eps);

  double max_error = 0.0;
  double max_fraction = 0.0;
  double most_negative = 0.0;
  std::string mismatch;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        const Complex v = verlinde(a, b, c);
        const double nearest = std::round(v.real());
        max_fraction = std::max(max_fraction, std::abs(v - Complex(nearest, 0.0)));
        most_negative = std::min(most_negative, v.real());
        max_error = std::max(max_error, std::abs(v - Complex(data.n(a, b, c), 0.0)));
        if (mismatch.empty() && static_cast<long>(nearest) != data.n(a, b, c))
          mismatch = fmt::format("N[{}][{}][{}]: Verlinde gives {}, stored {}", data.names()[a],
                                 data.names()[b], data.names()[c], nearest, data.n(a, b, c));
      }

  // Conjugate-row convention S_x^{a3*} instead of S_x^{a3'}; reported, not judged.
  double convention_gap = 0.0;
  const int e = data.unit_index();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        Complex sum = 0.0;
        for (int x = 0; x < m; ++x) sum += S(a, x) * S(b, x) * std::conj(S(x, c)) / S(e, x);
        convention_gap = std::max(convention_gap, std::abs(sum - verlinde(a, b, c)));
      }
  std::string note =
      convention_gap > 1e-9
          ? fmt::format("; conjugate-row convention differs by {:.3e}", convention_gap)
          : std::string{};

  VerificationReport report;
  report.add("verlinde-integral", max_fraction, kIntegralTol,
             fmt::format("max distance to an integer {:.3e}{}", max_fraction, note));
  report.add("verlinde-nonnegative", std::max(0.0, -most_negative), kIntegralTol,
             fmt::format("smallest real part {:.3e}", most_negative));
  report.add("verlinde-match", mismatch.empty() ? 0.0 : 1.0, 0.0, mismatch);
  report.add("verlinde-error", max_error, kIntegralTol,
             fmt::format("max |Verlinde - N| = {:.3e}", max_error));
  return report;
}

Eigen::MatrixXcd checked_inverse(const SMatrix& S) {
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(S.matrix());
  if (!lu.isInvertible()) throw Error(ErrorCode::domain, "S matrix is singular");
  return lu.inverse();
}

VerificationReport verify_diagonalization(const FusionData& data, const SMatrix& S,
                                          const ToleranceConfig& tol) {
  require_same_rank(data, S);
  const int m = data.rank();
  const int e = data.unit_index();
  const Eigen::MatrixXcd inv = checked_inverse(S);
  VerificationReport report;
  for (int a = 0; a < m; ++a) {
    // (a1, a3) entry N_{a1 a}^{a3}: fusion with a on the right.
    Eigen::MatrixXcd fusion(m, m);
    for (int a1 = 0; a1 < m; ++a1)
      for (int a3 = 0; a3 < m; ++a3) fusion(a1, a3) = static_cast<double>(data.n(a1, a, a3));
    const Eigen::MatrixXcd conj = inv * fusion * S.matrix();
    double off = 0.0;
    double eig = 0.0;
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) {
        if (x == y) {
          if (std::abs(S(e, x)) < tol.eps)
            throw Error(ErrorCode::domain, "vanishing unit-row entry of S");
          eig = std::max(eig, std::abs(conj(x, x) - S(a, x) / S(e, x)));
        } else {
          off = std::max(off, std::abs(conj(x, y)));
        }
      }
    report.add(fmt::format("offdiag[{}]", data.names()[a]), off, tol.eps);
    report.add(fmt::format("eigenvalues[{}]", data.names()[a]), eig, tol.eps);
  }
  return report;
}

VerificationReport verify_s_properties(const SMatrix& S, Label unit, const ToleranceConfig& tol) {
  const int m = S.rank();
  if (unit.index < 0 || unit.index >= m)
    throw Error(ErrorCode::invalid_argument, "unit label out of range for S");
  VerificationReport report;
  const double asym = (S.matrix() - S.matrix().transpose()).cwiseAbs().maxCoeff();
  report.add("symmetry", asym, tol.eps, fmt::format("max|S - S^T| = {:.3e}", asym));

  double smallest = std::numeric_limits<double>::infinity();
  int where = 0;
  for (int a = 0; a < m; ++a)
    if (std::abs(S(unit.index, a)) < smallest) {
      smallest = std::abs(S(unit.index, a));
      where = a;
    }
  report.add_lower_bound("unitrow", smallest, tol.eps,
                         fmt::format("min|S_e^a| = {:.6e} at a = {}", smallest, where));

  const double det = std::abs(S.matrix().determinant());
  report.add_lower_bound("invertible", det, tol.eps_det, fmt::format("|det S| = {:.6e}", det));
  return report;
}

Complex quantum_dimension(const SMatrix& S, Label unit, Label a, double eps) {
  if (unit.index < 0 || unit.index >= S.rank() || a.index < 0 || a.index >= S.rank())
    throw Error(ErrorCode::invalid_argument, "label out of range for S");
  const Complex denom = S(unit.index, unit.index);
  if (std::abs(denom) < eps) throw Error(ErrorCode::domain, "|S_e^e| is below eps");
  return S(unit.index, a.index) / denom;
}

VerificationReport verify_balancing(const FusionData& data, const SMatrix& S,
                                    const ToleranceConfig& tol) {
  require_same_rank(data, S);
  const int m = data.rank();
  const int e = data.unit_index();
  const auto theta = twist(data).theta;
  std::vector<Complex> dim(m);
  for (int a = 0; a < m; ++a) dim[a] = quantum_dimension(S, data.unit(), Label(a), tol.eps);

  double worst = 0.0;
  std::string where;
  for (int a1 = 0; a1 < m; ++a1)
    for (int a2 = 0; a2 < m; ++a2) {
      Complex trace = 0.0;
      for (int c = 0; c < m; ++c)
        if (data.n(a1, a2, c) != 0)
          trace += static_cast<double>(data.n(a1, a2, c)) * theta[c] / (theta[a1] * theta[a2]) * dim[c];
      const double r = std::abs(trace - S(a1, a2) / S(e, e));
      if (r > worst) {
        worst = r;
        where = fmt::format("worst pair ({}, {})", data.names()[a1], data.names()[a2]);
      }
    }
  VerificationReport report;
  report.add("balancing", worst, tol.eps, where);
  return report;
}

VerificationReport verify_nondegeneracy(const FusionData& data, const SMatrix& S,
                                        const ToleranceConfig& tol) {
  require_same_rank(data, S);
  const int e = data.unit_index();
  VerificationReport report;
  if (std::abs(S(e, e)) < tol.eps) {
    report.add_lower_bound("nondeg", 0.0, tol.eps_det, "|S_e^e| vanishes");
    return report;
  }
  const Eigen::MatrixXcd traces = S.matrix() / S(e, e);
  const double det = std::abs(traces.determinant());
  report.add_lower_bound("nondeg", det, tol.eps_det,
                         fmt::format("|det(S / S_e^e)| = {:.6e}", det));
  return report;
}

}  // namespace mtcv

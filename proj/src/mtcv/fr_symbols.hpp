// Copyright (C) 2026 The mtcverify Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "mtcv/fusion_data.hpp"
#include "mtcv/report.hpp"

namespace mtcv {

/// (a1, a2, a3, a4, a5, a6): coefficient of the product basis vector
/// Y_{a1 a5}^{a4} (x) Y_{a2 a3}^{a5} on the iterate basis vector
/// Y_{a6 a3}^{a4} (x) Y_{a1 a2}^{a6}.
using FIndex = std::array<int, 6>;

/// (a1, a2, a3): scalar of the exchange V_{a1 a2}^{a3} -> V_{a2 a1}^{a3}
/// along the half turn with no compensating phase.
using RIndex = std::array<int, 3>;

/// Fusing and braiding scalars for multiplicity-free data in fixed bases.
/// Entries that are not stored are undefined; reading one throws
/// Error(missing_data) rather than defaulting.
class FRSymbols {
 public:
  FRSymbols(int rank, std::map<FIndex, Complex> f, std::map<RIndex, Complex> r,
            bool multiplicity_free = true);

  int rank() const noexcept { return rank_; }
  bool multiplicity_free() const noexcept { return multiplicity_free_; }
  const std::map<FIndex, Complex>& f_entries() const noexcept { return f_; }
  const std::map<RIndex, Complex>& r_entries() const noexcept { return r_; }

  std::optional<Complex> find_f(const FIndex& index) const;
  std::optional<Complex> find_r(const RIndex& index) const;
  Complex f(const FIndex& index) const;
  Complex r(const RIndex& index) const;

 private:
  int rank_;
  std::map<FIndex, Complex> f_;
  std::map<RIndex, Complex> r_;
  bool multiplicity_free_;
};

bool f_admissible(const FusionData& data, const FIndex& index);
bool r_admissible(const FusionData& data, const RIndex& index);

/// All F entries sharing (a1, a2, a3, a4): rows are the admissible a5, columns
/// the admissible a6, both ascending.
struct FBlock {
  std::vector<int> sources;
  std::vector<int> targets;
  Eigen::MatrixXcd matrix;
};

FBlock f_block(const FusionData& data, const FRSymbols& fr, int a1, int a2, int a3, int a4);

/// Elements of S3 acting on the spaces of intertwining operators, viewing
/// V_{a1 a2}^{a3} as having the three incoming legs (a1, a2, a3').
enum class SigmaPerm { identity, s12, s23, s13, s123, s132 };

/// Triple labelling the space that perm maps V_{a1 a2}^{a3} to.
std::array<Label, 3> sigma_target(const FusionData& data, SigmaPerm perm, Label a1, Label a2,
                                  Label a3);

/// Scalar by which perm maps the basis vector of V_{a1 a2}^{a3} to the basis
/// vector of the target space. Requires N_{a1 a2}^{a3} = 1.
Complex sigma_phase(const FusionData& data, const FRSymbols& fr, SigmaPerm perm, Label a1,
                    Label a2, Label a3);

/// Involutions, the braid relation, (s12 s23)^3 = 1 and the normalisation of
/// the distinguished unit bases.
VerificationReport sigma_relations_check(const FusionData& data, const FRSymbols& fr,
                                         const ToleranceConfig& tol = {});

VerificationReport pentagon_check(const FusionData& data, const FRSymbols& fr,
                                  const ToleranceConfig& tol = {});

/// Both hexagon chiralities, unitarity of R, and compatibility of R with the
/// twists: R(a,b,c) R(b,a,c) = e^{2 pi i (h_c - h_a - h_b)}.
VerificationReport hexagon_check(const FusionData& data, const FRSymbols& fr,
                                 const ToleranceConfig& tol = {});

/// F(a, a', a, a, e, e): the scalar the zig-zag composite for a is multiplied by.
Complex rigidity_scalar(const FusionData& data, const FRSymbols& fr, Label a);

/// |rigidity_scalar(a)| >= threshold for every label.
VerificationReport rigidity_check(const FusionData& data, const FRSymbols& fr, double threshold);

/// Diagonal element of the squared braiding (r = -1) on
/// Y_{a e}^{a} (x) Y_{b' b}^{e}, computed through the fusion channels of a (x) b'.
Complex monodromy_element(const FusionData& data, const FRSymbols& fr, Label a, Label b);

/// F(a2,a3',a3,a2,e,a1') * sigma_{123}(a2,a3',a1') * F(a1',a1,a2,a2,a3,e), or 0
/// when N_{a1 a2}^{a3} = 0.
Complex fusing_product(const FusionData& data, const FRSymbols& fr, Label a1, Label a2,
                       Label a3);

enum class MSIdentity {
  /// fusing_product(a1,a2,a3) = N_{a1 a2}^{a3} * rigidity_scalar(a2).
  fusing_product,
  /// sum_x S_{a1}^x B^2(x, a2) (S^{-1})_x^{a3} = fusing_product(a1,a2,a3), together
  /// with the monodromy form of the fusion eigenvalues.
  modular_monodromy,
};

/// Throws Error(unsupported) for data with multiplicities.
VerificationReport ms_identity_check(const FusionData& data, const FRSymbols& fr,
                                     const SMatrix& S, MSIdentity which,
                                     const ToleranceConfig& tol = {});

/// S_{a1}^{a2} = s_ee * B^2(a2, a1) / (rigidity(a1) * rigidity(a2)).
/// Throws Error(domain) if a rigidity scalar vanishes.
SMatrix s_from_fr(const FusionData& data, const FRSymbols& fr, Complex s_ee,
                  double eps = ToleranceConfig{}.eps);

/// Entrywise comparison of s_from_fr (with s_ee = S_e^e) against S.
VerificationReport verify_s_from_fr(const FusionData& data, const FRSymbols& fr,
                                    const SMatrix& S, const ToleranceConfig& tol = {});

}  // namespace mtcv

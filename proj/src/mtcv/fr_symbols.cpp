// Copyright (C) 2026 The mtcverify Authors
// SPDX-License-Identifier: Apache-2.0

#include "mtcv/fr_symbols.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "mtcv/fusion_modular.hpp"

namespace mtcv {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string f_name(const FusionData& data, const FIndex& i) {
  const auto& n = data.names();
  return fmt::format("F({},{},{},{},{},{})", n[i[0]], n[i[1]], n[i[2]], n[i[3]], n[i[4]], n[i[5]]);
}

std::string r_name(const FusionData& data, const RIndex& i) {
  const auto& n = data.names();
  return fmt::format("R({},{},{})", n[i[0]], n[i[1]], n[i[2]]);
}

void require_compatible(const FusionData& data, const FRSymbols& fr) {
  if (data.rank() != fr.rank())
    throw Error(ErrorCode::invalid_argument,
                fmt::format("F/R data has rank {}, fusion data has rank {}", fr.rank(), data.rank()));
}

// Counts stored entries at inadmissible indices and admissible indices without
// an entry. Returns the first offender of each kind for the report detail.
struct Coverage {
  int stray = 0;
  int missing = 0;
  std::string first_stray;
  std::string first_missing;
};

Coverage f_coverage(const FusionData& data, const FRSymbols& fr) {
  Coverage cov;
  for (const auto& [idx, value] : fr.f_entries()) {
    if (!f_admissible(data, idx) && ++cov.stray == 1) cov.first_stray = f_name(data, idx);
  }
  const int m = data.rank();
  FIndex i{};
  for (i[0] = 0; i[0] < m; ++i[0])
    for (i[1] = 0; i[1] < m; ++i[1])
      for (i[2] = 0; i[2] < m; ++i[2])
        for (i[3] = 0; i[3] < m; ++i[3])
          for (i[4] = 0; i[4] < m; ++i[4]) {
            if (data.n(i[0], i[4], i[3]) == 0 || data.n(i[1], i[2], i[4]) == 0) continue;
            for (i[5] = 0; i[5] < m; ++i[5]) {
              if (data.n(i[5], i[2], i[3]) == 0 || data.n(i[0], i[1], i[5]) == 0) continue;
              if (!fr.find_f(i) && ++cov.missing == 1) cov.first_missing = f_name(data, i);
            }
          }
  return cov;
}

Coverage r_coverage(const FusionData& data, const FRSymbols& fr) {
  Coverage cov;
  for (const auto& [idx, value] : fr.r_entries()) {
    if (!r_admissible(data, idx) && ++cov.stray == 1) cov.first_stray = r_name(data, idx);
  }
  const int m = data.rank();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        const RIndex i{a, b, c};
        if (r_admissible(data, i) && !fr.find_r(i) && ++cov.missing == 1)
          cov.first_missing = r_name(data, i);
      }
  return cov;
}

void add_coverage(VerificationReport& report, const std::string& prefix, const Coverage& cov) {
  report.add(prefix + "-admissible", cov.stray, 0.0,
             cov.stray ? fmt::format("{} entries at inadmissible indices, first {}", cov.stray,
                                     cov.first_stray)
                       : std::string{});
  report.add(prefix + "-complete", cov.missing, 0.0,
             cov.missing ? fmt::format("{} admissible entries missing, first {}", cov.missing,
                                       cov.first_missing)
                         : std::string{});
}

// F value with inadmissible indices read as zero.
Complex f_or_zero(const FusionData& data, const FRSymbols& fr, const FIndex& i) {
  return f_admissible(data, i) ? fr.f(i) : Complex{};
}

using Triple = std::array<int, 3>;

Triple apply_target(const FusionData& data, bool is_12, const Triple& t) {
  if (is_12) return {t[1], t[0], t[2]};
  return {t[0], data.dual_index(t[2]), data.dual_index(t[1])};
}

Complex generator_phase(const FusionData& data, const FRSymbols& fr, bool is_12, const Triple& t) {
  const auto [a1, a2, a3] = t;
  if (data.n(a1, a2, a3) != 1)
    throw Error(ErrorCode::domain,
                fmt::format("sigma needs N[{}][{}][{}] = 1", data.names()[a1], data.names()[a2],
                            data.names()[a3]));
  const Rational& h1 = data.weights()[a1];
  const Rational& h2 = data.weights()[a2];
  const Rational& h3 = data.weights()[a3];
  if (is_12) return root_of_unity(-(h3 - h1 - h2) / Rational(2)) * fr.r({a1, a2, a3});
  const int e = data.unit_index();
  const int d1 = data.dual_index(a1);
  const int d2 = data.dual_index(a2);
  const int d3 = data.dual_index(a3);
  const Complex num = fr.r({a2, d3, d1}) * fr.f({a1, d3, a2, e, d1, d2});
  const Complex den = fr.f({a1, a2, d3, e, d1, a3});
  return root_of_unity((h2 + h3 - h1) / Rational(2)) * num / den;
}

// Generators in application order; true is s12, false is s23.
std::vector<bool> word(SigmaPerm perm) {
  switch (perm) {
    case SigmaPerm::identity: return {};
    case SigmaPerm::s12: return {true};
    case SigmaPerm::s23: return {false};
    case SigmaPerm::s123: return {false, true};
    case SigmaPerm::s132: return {true, false};
    case SigmaPerm::s13: return {true, false, true};
  }
  return {};
}

std::pair<Complex, Triple> apply_word(const FusionData& data, const FRSymbols& fr,
                                      const std::vector<bool>& gens, Triple t) {
  Complex phase{1.0, 0.0};
  for (bool g : gens) {
    phase *= generator_phase(data, fr, g, t);
    t = apply_target(data, g, t);
  }
  return {phase, t};
}

// Hexagon residual for one chirality; `r` supplies the braiding scalars.
template <typename RFn>
std::pair<double, std::string> hexagon_residual(const FusionData& data, const FRSymbols& fr,
                                                RFn r) {
  const int m = data.rank();
  const auto& names = data.names();
  double worst = 0.0;
  std::string where;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d) {
          const FBlock first = f_block(data, fr, a, b, c, d);
          const FBlock middle = f_block(data, fr, b, a, c, d);
          const FBlock last = f_block(data, fr, b, c, a, d);
          if (first.sources.empty() || last.targets.empty()) continue;
          if (middle.sources.size() != middle.targets.size())
            throw Error(ErrorCode::domain, fmt::format("F block ({},{},{};{}) is not square",
                                                       names[b], names[a], names[c], names[d]));
          Eigen::MatrixXcd inv = Eigen::MatrixXcd::Zero(m, m);
          if (!middle.sources.empty()) {
            Eigen::FullPivLU<Eigen::MatrixXcd> lu(middle.matrix);
            if (!lu.isInvertible())
              throw Error(ErrorCode::domain, fmt::format("F block ({},{},{};{}) is singular",
                                                         names[b], names[a], names[c], names[d]));
            const Eigen::MatrixXcd compact = lu.inverse();
            for (std::size_t i = 0; i < middle.targets.size(); ++i)
              for (std::size_t j = 0; j < middle.sources.size(); ++j)
                inv(middle.targets[i], middle.sources[j]) = compact(i, j);
          }
          // x' ranges over targets of the last block, x over sources of the first.
          for (int x : first.sources)
            for (int xp : last.targets) {
              Complex rhs{};
              for (int u = 0; u < m; ++u) {
                const FIndex fu{a, b, c, d, x, u};
                if (!f_admissible(data, fu)) continue;
                const Complex left = fr.f(fu) * r(a, b, u);
                for (int y = 0; y < m; ++y) {
                  if (inv(u, y) == Complex{}) continue;
                  const FIndex fy{b, c, a, d, y, xp};
                  if (!f_admissible(data, fy)) continue;
                  rhs += left * inv(u, y) * r(a, c, y) * fr.f(fy);
                }
              }
              const Complex lhs = x == xp ? r(a, x, d) : Complex{};
              const double res = std::abs(lhs - rhs);
              if (res > worst) {
                worst = res;
                where = fmt::format("a={} b={} c={} d={} x={} x'={}", names[a], names[b], names[c],
                                    names[d], names[x], names[xp]);
              }
            }
        }
  return {worst, where};
}

}  // namespace

FRSymbols::FRSymbols(int rank, std::map<FIndex, Complex> f, std::map<RIndex, Complex> r,
                     bool multiplicity_free)
    : rank_(rank), f_(std::move(f)), r_(std::move(r)), multiplicity_free_(multiplicity_free) {
  if (!multiplicity_free_)
    throw Error(ErrorCode::unsupported, "F/R symbols with fusion multiplicities are not supported");
  if (rank_ <= 0) throw Error(ErrorCode::invalid_argument, "F/R data needs a positive rank");
  auto in_range = [this](int v) { return v >= 0 && v < rank_; };
  for (const auto& [idx, value] : f_)
    if (!std::all_of(idx.begin(), idx.end(), in_range))
      throw Error(ErrorCode::invalid_argument, "F index out of range");
  for (const auto& [idx, value] : r_)
    if (!std::all_of(idx.begin(), idx.end(), in_range))
      throw Error(ErrorCode::invalid_argument, "R index out of range");
}

std::optional<Complex> FRSymbols::find_f(const FIndex& index) const {
  auto it = f_.find(index);
  if (it == f_.end()) return std::nullopt;
  return it->second;
}

std::optional<Complex> FRSymbols::find_r(const RIndex& index) const {
  auto it = r_.find(index);
  if (it == r_.end()) return std::nullopt;
  return it->second;
}

Complex FRSymbols::f(const FIndex& index) const {
  if (auto v = find_f(index)) return *v;
  throw Error(ErrorCode::missing_data,
              fmt::format("no F entry at ({},{},{},{},{},{})", index[0], index[1], index[2],
                          index[3], index[4], index[5]));
}

Complex FRSymbols::r(const RIndex& index) const {
  if (auto v = find_r(index)) return *v;
  throw Error(ErrorCode::missing_data,
              fmt::format("no R entry at ({},{},{})", index[0], index[1], index[2]));
}

bool f_admissible(const FusionData& data, const FIndex& i) {
  return data.n(i[0], i[4], i[3]) > 0 && data.n(i[1], i[2], i[4]) > 0 &&
         data.n(i[5], i[2], i[3]) > 0 && data.n(i[0], i[1], i[5]) > 0;
}

bool r_admissible(const FusionData& data, const RIndex& i) {
  return data.n(i[0], i[1], i[2]) > 0;
}

FBlock f_block(const FusionData& data, const FRSymbols& fr, int a1, int a2, int a3, int a4) {
  FBlock block;
  const int m = data.rank();
  for (int x = 0; x < m; ++x) {
    if (data.n(a1, x, a4) > 0 && data.n(a2, a3, x) > 0) block.sources.push_back(x);
    if (data.n(x, a3, a4) > 0 && data.n(a1, a2, x) > 0) block.targets.push_back(x);
  }
  block.matrix.resize(static_cast<Eigen::Index>(block.sources.size()),
                      static_cast<Eigen::Index>(block.targets.size()));
  for (std::size_t i = 0; i < block.sources.size(); ++i)
    for (std::size_t j = 0; j < block.targets.size(); ++j)
      block.matrix(i, j) = fr.f({a1, a2, a3, a4, block.sources[i], block.targets[j]});
  return block;
}

std::array<Label, 3> sigma_target(const FusionData& data, SigmaPerm perm, Label a1, Label a2,
                                  Label a3) {
  Triple t{data.label(a1.index).index, data.label(a2.index).index, data.label(a3.index).index};
  for (bool g : word(perm)) t = apply_target(data, g, t);
  return {Label(t[0]), Label(t[1]), Label(t[2])};
}

Complex sigma_phase(const FusionData& data, const FRSymbols& fr, SigmaPerm perm, Label a1,
                    Label a2, Label a3) {
  require_compatible(data, fr);
  const Triple t{data.label(a1.index).index, data.label(a2.index).index,
                 data.label(a3.index).index};
  if (data.n(t[0], t[1], t[2]) != 1)
    throw Error(ErrorCode::domain,
                fmt::format("sigma needs N[{}][{}][{}] = 1", data.names()[t[0]],
                            data.names()[t[1]], data.names()[t[2]]));
  return apply_word(data, fr, word(perm), t).first;
}

VerificationReport sigma_relations_check(const FusionData& data, const FRSymbols& fr,
                                         const ToleranceConfig& tol) {
  require_compatible(data, fr);
  VerificationReport report;
  const int m = data.rank();
  const auto& names = data.names();
  struct Relation {
    const char* name;
    std::vector<bool> lhs;
    std::vector<bool> rhs;
  };
  const std::vector<Relation> relations = {
      {"s3-involution-12", {true, true}, {}},
      {"s3-involution-23", {false, false}, {}},
      {"s3-cube", {false, true, false, true, false, true}, {}},
      {"s3-braid", {true, false, true}, {false, true, false}},
  };
  for (const auto& rel : relations) {
    double worst = 0.0;
    std::string where;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < m; ++c) {
          if (data.n(a, b, c) != 1) continue;
          const auto [pl, tl] = apply_word(data, fr, rel.lhs, {a, b, c});
          const auto [pr, tr] = apply_word(data, fr, rel.rhs, {a, b, c});
          const double res = tl == tr ? std::abs(pl - pr) : kInf;
          if (res > worst) {
            worst = res;
            where = fmt::format("({},{},{})", names[a], names[b], names[c]);
          }
        }
    report.add(rel.name, worst, tol.eps, where);
  }

  double worst = 0.0;
  std::string where;
  const int e = data.unit_index();
  for (int a = 0; a < m; ++a)
    for (const RIndex idx : {RIndex{e, a, a}, RIndex{a, e, a}}) {
      const double res = std::abs(fr.r(idx) - 1.0);
      if (res > worst) {
        worst = res;
        where = r_name(data, idx);
      }
    }
  report.add("unit-basis", worst, tol.eps, where);
  return report;
}

VerificationReport pentagon_check(const FusionData& data, const FRSymbols& fr,
                                  const ToleranceConfig& tol) {
  require_compatible(data, fr);
  VerificationReport report;
  const Coverage cov = f_coverage(data, fr);
  add_coverage(report, "F", cov);
  if (cov.missing > 0) {
    report.add("pentagon", kInf, tol.eps, "incomplete F data");
    return report;
  }

  const int m = data.rank();
  const auto& names = data.names();
  auto F = [&](int a1, int a2, int a3, int a4, int a5, int a6) {
    return f_or_zero(data, fr, {a1, a2, a3, a4, a5, a6});
  };
  double worst = 0.0;
  std::string where;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d)
          for (int e = 0; e < m; ++e)
            for (int x = 0; x < m; ++x) {
              if (data.n(a, x, e) == 0) continue;
              for (int y = 0; y < m; ++y) {
                if (data.n(b, y, x) == 0 || data.n(c, d, y) == 0) continue;
                for (int u = 0; u < m; ++u) {
                  if (data.n(a, b, u) == 0) continue;
                  for (int v = 0; v < m; ++v) {
                    if (data.n(u, c, v) == 0 || data.n(v, d, e) == 0) continue;
                    const Complex lhs = F(a, b, y, e, x, u) * F(u, c, d, e, y, v);
                    Complex rhs{};
                    for (int w = 0; w < m; ++w)
                      rhs += F(b, c, d, x, y, w) * F(a, w, d, e, x, v) * F(a, b, c, v, w, u);
                    const double res = std::abs(lhs - rhs);
                    if (res > worst) {
                      worst = res;
                      where = fmt::format("a={} b={} c={} d={} e={} x={} y={} u={} v={}", names[a],
                                          names[b], names[c], names[d], names[e], names[x],
                                          names[y], names[u], names[v]);
                    }
                  }
                }
              }
            }
  report.add("pentagon", worst, tol.eps, where);
  return report;
}

VerificationReport hexagon_check(const FusionData& data, const FRSymbols& fr,
                                 const ToleranceConfig& tol) {
  require_compatible(data, fr);
  VerificationReport report;
  const Coverage fcov = f_coverage(data, fr);
  const Coverage rcov = r_coverage(data, fr);
  add_coverage(report, "R", rcov);
  if (fcov.missing > 0 || rcov.missing > 0) {
    const char* why = fcov.missing > 0 ? "incomplete F data" : "incomplete R data";
    for (const char* name : {"hexagon-forward", "hexagon-reverse", "r-twist", "R-unitary"})
      report.add(name, kInf, tol.eps, why);
    return report;
  }

  auto forward = [&](int a, int b, int c) { return fr.r({a, b, c}); };
  auto reverse = [&](int a, int b, int c) { return 1.0 / fr.r({b, a, c}); };
  const auto [fwd, fwd_at] = hexagon_residual(data, fr, forward);
  report.add("hexagon-forward", fwd, tol.eps, fwd_at);
  const auto [rev, rev_at] = hexagon_residual(data, fr, reverse);
  report.add("hexagon-reverse", rev, tol.eps, rev_at);

  const int m = data.rank();
  const auto& h = data.weights();
  double twist_worst = 0.0;
  double unit_worst = 0.0;
  std::string twist_at;
  std::string unit_at;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        if (data.n(a, b, c) == 0) continue;
        const Complex rab = fr.r({a, b, c});
        const double tres = std::abs(rab * fr.r({b, a, c}) - root_of_unity(h[c] - h[a] - h[b]));
        if (tres > twist_worst) {
          twist_worst = tres;
          twist_at = r_name(data, {a, b, c});
        }
        const double ures = std::abs(std::abs(rab) - 1.0);
        if (ures > unit_worst) {
          unit_worst = ures;
          unit_at = r_name(data, {a, b, c});
        }
      }
  report.add("r-twist", twist_worst, tol.eps, twist_at);
  report.add("R-unitary", unit_worst, tol.eps, unit_at);
  return report;
}

Complex rigidity_scalar(const FusionData& data, const FRSymbols& fr, Label a) {
  require_compatible(data, fr);
  const int i = data.label(a.index).index;
  const int e = data.unit_index();
  return fr.f({i, data.dual_index(i), i, i, e, e});
}

VerificationReport rigidity_check(const FusionData& data, const FRSymbols& fr, double threshold) {
  VerificationReport report;
  for (int a = 0; a < data.rank(); ++a) {
    const double value = std::abs(rigidity_scalar(data, fr, Label(a)));
    report.add_lower_bound(fmt::format("rigidity[{}]", data.names()[a]), value, threshold);
  }
  return report;
}

Complex monodromy_element(const FusionData& data, const FRSymbols& fr, Label a, Label b) {
  require_compatible(data, fr);
  const int ai = data.label(a.index).index;
  const int bi = data.label(b.index).index;
  const int bd = data.dual_index(bi);
  const int e = data.unit_index();
  const FBlock block = f_block(data, fr, ai, bd, bi, ai);
  if (block.sources.size() != block.targets.size())
    throw Error(ErrorCode::domain, "monodromy block is not square");
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(block.matrix);
  if (!lu.isInvertible()) throw Error(ErrorCode::domain, "monodromy block is singular");
  const Eigen::MatrixXcd inv = lu.inverse();
  const auto row = std::find(block.sources.begin(), block.sources.end(), e);
  if (row == block.sources.end()) throw Error(ErrorCode::domain, "unit missing from fusion channel");
  const auto k = static_cast<Eigen::Index>(row - block.sources.begin());
  const auto& h = data.weights();
  Complex sum{};
  for (std::size_t j = 0; j < block.targets.size(); ++j) {
    const int c = block.targets[j];
    sum += block.matrix(k, j) * root_of_unity(-(h[c] - h[ai] - h[bd])) * inv(j, k);
  }
  return sum;
}

Complex fusing_product(const FusionData& data, const FRSymbols& fr, Label a1, Label a2,
                       Label a3) {
  require_compatible(data, fr);
  const int x1 = data.label(a1.index).index;
  const int x2 = data.label(a2.index).index;
  const int x3 = data.label(a3.index).index;
  if (data.n(x1, x2, x3) == 0) return {};
  const int e = data.unit_index();
  const int d1 = data.dual_index(x1);
  const int d3 = data.dual_index(x3);
  const Complex sigma = sigma_phase(data, fr, SigmaPerm::s123, Label(x2), Label(d3), Label(d1));
  return fr.f({x2, d3, x3, x2, e, d1}) * sigma * fr.f({d1, x1, x2, x2, x3, e});
}

VerificationReport ms_identity_check(const FusionData& data, const FRSymbols& fr,
                                     const SMatrix& S, MSIdentity which,
                                     const ToleranceConfig& tol) {
  require_compatible(data, fr);
  if (!data.multiplicity_free() || !fr.multiplicity_free())
    throw Error(ErrorCode::unsupported, "identity check requires multiplicity-free data");
  const int m = data.rank();
  if (S.rank() != m) throw Error(ErrorCode::invalid_argument, "S rank does not match fusion data");
  const auto& names = data.names();

  std::vector<Complex> rig(m);
  for (int a = 0; a < m; ++a) rig[a] = rigidity_scalar(data, fr, Label(a));
  ComplexTensor3 product(m);
  for (int a1 = 0; a1 < m; ++a1)
    for (int a2 = 0; a2 < m; ++a2)
      for (int a3 = 0; a3 < m; ++a3)
        product(a1, a2, a3) = fusing_product(data, fr, Label(a1), Label(a2), Label(a3));

  VerificationReport report;
  if (which == MSIdentity::fusing_product) {
    report.append(sigma_relations_check(data, fr, tol));
    double worst = 0.0;
    std::string where;
    for (int a1 = 0; a1 < m; ++a1)
      for (int a2 = 0; a2 < m; ++a2)
        for (int a3 = 0; a3 < m; ++a3) {
          const double res =
              std::abs(product(a1, a2, a3) - static_cast<double>(data.n(a1, a2, a3)) * rig[a2]);
          if (res > worst) {
            worst = res;
            where = fmt::format("({},{},{})", names[a1], names[a2], names[a3]);
          }
        }
    report.add("fusing-product", worst, tol.eps, where);
    return report;
  }

  Eigen::MatrixXcd mono(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) mono(a, b) = monodromy_element(data, fr, Label(a), Label(b));
  const Eigen::MatrixXcd& s = S.matrix();
  const Eigen::MatrixXcd sinv = checked_inverse(S);

  double worst = 0.0;
  std::string where;
  for (int a2 = 0; a2 < m; ++a2) {
    const Eigen::MatrixXcd conj = s * mono.col(a2).asDiagonal() * sinv;
    for (int a1 = 0; a1 < m; ++a1)
      for (int a3 = 0; a3 < m; ++a3) {
        const double res = std::abs(conj(a1, a3) - product(a1, a2, a3));
        if (res > worst) {
          worst = res;
          where = fmt::format("({},{},{})", names[a1], names[a2], names[a3]);
        }
      }
  }
  report.add("modular-monodromy", worst, tol.eps, where);

  // Eigenvalues of right fusion with a2 against B^2(x, a2) / rigidity(a2).
  worst = 0.0;
  where.clear();
  for (int a2 = 0; a2 < m; ++a2) {
    if (std::abs(rig[a2]) < tol.eps)
      throw Error(ErrorCode::domain, fmt::format("rigidity scalar of {} vanishes", names[a2]));
    Eigen::MatrixXcd right(m, m);
    for (int a1 = 0; a1 < m; ++a1)
      for (int a3 = 0; a3 < m; ++a3) right(a1, a3) = static_cast<double>(data.n(a1, a2, a3));
    const Eigen::MatrixXcd diag = sinv * right * s;
    for (int x = 0; x < m; ++x) {
      const double res = std::abs(diag(x, x) - mono(x, a2) / rig[a2]);
      if (res > worst) {
        worst = res;
        where = fmt::format("x={} a={}", names[x], names[a2]);
      }
    }
  }
  report.add("monodromy-eigenvalues", worst, tol.eps, where);
  return report;
}

SMatrix s_from_fr(const FusionData& data, const FRSymbols& fr, Complex s_ee, double eps) {
  require_compatible(data, fr);
  const int m = data.rank();
  std::vector<Complex> rig(m);
  for (int a = 0; a < m; ++a) {
    rig[a] = rigidity_scalar(data, fr, Label(a));
    if (std::abs(rig[a]) < eps)
      throw Error(ErrorCode::domain,
                  fmt::format("rigidity scalar of {} vanishes", data.names()[a]));
  }
  Eigen::MatrixXcd s(m, m);
  for (int a1 = 0; a1 < m; ++a1)
    for (int a2 = 0; a2 < m; ++a2)
      s(a1, a2) = s_ee * monodromy_element(data, fr, Label(a2), Label(a1)) / (rig[a1] * rig[a2]);
  return SMatrix(std::move(s));
}

VerificationReport verify_s_from_fr(const FusionData& data, const FRSymbols& fr,
                                    const SMatrix& S, const ToleranceConfig& tol) {
  if (S.rank() != data.rank())
    throw Error(ErrorCode::invalid_argument, "S rank does not match fusion data");
  const int e = data.unit_index();
  const SMatrix rebuilt = s_from_fr(data, fr, S(e, e), tol.eps);
  const int m = data.rank();
  double worst = 0.0;
  std::string where;
  for (int a1 = 0; a1 < m; ++a1)
    for (int a2 = 0; a2 < m; ++a2) {
      const double res = std::abs(rebuilt(a1, a2) - S(a1, a2));
      if (res > worst) {
        worst = res;
        where = fmt::format("S[{}][{}]", data.names()[a1], data.names()[a2]);
      }
    }
  VerificationReport report;
  report.add("sfromfr", worst, tol.eps, where);
  return report;
}

}  // namespace mtcv

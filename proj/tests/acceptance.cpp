// Copyright (C) 2026 The mtcverify Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one PASS/FAIL line per criterion. Residuals are computed
// here from the stored data with plain Eigen arithmetic wherever possible and
// compared against fixed tolerances.

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <json.hpp>

#include "mtcv/catalog.hpp"
#include "mtcv/characters.hpp"
#include "mtcv/data_file.hpp"
#include "mtcv/fr_symbols.hpp"
#include "mtcv/fusion_modular.hpp"
#include "oracles.hpp"

using namespace mtcv;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<CatalogEntry> all_entries() {
  std::vector<CatalogEntry> out;
  for (const auto& name : catalog_names()) out.push_back(get_entry(name));
  return out;
}

std::vector<CatalogEntry> fr_entries() {
  return {get_entry("trivial"), get_entry("fibonacci"), get_entry("ising")};
}

std::vector<Label> duals(const FusionData& d) {
  std::vector<Label> out;
  for (int a = 0; a < d.rank(); ++a) out.push_back(d.dual(Label(a)));
  return out;
}

Eigen::MatrixXcd fusion_mat(const FusionData& d, int a) {
  const int m = d.rank();
  Eigen::MatrixXcd n(m, m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) n(x, y) = d.n(a, x, y);
  return n;
}

struct Result {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Result()>& body) {
  Result r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  if (!r.ok) ++failures;
  fmt::print("{} criterion {:2}: {} ({})\n", r.ok ? "PASS" : "FAIL", id, title, r.detail);
  std::fflush(stdout);
}

// Runs the CLI and returns its exit status and stdout.
std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string cmd = fmt::format("\"{}\" {} 2>/dev/null", MTCV_CLI_PATH, args);
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data_path(const char* file) { return fmt::format("{}/{}", MTCV_TEST_DATA_DIR, file); }

}  // namespace

int main() {
  const auto entries = all_entries();

  report(1, "Verlinde formula reproduces N on every catalog entry", [&] {
    double worst = 0.0;
    for (const auto& e : entries) {
      const auto dual = duals(e.data);
      const ComplexTensor3 v = verlinde_fusion(e.S, dual, e.data.unit());
      const int m = e.data.rank();
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          for (int c = 0; c < m; ++c) worst = std::max(worst, std::abs(v(a, b, c) - double(e.data.n(a, b, c))));
    }
    return Result{worst < 1e-6, fmt::format("max error {:.3e} < 1e-6", worst)};
  });

  report(2, "S diagonalizes every fusion matrix with eigenvalues S_a^x/S_e^x", [&] {
    double off = 0.0, diag = 0.0;
    for (const auto& e : entries) {
      const Eigen::MatrixXcd& s = e.S.matrix();
      const Eigen::MatrixXcd sinv = s.fullPivLu().inverse();
      const int m = e.data.rank();
      const int u = e.data.unit_index();
      for (int a = 0; a < m; ++a) {
        const Eigen::MatrixXcd d = sinv * fusion_mat(e.data, a) * s;
        for (int x = 0; x < m; ++x)
          for (int y = 0; y < m; ++y) {
            if (x != y)
              off = std::max(off, std::abs(d(x, y)));
            else
              diag = std::max(diag, std::abs(d(x, x) - s(a, x) / s(u, x)));
          }
      }
    }
    return Result{off < 1e-9 && diag < 1e-9,
                  fmt::format("max off-diagonal {:.3e}, max eigenvalue error {:.3e}, both < 1e-9", off, diag)};
  });

  report(3, "S is symmetric and its unit row is bounded away from zero", [&] {
    double asym = 0.0, low = kInf;
    for (const auto& e : entries) {
      const Eigen::MatrixXcd& s = e.S.matrix();
      asym = std::max(asym, (s - s.transpose()).cwiseAbs().maxCoeff());
      low = std::min(low, s.row(e.data.unit_index()).cwiseAbs().minCoeff());
    }
    return Result{asym < 1e-12 && low > 0.1,
                  fmt::format("max |S - S^T| {:.3e} < 1e-12, min |S_e^a| {:.4f} > 0.1", asym, low)};
  });

  report(4, "fusing-product and modular-monodromy identities hold on shipped F/R data", [&] {
    double worst = 0.0;
    bool all = true;
    for (const auto& e : fr_entries())
      for (MSIdentity which : {MSIdentity::fusing_product, MSIdentity::modular_monodromy}) {
        const VerificationReport r = ms_identity_check(e.data, *e.fr, e.S, which);
        all = all && r.all_passed();
        worst = std::max(worst, r.max_residual());
      }
    return Result{all && worst < 1e-9, fmt::format("max residual {:.3e} < 1e-9", worst)};
  });

  report(5, "S rebuilt from F and R matches the stored S; rigidity scalars are nonvanishing", [&] {
    double worst = 0.0, low = kInf;
    for (const auto& e : fr_entries()) {
      const SMatrix rebuilt = s_from_fr(e.data, *e.fr, e.S(e.data.unit_index(), e.data.unit_index()));
      worst = std::max(worst, (rebuilt.matrix() - e.S.matrix()).cwiseAbs().maxCoeff());
      for (int a = 0; a < e.data.rank(); ++a)
        low = std::min(low, std::abs(rigidity_scalar(e.data, *e.fr, Label(a))));
    }
    return Result{worst < 1e-6 && low > 0.1,
                  fmt::format("max entry error {:.3e} < 1e-6, min |rigidity| {:.4f} > 0.1", worst, low)};
  });

  report(6, "twist sums reproduce S/S_ee and the double-braiding matrix is invertible", [&] {
    double worst = 0.0, low_det = kInf;
    bool lib = true;
    for (const auto& e : entries) {
      const int m = e.data.rank();
      const int u = e.data.unit_index();
      const Eigen::MatrixXcd& s = e.S.matrix();
      auto theta = [&](int a) { return std::polar(1.0, 2.0 * kPi * e.data.weight(a)); };
      Eigen::MatrixXcd b(m, m);
      for (int a1 = 0; a1 < m; ++a1)
        for (int a2 = 0; a2 < m; ++a2) {
          Complex sum = 0.0;
          for (int c = 0; c < m; ++c)
            sum += double(e.data.n(e.data.dual_index(a1), a2, c)) * theta(c) * (s(u, c) / s(u, u));
          b(a1, a2) = sum / (theta(a1) * theta(a2));
          worst = std::max(worst, std::abs(b(a1, a2) - s(a1, a2) / s(u, u)));
        }
      low_det = std::min(low_det, std::abs(b.determinant()));
      lib = lib && verify_balancing(e.data, e.S).all_passed() && verify_nondegeneracy(e.data, e.S).all_passed();
    }
    return Result{lib && worst < 1e-9 && low_det > 1e-8,
                  fmt::format("max twist-sum error {:.3e} < 1e-9, min |det| {:.3e} > 1e-8", worst, low_det)};
  });

  report(7, "pentagon and hexagon hold on shipped F/R data; a negated F block is detected", [&] {
    double worst = 0.0;
    bool all = true;
    for (const auto& e : fr_entries()) {
      const VerificationReport p = pentagon_check(e.data, *e.fr);
      const VerificationReport h = hexagon_check(e.data, *e.fr);
      all = all && p.all_passed() && h.all_passed();
      worst = std::max({worst, p.max_residual(), h.max_residual()});
    }
    const ModularDataSet bad = load_data_file(data_path("negated_f_block.mtc"));
    const VerificationReport mutated = pentagon_check(bad.data, *bad.fr);
    const bool detected = !mutated.all_passed();
    return Result{all && worst < 1e-9 && detected,
                  fmt::format("max residual {:.3e} < 1e-9, mutation residual {:.3f} ({})", worst,
                              mutated.max_residual(), detected ? "detected" : "missed")};
  });

  report(8, "characters of Ising and SU(2)_1 transform by S and T at tau = 2i, K = 400", [&] {
    const Complex tau{0.0, 2.0};
    double s_res = 0.0, t_res = 0.0;
    bool all = true;
    for (const char* name : {"ising", "su2-1"}) {
      const CatalogEntry e = get_entry(name);
      const VerificationReport s = verify_modular_S(*e.chars, e.S, tau, 400, 1e-8);
      const VerificationReport t = verify_t_consistency(*e.chars, e.data, tau, 400, 1e-10);
      all = all && s.all_passed() && t.all_passed();
      s_res = std::max(s_res, s.max_residual());
      t_res = std::max(t_res, t.max_residual());
    }
    return Result{all && s_res < 1e-8 && t_res < 1e-10,
                  fmt::format("S residual {:.3e} < 1e-8, T residual {:.3e} < 1e-10", s_res, t_res)};
  });

  report(9, "SU(2)_k Verlinde fusion equals the truncated Clebsch-Gordan rule for k <= 8", [&] {
    int mismatches = 0, triples = 0;
    for (int k = 1; k <= 8; ++k) {
      const CatalogEntry e = get_entry(fmt::format("su2-{}", k));
      const ComplexTensor3 v = verlinde_fusion(su2k_smatrix(k), duals(e.data), e.data.unit());
      for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= k; ++b)
          for (int c = 0; c <= k; ++c) {
            ++triples;
            const int cg = oracle::su2_cg(k, a, b, c);
            if (std::lround(v(a, b, c).real()) != cg || std::abs(v(a, b, c) - double(cg)) > 1e-6 ||
                e.data.n(a, b, c) != cg)
              ++mismatches;
          }
    }
    return Result{mismatches == 0, fmt::format("{} mismatches over {} triples", mismatches, triples)};
  });

  report(10, "export/import is a fixed point and the CLI exit codes follow the contract", [&] {
    double worst = 0.0;
    bool fixed = true;
    for (const auto& e : entries) {
      const std::string text = export_data_file(e);
      const ModularDataSet back = parse_data_file(text);
      fixed = fixed && export_data_file(back) == text && back.data.fusion_tensor() == e.data.fusion_tensor() &&
              back.data.weights() == e.data.weights() && back.data.c() == e.data.c();
      worst = std::max(worst, (back.S.matrix() - e.S.matrix()).cwiseAbs().maxCoeff());
      if (e.fr) {
        for (const auto& [i, v] : e.fr->f_entries()) worst = std::max(worst, std::abs(back.fr->f(i) - v));
        for (const auto& [i, v] : e.fr->r_entries()) worst = std::max(worst, std::abs(back.fr->r(i) - v));
      }
    }

    struct Injection {
      std::string args;
      int code;
      std::string needle;
    };
    const std::vector<Injection> cases{
        {"verify catalog:ising --checks all", 0, "pentagon PASS"},
        {"verify catalog:fibonacci --checks chars", 0, "skipped: no character data"},
        {"verify " + data_path("nonsymmetric_s.mtc"), 1, "symmetry FAIL residual="},
        {"verify " + data_path("negated_f_block.mtc") + " --checks pentagon", 1, "pentagon FAIL"},
        {"verify " + data_path("missing_s_row.mtc"), 1, ""},
        {"verify " + data_path("negative_n.mtc"), 2, ""},
        {"verify " + data_path("does_not_exist.mtc"), 2, ""},
        {"verify catalog:ising --checks bogus", 2, ""},
        {"verify catalog:nope", 2, ""},
        {"verify catalog:ising --tol 5", 2, ""},
        {"verify catalog:fibonacci --json", 0, "\"checks\""},
    };
    int bad = 0;
    std::string first_bad;
    for (const auto& c : cases) {
      const auto [code, out] = run_cli(c.args);
      bool ok = code == c.code && out.find(c.needle) != std::string::npos;
      if (ok && c.args == "verify catalog:ising --checks all")
        ok = std::count(out.begin(), out.end(), '\n') == 15;
      if (ok && c.args.find("--json") != std::string::npos)
        ok = nlohmann::json::parse(out)["checks"].size() == 15;
      if (!ok && bad++ == 0) first_bad = fmt::format("'{}' exited {}", c.args, code);
    }
    return Result{fixed && worst < 1e-12 && bad == 0,
                  fmt::format("max round-trip error {:.3e} < 1e-12, {}/{} CLI injections as expected{}",
                              worst, cases.size() - bad, cases.size(),
                              bad ? ", first failure " + first_bad : "")};
  });

  fmt::print("{} of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}

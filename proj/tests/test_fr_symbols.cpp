// Copyright (C) 2026 The mtcverify Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <functional>

#include <doctest.h>

#include "mtcv/catalog.hpp"
#include "mtcv/fr_symbols.hpp"
#include "mtcv/fusion_modular.hpp"
#include "oracles.hpp"

using namespace mtcv;

namespace {

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;
constexpr int T = 1;  // tau in the Fibonacci entry
constexpr int SIG = 1;
constexpr int PSI = 2;

FRSymbols with_f(const FRSymbols& fr, std::function<void(std::map<FIndex, Complex>&)> edit) {
  auto f = fr.f_entries();
  edit(f);
  return FRSymbols(fr.rank(), f, fr.r_entries());
}

FRSymbols with_r(const FRSymbols& fr, std::function<void(std::map<RIndex, Complex>&)> edit) {
  auto r = fr.r_entries();
  edit(r);
  return FRSymbols(fr.rank(), fr.f_entries(), r);
}

}  // namespace

TEST_CASE("FRSymbols storage") {
  const CatalogEntry fib = get_entry("fibonacci");
  const FRSymbols& fr = *fib.fr;
  CHECK(fr.rank() == 2);
  CHECK(fr.find_f({T, T, T, T, 0, 0}).has_value());
  CHECK_FALSE(fr.find_f({0, 0, 0, 0, T, T}).has_value());
  try {
    fr.f({0, 0, 0, 0, T, T});
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::missing_data);
  }
  CHECK_THROWS_AS(fr.r({T, 0, 0}), Error);
  CHECK_THROWS_AS(FRSymbols(2, {}, {}, false), Error);
  CHECK_THROWS_AS(FRSymbols(2, {{FIndex{0, 0, 0, 0, 0, 2}, 1.0}}, {}), Error);
  CHECK_THROWS_AS(FRSymbols(2, {}, {{RIndex{0, 3, 0}, 1.0}}), Error);
  try {
    FRSymbols(2, {}, {}, false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unsupported);
  }
}

TEST_CASE("admissibility and blocks") {
  const CatalogEntry fib = get_entry("fibonacci");
  CHECK(f_admissible(fib.data, {T, T, T, T, 0, T}));
  CHECK_FALSE(f_admissible(fib.data, {0, T, T, T, T, 0}));
  CHECK(r_admissible(fib.data, {T, T, 0}));
  CHECK_FALSE(r_admissible(fib.data, {0, T, 0}));
  const FBlock b = f_block(fib.data, *fib.fr, T, T, T, T);
  CHECK(b.sources == std::vector<int>{0, 1});
  CHECK(b.targets == std::vector<int>{0, 1});
  CHECK(std::abs(b.matrix(0, 0) - 1.0 / kPhi) < 1e-15);
  CHECK(std::abs(b.matrix(0, 1) - 1.0 / std::sqrt(kPhi)) < 1e-15);
  CHECK(std::abs(b.matrix(1, 1) + 1.0 / kPhi) < 1e-15);
  // The block is an involution: F^2 = 1 by direct arithmetic with phi^2 = phi + 1.
  CHECK((b.matrix * b.matrix - Eigen::MatrixXcd::Identity(2, 2)).norm() < 1e-15);
}

TEST_CASE("sigma phases") {
  const CatalogEntry fib = get_entry("fibonacci");
  const FusionData& d = fib.data;
  const FRSymbols& fr = *fib.fr;
  CHECK(sigma_phase(d, fr, SigmaPerm::identity, Label(T), Label(T), Label(0)) == Complex(1.0));
  // With unit-channel bases tied by sigma12, the phase on (tau,tau,1) is 1.
  CHECK(std::abs(sigma_phase(d, fr, SigmaPerm::s12, Label(T), Label(T), Label(0)) - 1.0) < 1e-15);
  // On (tau,tau,tau): Delta = -2/5, so e^{2 pi i/5} e^{3 pi i/5} = -1.
  CHECK(std::abs(sigma_phase(d, fr, SigmaPerm::s12, Label(T), Label(T), Label(T)) + 1.0) < 1e-15);
  const auto target = sigma_target(d, SigmaPerm::s123, Label(0), Label(T), Label(T));
  CHECK(target == std::array<Label, 3>{Label(T), Label(0), Label(T)});
  CHECK_THROWS_AS(sigma_phase(d, fr, SigmaPerm::s12, Label(0), Label(T), Label(0)), Error);

  for (const char* name : {"trivial", "fibonacci", "ising"}) {
    const CatalogEntry e = get_entry(name);
    const VerificationReport r = sigma_relations_check(e.data, *e.fr);
    CHECK_MESSAGE(r.all_passed(), name);
    CHECK(r.max_residual("s3") < 1e-9);
    // Composite elements agree with products of generators.
    const int m = e.data.rank();
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < m; ++c) {
          if (e.data.n(a, b, c) != 1) continue;
          const Complex s13 = sigma_phase(e.data, *e.fr, SigmaPerm::s13, Label(a), Label(b), Label(c));
          const auto t1 = sigma_target(e.data, SigmaPerm::s12, Label(a), Label(b), Label(c));
          const auto t2 = sigma_target(e.data, SigmaPerm::s23, t1[0], t1[1], t1[2]);
          const Complex prod = sigma_phase(e.data, *e.fr, SigmaPerm::s12, Label(a), Label(b), Label(c)) *
                               sigma_phase(e.data, *e.fr, SigmaPerm::s23, t1[0], t1[1], t1[2]) *
                               sigma_phase(e.data, *e.fr, SigmaPerm::s12, t2[0], t2[1], t2[2]);
          CHECK(std::abs(s13 - prod) < 1e-12);
        }
  }
}

TEST_CASE("pentagon") {
  CHECK(pentagon_check(get_entry("trivial").data, *get_entry("trivial").fr).max_residual() == 0.0);
  const CatalogEntry fib = get_entry("fibonacci");
  const VerificationReport ok = pentagon_check(fib.data, *fib.fr);
  CHECK(ok.all_passed());
  CHECK(ok.find("pentagon")->residual < 1e-12);

  const FRSymbols negated = with_f(*fib.fr, [](auto& f) {
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) f[{T, T, T, T, x, y}] *= -1.0;
  });
  const VerificationReport bad = pentagon_check(fib.data, negated);
  CHECK_FALSE(bad.find("pentagon")->passed);
  CHECK(bad.find("pentagon")->residual > 1.0);

  const FRSymbols missing = with_f(*fib.fr, [](auto& f) { f.erase({T, T, T, T, T, T}); });
  const VerificationReport inc = pentagon_check(fib.data, missing);
  CHECK_FALSE(inc.find("F-complete")->passed);
  CHECK_FALSE(inc.find("pentagon")->passed);

  const FRSymbols stray = with_f(*fib.fr, [](auto& f) { f[{0, 0, 0, 0, T, T}] = 1.0; });
  CHECK_FALSE(pentagon_check(fib.data, stray).find("F-admissible")->passed);

  const CatalogEntry ising = get_entry("ising");
  CHECK(pentagon_check(ising.data, *ising.fr).all_passed());
  const FRSymbols sign = with_f(*ising.fr, [](auto& f) { f[{SIG, PSI, SIG, PSI, SIG, SIG}] = 1.0; });
  CHECK_FALSE(pentagon_check(ising.data, sign).all_passed());
}

TEST_CASE("hexagon") {
  CHECK(hexagon_check(get_entry("trivial").data, *get_entry("trivial").fr).all_passed());
  const CatalogEntry fib = get_entry("fibonacci");
  const VerificationReport ok = hexagon_check(fib.data, *fib.fr);
  CHECK(ok.all_passed());
  CHECK(ok.max_residual() < 1e-9);
  CHECK(std::abs(fib.fr->r({T, T, 0}) - std::polar(1.0, -4.0 * kPi / 5.0)) < 1e-15);
  CHECK(std::abs(fib.fr->r({T, T, T}) - std::polar(1.0, 3.0 * kPi / 5.0)) < 1e-15);

  SUBCASE("conjugated R is the mirror braiding: hexagons hold, twists do not") {
    const FRSymbols conj = with_r(*fib.fr, [](auto& r) {
      for (auto& [k, v] : r) v = std::conj(v);
    });
    const VerificationReport r = hexagon_check(fib.data, conj);
    CHECK(r.find("hexagon-forward")->passed);
    CHECK(r.find("hexagon-reverse")->passed);
    CHECK_FALSE(r.find("r-twist")->passed);
    CHECK_FALSE(r.all_passed());
  }
  SUBCASE("a single wrong phase breaks the hexagon") {
    const FRSymbols bad = with_r(*fib.fr, [](auto& r) { r[{T, T, T}] *= -1.0; });
    const VerificationReport r = hexagon_check(fib.data, bad);
    CHECK_FALSE(r.find("hexagon-forward")->passed);
  }
  SUBCASE("non-unitary R") {
    const FRSymbols bad = with_r(*fib.fr, [](auto& r) { r[{T, T, 0}] *= 2.0; });
    CHECK_FALSE(hexagon_check(fib.data, bad).find("R-unitary")->passed);
  }
  SUBCASE("missing R") {
    const FRSymbols bad = with_r(*fib.fr, [](auto& r) { r.erase({T, T, T}); });
    const VerificationReport r = hexagon_check(fib.data, bad);
    CHECK_FALSE(r.find("R-complete")->passed);
    CHECK_FALSE(r.find("hexagon-forward")->passed);
  }
  const CatalogEntry ising = get_entry("ising");
  CHECK(hexagon_check(ising.data, *ising.fr).all_passed());
}

TEST_CASE("rigidity and monodromy") {
  const CatalogEntry triv = get_entry("trivial");
  CHECK(rigidity_scalar(triv.data, *triv.fr, Label(0)) == Complex(1.0));
  const CatalogEntry fib = get_entry("fibonacci");
  CHECK(std::abs(rigidity_scalar(fib.data, *fib.fr, Label(T)) - 1.0 / kPhi) < 1e-15);
  const CatalogEntry ising = get_entry("ising");
  CHECK(std::abs(rigidity_scalar(ising.data, *ising.fr, Label(SIG)) - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(rigidity_check(ising.data, *ising.fr, 0.1).all_passed());
  CHECK_FALSE(rigidity_check(ising.data, *ising.fr, 0.9).all_passed());

  CHECK(std::abs(monodromy_element(fib.data, *fib.fr, Label(T), Label(T)) + 1.0 / (kPhi * kPhi)) < 1e-12);
  CHECK(std::abs(monodromy_element(ising.data, *ising.fr, Label(SIG), Label(SIG))) < 1e-12);
  for (const CatalogEntry* e : {&triv, &fib, &ising})
    for (int a = 0; a < e->data.rank(); ++a) {
      CHECK(std::abs(monodromy_element(e->data, *e->fr, Label(a), Label(0)) - 1.0) < 1e-12);
      CHECK(std::abs(monodromy_element(e->data, *e->fr, Label(0), Label(a)) - 1.0) < 1e-12);
    }
}

TEST_CASE("modular identities") {
  for (const char* name : {"trivial", "fibonacci", "ising"}) {
    const CatalogEntry e = get_entry(name);
    const VerificationReport a = ms_identity_check(e.data, *e.fr, e.S, MSIdentity::fusing_product);
    const VerificationReport b = ms_identity_check(e.data, *e.fr, e.S, MSIdentity::modular_monodromy);
    CHECK_MESSAGE(a.all_passed(), name);
    CHECK_MESSAGE(b.all_passed(), name);
    CHECK(a.find("fusing-product")->residual < 1e-9);
    CHECK(b.find("modular-monodromy")->residual < 1e-9);
    CHECK(b.find("monodromy-eigenvalues")->residual < 1e-9);
    // Right side over the rigidity scalar rounds to N.
    for (int a1 = 0; a1 < e.data.rank(); ++a1)
      for (int a2 = 0; a2 < e.data.rank(); ++a2)
        for (int a3 = 0; a3 < e.data.rank(); ++a3) {
          const Complex v = fusing_product(e.data, *e.fr, Label(a1), Label(a2), Label(a3)) /
                            rigidity_scalar(e.data, *e.fr, Label(a2));
          CHECK(std::lround(v.real()) == e.data.n(a1, a2, a3));
        }
  }
  const CatalogEntry fib = get_entry("fibonacci");
  CHECK(std::abs(fusing_product(fib.data, *fib.fr, Label(T), Label(T), Label(T)) - 1.0 / kPhi) < 1e-12);

  // Pairing F/R data with the wrong S breaks the monodromy identity.
  Eigen::MatrixXcd s = fib.S.matrix();
  s(1, 1) *= -1.0;
  CHECK_FALSE(ms_identity_check(fib.data, *fib.fr, SMatrix(s), MSIdentity::modular_monodromy).all_passed());
}

TEST_CASE("S from F and R") {
  for (const char* name : {"trivial", "fibonacci", "ising"}) {
    const CatalogEntry e = get_entry(name);
    const SMatrix rebuilt = s_from_fr(e.data, *e.fr, e.S(0, 0));
    CHECK_MESSAGE((rebuilt.matrix() - e.S.matrix()).cwiseAbs().maxCoeff() < 1e-9, name);
    CHECK(verify_s_from_fr(e.data, *e.fr, e.S).all_passed());
  }
  const CatalogEntry fib = get_entry("fibonacci");
  const FRSymbols zero = with_f(*fib.fr, [](auto& f) { f[{T, T, T, T, 0, 0}] = 0.0; });
  try {
    s_from_fr(fib.data, zero, fib.S(0, 0));
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::domain);
  }
}

TEST_CASE("identities are invariant under vertex gauge transformations") {
  for (const char* name : {"fibonacci", "ising"}) {
    const CatalogEntry e = get_entry(name);
    for (std::uint32_t seed = 1; seed <= 20; ++seed) {
      const FRSymbols g = oracle::random_gauge(e.data, *e.fr, seed);
      CHECK(pentagon_check(e.data, g).all_passed());
      CHECK(hexagon_check(e.data, g).all_passed());
      CHECK(ms_identity_check(e.data, g, e.S, MSIdentity::fusing_product).all_passed());
      CHECK(ms_identity_check(e.data, g, e.S, MSIdentity::modular_monodromy).all_passed());
      CHECK(verify_s_from_fr(e.data, g, e.S).all_passed());
    }
  }
}

TEST_CASE("rank mismatches are rejected") {
  const CatalogEntry fib = get_entry("fibonacci");
  const CatalogEntry ising = get_entry("ising");
  CHECK_THROWS_AS(pentagon_check(ising.data, *fib.fr), Error);
  CHECK_THROWS_AS(ms_identity_check(fib.data, *fib.fr, ising.S, MSIdentity::fusing_product), Error);
}

// Copyright (C) 2026 The mtcverify Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include <doctest.h>

#include "fixtures.hpp"
#include "mtcv/catalog.hpp"
#include "mtcv/fusion_modular.hpp"
#include "oracles.hpp"

using namespace mtcv;

namespace {

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

SMatrix fib_s() {
  const double s = 1.0 / std::sqrt(2.0 + kPhi);
  Eigen::MatrixXcd m(2, 2);
  m << s, s * kPhi, s * kPhi, -s;
  return SMatrix(m);
}

SMatrix ising_s() {
  const double r = std::sqrt(2.0) / 2.0;
  Eigen::MatrixXcd m(3, 3);
  m << 0.5, r, 0.5, r, 0.0, -r, 0.5, -r, 0.5;
  return SMatrix(m);
}

std::vector<Label> self_dual(int m) {
  std::vector<Label> d;
  for (int i = 0; i < m; ++i) d.emplace_back(i);
  return d;
}

}  // namespace

TEST_CASE("fusion_matrix") {
  const CatalogEntry ising = get_entry("ising");
  Eigen::MatrixXi expected(3, 3);
  expected << 0, 1, 0, 1, 0, 1, 0, 1, 0;
  CHECK(fusion_matrix(ising.data, Label(1)) == expected);
  CHECK(fusion_matrix(ising.data, Label(0)) == Eigen::MatrixXi::Identity(3, 3));
  CHECK(fusion_matrix(get_entry("trivial").data, Label(0)) == Eigen::MatrixXi::Ones(1, 1));
  CHECK_THROWS_AS(fusion_matrix(ising.data, Label(3)), Error);
}

TEST_CASE("fusion axioms") {
  CHECK(verify_fusion_axioms(fixture::fib()).all_passed());
  CHECK(verify_fusion_axioms(get_entry("su2-2").data).all_passed());
  // a b = a with a a = 1: (a a) b = b but a (a b) = 1.
  const FusionData bad = fixture::fusion({"1", "a", "b"}, {0, 1, 2}, {0, 0, 0}, Rational(0),
                                         {{1, 1, 0, 1}, {2, 2, 0, 1}, {1, 2, 1, 1}, {2, 1, 1, 1}});
  const VerificationReport r = verify_fusion_axioms(bad);
  CHECK_FALSE(r.find("associativity")->passed);
  CHECK(r.find("commutativity")->passed);
  const FusionData noncomm = fixture::fusion({"1", "a", "b"}, {0, 1, 2}, {0, 0, 0}, Rational(0),
                                             {{1, 1, 0, 1}, {2, 2, 0, 1}, {1, 2, 1, 1}});
  CHECK_FALSE(verify_fusion_axioms(noncomm).find("commutativity")->passed);
}

TEST_CASE("verlinde_fusion examples") {
  SUBCASE("su2 level 1") {
    const double r = 1.0 / std::sqrt(2.0);
    Eigen::MatrixXcd m(2, 2);
    m << r, r, r, -r;
    const auto t = verlinde_fusion(SMatrix(m), self_dual(2), Label(0));
    CHECK(std::abs(t(1, 1, 0) - 1.0) < 1e-12);
    CHECK(std::abs(t(1, 1, 1)) < 1e-12);
  }
  SUBCASE("fibonacci") {
    const auto t = verlinde_fusion(fib_s(), self_dual(2), Label(0));
    // s^2 (phi^3 - 1/phi) = 1 with s^2 = 1/(2 + phi).
    CHECK(std::abs((kPhi * kPhi * kPhi - 1.0 / kPhi) / (2.0 + kPhi) - 1.0) < 1e-12);
    CHECK(std::abs(t(1, 1, 1) - 1.0) < 1e-12);
    CHECK(std::abs(t(1, 1, 0) - 1.0) < 1e-12);
    CHECK(std::abs(t(0, 1, 0)) < 1e-12);
  }
  SUBCASE("trivial") {
    const auto t = verlinde_fusion(SMatrix(Eigen::MatrixXcd::Ones(1, 1)), self_dual(1), Label(0));
    CHECK(t(0, 0, 0) == Complex(1.0));
  }
  SUBCASE("vanishing unit row entry is a domain error") {
    Eigen::MatrixXcd m(2, 2);
    m << 0, 1, 1, 0;
    try {
      verlinde_fusion(SMatrix(m), self_dual(2), Label(0));
      FAIL("expected an exception");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::domain);
    }
  }
}

TEST_CASE("verify_verlinde detects a wrong stored tensor") {
  const FusionData z2 = fixture::z2(Rational(1, 4));
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd m(2, 2);
  m << r, r, r, -r;
  CHECK(verify_verlinde(z2, SMatrix(m)).all_passed());
  // Fibonacci rules against the semion S.
  const VerificationReport bad = verify_verlinde(fixture::fib(), SMatrix(m));
  CHECK_FALSE(bad.find("verlinde-match")->passed);
}

TEST_CASE("verlinde rounding is a fixed point on catalog entries") {
  for (const auto& name : catalog_names()) {
    const CatalogEntry e = get_entry(name);
    const int m = e.data.rank();
    std::vector<Label> dual;
    for (int a = 0; a < m; ++a) dual.push_back(e.data.dual(Label(a)));
    const auto t = verlinde_fusion(e.S, dual, e.data.unit());
    std::vector<int> rounded;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < m; ++c) rounded.push_back(static_cast<int>(std::lround(t(a, b, c).real())));
    const FusionData again(e.data.names(), e.data.unit(), dual, e.data.weights(), e.data.c(), rounded);
    CHECK_MESSAGE(rounded == e.data.fusion_tensor(), name);
    CHECK_MESSAGE(verify_verlinde(again, e.S).all_passed(), name);
  }
}

TEST_CASE("diagonalization examples") {
  const CatalogEntry ising = get_entry("ising");
  const VerificationReport r = verify_diagonalization(ising.data, ising.S);
  CHECK(r.all_passed());
  CHECK(r.find("offdiag[sigma]")->residual < 1e-12);

  // Fusion eigenvalues of sigma are the eigenvalues of the tridiagonal matrix.
  Eigen::MatrixXd n(3, 3);
  n << 0, 1, 0, 1, 0, 1, 0, 1, 0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(n);
  CHECK(es.eigenvalues()(0) == doctest::Approx(-std::sqrt(2.0)));
  CHECK(es.eigenvalues()(1) == doctest::Approx(0.0));
  CHECK(es.eigenvalues()(2) == doctest::Approx(std::sqrt(2.0)));
  const Eigen::MatrixXcd s = ising.S.matrix();
  const Eigen::MatrixXcd d = s.inverse() * n.cast<Complex>() * s;
  CHECK(std::abs(d(0, 0) - std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(d(1, 1)) < 1e-12);
  CHECK(std::abs(d(2, 2) + std::sqrt(2.0)) < 1e-12);

  const VerificationReport f = verify_diagonalization(fixture::fib(), fib_s());
  CHECK(f.all_passed());
  Eigen::MatrixXd nf(2, 2);
  nf << 0, 1, 1, 1;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ef(nf);
  CHECK(ef.eigenvalues()(0) == doctest::Approx(-1.0 / kPhi));
  CHECK(ef.eigenvalues()(1) == doctest::Approx(kPhi));

  Eigen::MatrixXcd singular = Eigen::MatrixXcd::Ones(2, 2);
  CHECK_THROWS_AS(verify_diagonalization(fixture::fib(), SMatrix(singular)), Error);
}

TEST_CASE("S properties") {
  const VerificationReport ok = verify_s_properties(ising_s(), Label(0));
  CHECK(ok.all_passed());
  CHECK(ok.find("symmetry")->residual == 0.0);

  Eigen::MatrixXcd swap(2, 2);
  swap << 0, 1, 1, 0;
  const VerificationReport bad = verify_s_properties(SMatrix(swap), Label(0));
  CHECK_FALSE(bad.find("unitrow")->passed);
  CHECK(bad.find("symmetry")->passed);

  CHECK(verify_s_properties(SMatrix(Eigen::MatrixXcd::Ones(1, 1)), Label(0)).all_passed());
  Eigen::MatrixXcd skew(2, 2);
  skew << 1, 2, 3, 4;
  CHECK_FALSE(verify_s_properties(SMatrix(skew), Label(0)).find("symmetry")->passed);
  CHECK_THROWS_AS(verify_s_properties(SMatrix(skew), Label(2)), Error);
}

TEST_CASE("quantum dimensions match the Perron-Frobenius eigenvalue") {
  CHECK(std::abs(quantum_dimension(fib_s(), Label(0), Label(1)) - kPhi) < 1e-12);
  CHECK(std::abs(quantum_dimension(ising_s(), Label(0), Label(1)) - std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(quantum_dimension(ising_s(), Label(0), Label(0)) - 1.0) < 1e-15);
  for (const auto& name : catalog_names()) {
    const CatalogEntry e = get_entry(name);
    for (int a = 0; a < e.data.rank(); ++a)
      CHECK_MESSAGE(std::abs(quantum_dimension(e.S, e.data.unit(), Label(a)) -
                             oracle::pf_dimension(e.data, a)) < 1e-9,
                    name);
  }
  Eigen::MatrixXcd zero = Eigen::MatrixXcd::Zero(2, 2);
  CHECK_THROWS_AS(quantum_dimension(SMatrix(zero), Label(0), Label(1)), Error);
}

TEST_CASE("balancing") {
  const CatalogEntry ising = get_entry("ising");
  CHECK(verify_balancing(ising.data, ising.S).all_passed());
  // (sigma, sigma): (1 + theta_psi) / theta_sigma^2 = 0 by hand.
  const Complex theta_psi = std::polar(1.0, 2.0 * kPi * 0.5);
  CHECK(std::abs(1.0 + theta_psi) < 1e-15);
  CHECK(verify_balancing(fixture::fib(), fib_s()).all_passed());

  // Fibonacci rules with the wrong twist fail.
  const FusionData wrong = fixture::fusion({"1", "tau"}, {0, 1}, {0, Rational(1, 5)},
                                           Rational(14, 5), {{1, 1, 0, 1}, {1, 1, 1, 1}});
  CHECK_FALSE(verify_balancing(wrong, fib_s()).all_passed());
}

TEST_CASE("nondegeneracy") {
  CHECK(verify_nondegeneracy(get_entry("ising").data, ising_s()).all_passed());
  const VerificationReport f = verify_nondegeneracy(fixture::fib(), fib_s());
  CHECK(f.all_passed());
  const VerificationReport ones =
      verify_nondegeneracy(fixture::fib(), SMatrix(Eigen::MatrixXcd::Ones(2, 2)));
  CHECK_FALSE(ones.all_passed());
}

TEST_CASE("T and twist") {
  const CatalogEntry fib = get_entry("fibonacci");
  const Twist th = twist(fib.data);
  CHECK(th.theta[0] == Complex(1.0));
  CHECK(std::abs(th.theta[1] - std::polar(1.0, 4.0 * kPi / 5.0)) < 1e-15);
  const TMatrix t = t_matrix(fib.data);
  CHECK(std::abs(t.diagonal[0] - std::polar(1.0, -2.0 * kPi * (14.0 / 5.0) / 24.0)) < 1e-15);
  for (const auto& z : t.diagonal) CHECK(std::abs(std::abs(z) - 1.0) < 1e-15);
}

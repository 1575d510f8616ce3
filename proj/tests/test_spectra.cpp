#include "orthlie/spectra.hpp"

#include "orthlie/generators.hpp"

#include <doctest.h>

using namespace orthlie;

namespace {
const Complex kI{0.0, 1.0};

CMatrix diag(std::initializer_list<Complex> values) {
  CMatrix M = CMatrix::Zero(static_cast<Index>(values.size()), static_cast<Index>(values.size()));
  Index i = 0;
  for (const Complex& v : values) M(i, i) = v, ++i;
  return M;
}
}  // namespace

TEST_CASE("spectrum clusters nearby eigenvalues") {
  const SpectrumSet S = spectrum(diag({1.0, 1.0 + 1e-12, 3.0}));
  REQUIRE(S.points.size() == 2);
  CHECK(S.points[0].multiplicity == 2);
  CHECK(std::abs(S.points[0].value - Complex(1, 0)) < 1e-10);
  CHECK(S.points[1].multiplicity == 1);
  CHECK(std::abs(S.points[1].value - Complex(3, 0)) < 1e-12);

  ToleranceProfile wide;
  wide.cluster_override = 1e-2;
  const SpectrumSet W = spectrum(diag({0.0, 1e-3}), wide);
  REQUIRE(W.points.size() == 1);
  CHECK(W.points[0].multiplicity == 2);
  CHECK(std::abs(W.points[0].value - Complex(5e-4, 0)) < 1e-12);
}

TEST_CASE("negation symmetry of cluster sets") {
  CHECK(check_symmetric_spectrum(diag({1.0, -1.0, 0.0})));
  CHECK(check_symmetric_spectrum(diag({kI, -kI})));
  CHECK_FALSE(check_symmetric_spectrum(diag({1.0, 1.0, -1.0})));
  CHECK_FALSE(check_symmetric_spectrum(diag({1.0, 2.0})));
}

TEST_CASE("riesz idempotent of a separated eigenvalue") {
  const CMatrix M = diag({1.0, 2.0});
  const CMatrix E = riesz_idempotent(M, Complex(1, 0), 0.4);
  CMatrix expect = CMatrix::Zero(2, 2);
  expect(0, 0) = 1.0;
  CHECK((E - expect).norm() < 1e-10);
  CHECK(riesz_dim(M, Complex(1, 0)) == 1);
  CHECK(riesz_dim(M, Complex(2, 0)) == 1);
  CHECK(riesz_dim(M, Complex(10, 0)) == 0);
}

TEST_CASE("riesz idempotent of a jordan block is the identity") {
  CMatrix J(2, 2);
  J << 1, 1, 0, 1;
  const CMatrix E = riesz_idempotent(J, Complex(1, 0), 0.5);
  CHECK((E - CMatrix::Identity(2, 2)).norm() < 1e-12);
  CHECK(riesz_dim(J, Complex(1, 0)) == 2);
}

TEST_CASE("riesz preconditions reject touching or straddling contours") {
  const CMatrix M = diag({1.0, 2.0});
  CHECK_THROWS_AS(riesz_idempotent(M, Complex(1, 0), 1.0), ContourTouchesSpectrum);
  CHECK_THROWS_AS(riesz_idempotent(M, Complex(1.5, 0), 1.0), ContourTouchesSpectrum);
  CHECK_THROWS_AS(riesz_idempotent(M, Complex(10, 0), 0.5), ContourTouchesSpectrum);
  // raw quadrature only guards the nodes themselves
  CHECK_THROWS_AS(riesz_quadrature(diag({0.0, 2.0}), Complex(1, 0), 1.0, 8, 1e-9),
                  SingularResolvent);
}

TEST_CASE("quadrature error collapses when the node count doubles") {
  const CMatrix M = diag({1.0, 2.0});
  const CMatrix E8 = riesz_quadrature(M, Complex(1, 0), 0.4, 8, 1e-9);
  const CMatrix E16 = riesz_quadrature(M, Complex(1, 0), 0.4, 16, 1e-9);
  const double d8 = operator_norm(E8 * E8 - E8);
  const double d16 = operator_norm(E16 * E16 - E16);
  CHECK(d8 > 1e-8);         // visibly inexact at 8 nodes
  CHECK(d8 >= 10.0 * d16);  // and at least 10x better at 16
}

TEST_CASE("xi_set keeps exactly the simple-top values with no distinct pair sum") {
  const CMatrix T = gen_block_sums(3, 0, {kI});  // eigenvalues 1, -1, 0
  const XiSet xi = xi_set(T);
  REQUIRE(xi.values.size() == 2);
  CHECK(std::abs(xi.values[0] - Complex(-1, 0)) < 1e-9);
  CHECK(std::abs(xi.values[1] - Complex(1, 0)) < 1e-9);

  // two equal blocks: rank (T - z)^2 drops below n - 1, nothing survives
  const CMatrix R = gen_block_sums(4, 0, {kI, kI});
  CHECK(xi_set(R).values.empty());

  // distinct pair sums knock out interior values: eigenvalues 1,-1,3,-3 and
  // 2*1 = 3 + (-1) kills z = 1, but nothing sums to 2*3, so +-3 survive
  const CMatrix S = gen_block_sums(4, 0, {kI, 3.0 * kI});
  const XiSet xs = xi_set(S);
  REQUIRE(xs.values.size() == 2);
  CHECK(std::abs(xs.values[0] - Complex(-3, 0)) < 1e-9);
  CHECK(std::abs(xs.values[1] - Complex(3, 0)) < 1e-9);
}

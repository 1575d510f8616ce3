#include "orthlie/matrixkit.hpp"

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace orthlie;

namespace {
const Complex kI{0.0, 1.0};
}

TEST_CASE("inner product is linear in the first argument") {
  CVector x = CVector::Zero(2), y = CVector::Zero(2);
  x(0) = Complex(1, 0);
  y(0) = Complex(1, 1);
  CHECK(std::abs(inner(x, y) - Complex(1, -1)) < 1e-15);
  CHECK(std::abs(inner(y, x) - Complex(1, 1)) < 1e-15);
  // scaling the first argument scales the value directly
  CHECK(std::abs(inner(CVector(2.0 * kI * x), y) - 2.0 * kI * inner(x, y)) < 1e-15);
}

TEST_CASE("svd_values of a shift block") {
  CMatrix M = CMatrix::Zero(2, 2);
  M(0, 1) = 2.0;
  const RVector s = svd_values(M);
  REQUIRE(s.size() == 2);
  CHECK(s(0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(s(1) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(operator_norm(M) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("schatten norms of diag(3,4)") {
  CMatrix M = CMatrix::Zero(2, 2);
  M(0, 0) = 3.0;
  M(1, 1) = 4.0;
  CHECK(schatten_norm(M, 1.0) == doctest::Approx(7.0).epsilon(1e-14));
  CHECK(schatten_norm(M, 2.0) == doctest::Approx(5.0).epsilon(1e-14));
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(schatten_norm(M, inf) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK_THROWS_AS(schatten_norm(M, 0.5), ParameterError);
}

TEST_CASE("rank_tol counts values above the derived threshold") {
  CMatrix M = CMatrix::Zero(3, 3);
  M(0, 0) = 1.0;
  M(1, 1) = 1e-9;  // exactly at the atol floor: counts as zero
  CHECK(rank_tol(M) == 1);
  M(1, 1) = 1e-6;
  CHECK(rank_tol(M) == 2);
  CHECK(rank_tol(CMatrix::Zero(3, 3)) == 0);
}

TEST_CASE("outer builds the first-argument-linear rank-one map") {
  CVector e1 = CVector::Zero(3), e2 = CVector::Zero(3);
  e1(0) = 1.0;
  e2(1) = 1.0;
  CMatrix E12 = CMatrix::Zero(3, 3);
  E12(0, 1) = 1.0;
  CHECK((outer(e1, e2) - E12).norm() < 1e-15);
  // <x,f> e at x = f
  CHECK((outer(e1, CVector(kI * e2)) * (kI * e2) - e1).norm() < 1e-15);
}

TEST_CASE("eig_full on a diagonal matrix and its residual bound") {
  CMatrix M = CMatrix::Zero(3, 3);
  M(0, 0) = 1.0;
  M(1, 1) = 2.0;
  M(2, 2) = Complex(0, 3);
  const EigResult r = eig_full(M);
  std::vector<double> re;
  for (Index i = 0; i < 3; ++i) re.push_back(std::abs(r.values(i)));
  std::sort(re.begin(), re.end());
  CHECK(re[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(re[2] == doctest::Approx(3.0).epsilon(1e-12));
  for (Index i = 0; i < 3; ++i) {
    const CVector v = r.vectors.col(i);
    CHECK((M * v - r.values(i) * v).norm() <= 100.0 * 3 * kEps * operator_norm(M));
    CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(eig_full(CMatrix::Zero(2, 3)), DimensionError);
}

TEST_CASE("kron pairs indices row-major") {
  CMatrix A(2, 2), B(2, 2);
  A << 1, 2, 3, 4;
  B << 0, 1, 1, 0;
  const CMatrix K = kron(A, B);
  REQUIRE(K.rows() == 4);
  CHECK(std::abs(K(0, 1) - Complex(1, 0)) < 1e-15);  // A(0,0) B(0,1)
  CHECK(std::abs(K(0, 3) - Complex(2, 0)) < 1e-15);  // A(0,1) B(0,1)
  CHECK(std::abs(K(3, 0) - Complex(3, 0)) < 1e-15);  // A(1,0) B(1,0)
  CHECK(K.norm() == doctest::Approx(A.norm() * B.norm()).epsilon(1e-13));
}

TEST_CASE("hausdorff distance of value sets") {
  using V = std::vector<Complex>;
  CHECK(hausdorff(V{0.0, 1.0}, V{0.0, 1.0}) == doctest::Approx(0.0));
  CHECK(hausdorff(V{0.0, 1.0}, V{0.0, 1.0, 3.0}) == doctest::Approx(2.0));
  CHECK(hausdorff(V{kI}, V{-kI}) == doctest::Approx(2.0));
  CHECK_THROWS_AS(hausdorff(V{}, V{1.0}), ParameterError);
}

TEST_CASE("rng streams are deterministic and normals are paired") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  Rng c(7);
  for (int i = 0; i < 100; ++i) {
    const double u = c.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(std::isfinite(c.normal()));
  }
  Rng d(7), e(7);
  CHECK(std::abs(d.cnormal() - e.cnormal()) == 0.0);
}

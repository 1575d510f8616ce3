#include "orthlie/conjugation.hpp"

#include <doctest.h>

using namespace orthlie;

namespace {
const Complex kI{0.0, 1.0};

Conjugation swap2() {
  CMatrix U(2, 2);
  U << 0, 1, 1, 0;
  return Conjugation::from_matrix(U);
}
}  // namespace

TEST_CASE("canonical conjugation conjugates entrywise") {
  const Conjugation C = Conjugation::canonical(3);
  CHECK(C.is_canonical());
  CHECK((C.matrix() - CMatrix::Identity(3, 3)).norm() == 0.0);
  CVector x(3);
  x << Complex(1, 2), kI, 0.0;
  CHECK((C.apply(x) - x.conjugate()).norm() == 0.0);
  // involution
  CHECK((C.apply(C.apply(x)) - x).norm() == 0.0);
  CMatrix X(3, 3);
  X.setZero();
  X(0, 1) = Complex(2, -3);
  CHECK((C.conjugate_map(X) - X.conjugate()).norm() == 0.0);
}

TEST_CASE("from_matrix validates the two defining properties") {
  CMatrix rot(2, 2);
  rot << 0, 1, -1, 0;  // unitary, antisymmetric
  CHECK_THROWS_AS(Conjugation::from_matrix(rot), NotSymmetric);
  CMatrix ones = CMatrix::Ones(2, 2);  // symmetric, not unitary
  CHECK_THROWS_AS(Conjugation::from_matrix(ones), NotUnitary);
  CHECK_THROWS_AS(Conjugation::from_matrix(CMatrix::Ones(2, 3)), DimensionError);

  const Conjugation C = swap2();
  CHECK_FALSE(C.is_canonical());
  CVector x(2);
  x << Complex(1, 2), Complex(3, -4);
  CVector y = C.apply(x);
  CHECK(std::abs(y(0) - Complex(3, 4)) < 1e-15);
  CHECK(std::abs(y(1) - Complex(1, -2)) < 1e-15);
  CHECK((C.apply(y) - x).norm() < 1e-15);
}

TEST_CASE("sandwich matches the composed antilinear maps") {
  Rng rng(5);
  const Index n = 3, m = 4;
  CMatrix A(m, n), Ua = CMatrix::Identity(n, n), Ub = CMatrix::Identity(m, m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < n; ++j) A(i, j) = rng.cnormal();
  // C_a A^* C_b x for entrywise conjugations = conj(A^*) x = A^T x
  const CMatrix S = Conjugation::sandwich(Ua, A, Ub);
  CHECK((S - A.transpose()).norm() < 1e-15);
}

TEST_CASE("fixed_basis spans the fixed set orthonormally") {
  Rng rng(11);
  SUBCASE("canonical: real orthogonal") {
    const Conjugation C = Conjugation::canonical(4);
    const CMatrix B = fixed_basis(C, rng);
    REQUIRE(B.cols() == 4);
    CHECK(B.imag().norm() < 1e-12);
    CHECK((B.adjoint() * B - CMatrix::Identity(4, 4)).norm() < 1e-12);
  }
  SUBCASE("random conjugation: fixed vectors, transport carries the class") {
    CMatrix A(5, 5);
    for (Index i = 0; i < 5; ++i)
      for (Index j = 0; j < 5; ++j) A(i, j) = rng.cnormal();
    const Eigen::HouseholderQR<CMatrix> qr(A);
    const CMatrix Q = qr.householderQ() * CMatrix::Identity(5, 5);
    const Conjugation C = Conjugation::from_matrix(Q * Q.transpose());
    const CMatrix B = fixed_basis(C, rng);
    REQUIRE(B.cols() == 5);
    CHECK((B.adjoint() * B - CMatrix::Identity(5, 5)).norm() < 1e-10);
    for (Index j = 0; j < 5; ++j)
      CHECK((C.apply(B.col(j)) - B.col(j)).norm() < 1e-10);
  }
}

TEST_CASE("double_block swaps the two copies") {
  const Conjugation D = double_block(swap2());
  REQUIRE(D.dim() == 4);
  const CMatrix& U = D.matrix();
  CHECK(U.topLeftCorner(2, 2).norm() == 0.0);
  CHECK(U.bottomRightCorner(2, 2).norm() == 0.0);
  CHECK((U.topRightCorner(2, 2) - swap2().matrix()).norm() == 0.0);
  CHECK((U.bottomLeftCorner(2, 2) - swap2().matrix()).norm() == 0.0);
  // still a valid conjugation
  CVector x(4);
  x << 1.0, kI, Complex(2, 2), 0.0;
  CHECK((D.apply(D.apply(x)) - x).norm() < 1e-15);
}

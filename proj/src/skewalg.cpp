#include "orthlie/skewalg.hpp"

#include <Eigen/SVD>

namespace orthlie {

double membership_residual(const CMatrix& T, const Conjugation& C) {
  if (T.rows() != C.dim() || T.cols() != C.dim())
    throw DimensionError("membership: matrix/conjugation dimension mismatch");
  return operator_norm(C.conjugate_map(T) + T.adjoint());
}

bool is_member(const CMatrix& T, const Conjugation& C, const ToleranceProfile& tol) {
  tol.validate();
  return membership_residual(T, C) <= tol.member_tol(operator_norm(T));
}

SkewElement SkewElement::make(CMatrix T, Conjugation C, const ToleranceProfile& tol) {
  tol.validate();
  const double res = membership_residual(T, C);
  if (res > tol.member_tol(operator_norm(T)))
    throw MembershipError("skew element: C T C = -T^* fails at the requested tolerance");
  return SkewElement{std::move(T), std::move(C), res};
}

std::pair<CMatrix, CMatrix> split(const CMatrix& X, const Conjugation& C) {
  const CMatrix G = C.conjugate_map(CMatrix(X.adjoint()));  // C X^* C
  return {0.5 * (X + G), 0.5 * (X - G)};
}

std::vector<CMatrix> skew_basis(Index n) {
  if (n < 2) throw DimensionError("skew_basis: need n >= 2");
  std::vector<CMatrix> basis;
  basis.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (Index j = 0; j < n; ++j)
    for (Index k = j + 1; k < n; ++k) {
      CMatrix F = CMatrix::Zero(n, n);
      F(j, k) = 1.0;
      F(k, j) = -1.0;
      basis.push_back(std::move(F));
    }
  return basis;
}

Index skew_basis_index(Index n, Index j, Index k) {
  if (!(0 <= j && j < k && k < n)) throw ParameterError("skew_basis_index: need 0 <= j < k < n");
  // pairs (0,1..n-1), (1,2..n-1), ...
  return j * n - j * (j + 1) / 2 + (k - j - 1);
}

CMatrix rank_two(const CVector& e, const CVector& f, const Conjugation& C) {
  if (e.size() != C.dim() || f.size() != C.dim())
    throw DimensionError("rank_two: vector/conjugation dimension mismatch");
  if (std::abs(e.norm() - 1.0) > 1e-10 || std::abs(f.norm() - 1.0) > 1e-10)
    throw NotUnit("rank_two: e and f must be unit vectors");
  return outer(e, C.apply(f)) - outer(f, C.apply(e));
}

CMatrix embed_double(const CMatrix& X, const Conjugation& C) {
  if (X.rows() != C.dim() || X.cols() != C.dim())
    throw DimensionError("embed_double: matrix/conjugation dimension mismatch");
  const Index n = C.dim();
  CMatrix Y = CMatrix::Zero(2 * n, 2 * n);
  Y.topLeftCorner(n, n) = X;
  Y.bottomRightCorner(n, n) = -C.conjugate_map(CMatrix(X.adjoint()));
  return Y;
}

double three_block_residual(const CMatrix& R, const Conjugation& C,
                            const ToleranceProfile& tol) {
  tol.validate();
  const Index n = C.dim();
  if (n < 3) throw DimensionError("three_block: need n >= 3");
  if (R.rows() != n || R.cols() != n)
    throw DimensionError("three_block: matrix/conjugation dimension mismatch");
  const Index m = n - 2;
  const CMatrix& U = C.matrix();
  const double tau_shape = std::max(tol.atol, tol.rtol);

  // C must be antidiagonal across the (1, n-2, 1) splitting:
  //   [ 0    0    U13 ]
  //   [ 0    U22  0   ]
  //   [ U31  0    0   ]
  const CMatrix U13 = U.block(0, n - 1, 1, 1);
  const CMatrix U22 = U.block(1, 1, m, m);
  const CMatrix U31 = U.block(n - 1, 0, 1, 1);
  double off = 0.0;
  off = std::max(off, U.block(0, 0, 1, n - 1).cwiseAbs().maxCoeff());
  off = std::max(off, U.block(1, 0, m, 1).cwiseAbs().maxCoeff());
  off = std::max(off, U.block(1, n - 1, m, 1).cwiseAbs().maxCoeff());
  off = std::max(off, U.block(n - 1, 1, 1, n - 1).cwiseAbs().maxCoeff());
  if (off > tau_shape)
    throw BlockShapeError("three_block: conjugation has no antidiagonal three-block shape");

  const CMatrix Y = R.block(0, 0, 1, 1);
  const CMatrix Z = R.block(0, 1, 1, m);
  const CMatrix W = R.block(1, 0, m, 1);
  const CMatrix X = R.block(1, 1, m, m);

  double res = 0.0;
  // the two corners of a member vanish outright
  res = std::max(res, std::abs(R(0, n - 1)));
  res = std::max(res, std::abs(R(n - 1, 0)));
  // mirrored blocks across the antidiagonal pattern
  res = std::max(res, operator_norm(R.block(n - 1, n - 1, 1, 1) +
                                    Conjugation::sandwich(U31, Y, U13)));
  res = std::max(res, operator_norm(R.block(1, n - 1, m, 1) +
                                    Conjugation::sandwich(U22, Z, U13)));
  res = std::max(res, operator_norm(R.block(n - 1, 1, 1, m) +
                                    Conjugation::sandwich(U31, W, U22)));
  // middle block lies in the skew class of the middle sub-conjugation
  res = std::max(res, operator_norm(U22 * X.conjugate() * U22.adjoint() + X.adjoint()));
  return res;
}

bool three_block_check(const CMatrix& R, const Conjugation& C, const ToleranceProfile& tol) {
  return three_block_residual(R, C, tol) <= tol.member_tol(operator_norm(R));
}

Complex trace_pair(const CMatrix& A, const CMatrix& B) {
  if (A.cols() != B.rows() || A.rows() != B.cols())
    throw DimensionError("trace_pair: shape mismatch");
  return (A * B).trace();
}

CMatrix dual_witness(const CMatrix& T, const Conjugation& C, const ToleranceProfile& tol) {
  tol.validate();
  if (!C.is_canonical())
    throw MembershipError("dual_witness: defined for the entrywise conjugation only");
  if (!is_member(T, C, tol))
    throw MembershipError("dual_witness: T is not in the skew class");
  Eigen::JacobiSVD<CMatrix> svd(T, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double s = svd.singularValues()(0);
  if (s <= tol.atol) throw DegenerateZero("dual_witness: T is numerically zero");
  const CVector u = svd.matrixU().col(0);  // T v = s u
  const CVector v = svd.matrixV().col(0);
  // skew-symmetry pairs the triple (s, u, v) with (s, conj v, conj u), so the
  // two rank-one layers below are orthogonal and each carries weight 1/2
  return 0.5 * (v * u.adjoint() - u.conjugate() * v.transpose());
}

}  // namespace orthlie

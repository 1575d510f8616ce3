#include "orthlie/conjugation.hpp"

namespace orthlie {

Conjugation Conjugation::canonical(Index n) {
  if (n < 1) throw DimensionError("conjugation: dimension must be positive");
  return Conjugation(CMatrix::Identity(n, n));
}

Conjugation Conjugation::from_matrix(const CMatrix& U, const ToleranceProfile& tol) {
  tol.validate();
  if (U.rows() != U.cols() || U.rows() == 0)
    throw DimensionError("conjugation: U must be square and nonempty");
  const Index n = U.rows();
  const double tau = std::max(tol.atol, tol.rtol);
  if (operator_norm(U.adjoint() * U - CMatrix::Identity(n, n)) > tau)
    throw NotUnitary("conjugation: U is not unitary");
  if (operator_norm(U - U.transpose()) > tau)
    throw NotSymmetric("conjugation: U is not symmetric");
  return Conjugation(U);
}

bool Conjugation::is_canonical() const {
  return (U_ - CMatrix::Identity(dim(), dim())).cwiseAbs().maxCoeff() == 0.0;
}

CVector Conjugation::apply(const CVector& x) const {
  if (x.size() != dim()) throw DimensionError("conjugation: vector dimension mismatch");
  return U_ * x.conjugate();
}

CMatrix Conjugation::conjugate_map(const CMatrix& X) const {
  if (X.rows() != dim() || X.cols() != dim())
    throw DimensionError("conjugation: matrix dimension mismatch");
  return U_ * X.conjugate() * U_.adjoint();
}

CMatrix Conjugation::sandwich(const CMatrix& Ua, const CMatrix& A, const CMatrix& Ub) {
  return Ua * A.transpose() * Ub.conjugate();
}

CMatrix fixed_basis(const Conjugation& C, Rng& rng, const ToleranceProfile& tol) {
  tol.validate();
  const Index n = C.dim();
  CMatrix B(n, 0);
  const int max_tries = 64;
  for (Index k = 0; k < n; ++k) {
    bool placed = false;
    for (int attempt = 0; attempt < max_tries && !placed; ++attempt) {
      CVector v(n);
      for (Index i = 0; i < n; ++i) v(i) = rng.cnormal();
      CVector w = v + C.apply(v);
      if (w.norm() < tol.atol) w = Complex(0, 1) * (v - C.apply(v));
      // fixed vectors have real mutual inner products, so projecting with the
      // real part keeps w in the fixed set and orthogonalizes it fully
      for (int pass = 0; pass < 2; ++pass)
        for (Index j = 0; j < B.cols(); ++j)
          w -= inner(w, B.col(j)).real() * B.col(j);
      const double nw = w.norm();
      if (nw > 1e-6) {
        B.conservativeResize(Eigen::NoChange, k + 1);
        B.col(k) = w / nw;
        placed = true;
      }
    }
    if (!placed) throw NumericalError("fixed_basis: could not extend the fixed basis");
  }
  return B;
}

Conjugation double_block(const Conjugation& D) {
  const Index n = D.dim();
  CMatrix U = CMatrix::Zero(2 * n, 2 * n);
  U.topRightCorner(n, n) = D.matrix();
  U.bottomLeftCorner(n, n) = D.matrix();
  return Conjugation::from_matrix(U);
}

}  // namespace orthlie

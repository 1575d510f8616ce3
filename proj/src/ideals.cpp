#include "orthlie/ideals.hpp"

#include <Eigen/QR>
#include <cmath>

namespace orthlie {

namespace {

CVector coords_of(const CMatrix& S) {
  const Index n = S.rows();
  CVector c(n * (n - 1) / 2);
  Index idx = 0;
  for (Index j = 0; j < n; ++j)
    for (Index k = j + 1; k < n; ++k) c(idx++) = 0.5 * (S(j, k) - S(k, j));
  return c;
}

CMatrix matrix_of(const CVector& c, Index n) {
  CMatrix S = CMatrix::Zero(n, n);
  Index idx = 0;
  for (Index j = 0; j < n; ++j)
    for (Index k = j + 1; k < n; ++k) {
      S(j, k) = c(idx);
      S(k, j) = -c(idx);
      ++idx;
    }
  return S;
}

// orthogonal projection residual with one re-orthogonalization pass
CVector project_out(const CMatrix& B, CVector w) {
  if (B.cols() == 0) return w;
  w -= B * (B.adjoint() * w);
  w -= B * (B.adjoint() * w);
  return w;
}

}  // namespace

CMatrix bracket(const CMatrix& A, const CMatrix& B) {
  if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows())
    throw DimensionError("bracket: square matrices of equal size required");
  return A * B - B * A;
}

std::vector<CMatrix> IdealSubspace::basis_matrices() const {
  std::vector<CMatrix> out;
  const double inv_sqrt2 = 0.7071067811865475244;
  for (Index c = 0; c < coords.cols(); ++c)
    out.push_back(inv_sqrt2 * matrix_of(coords.col(c), n));
  return out;
}

IdealSubspace ideal_closure(const std::vector<CMatrix>& generators,
                            const ToleranceProfile& tol) {
  tol.validate();
  if (generators.empty()) throw ParameterError("ideal_closure: no generators");
  const Index n = generators.front().rows();
  const Index m = n * (n - 1) / 2;
  IdealSubspace S;
  S.n = n;
  S.coords.resize(m, 0);

  auto absorb = [&](const CVector& w_raw) {
    const double scale = w_raw.norm();
    if (scale == 0.0) return false;
    const CVector w = project_out(S.coords, w_raw);
    if (w.norm() <= std::max(tol.atol, tol.rtol * scale)) return false;
    S.coords.conservativeResize(Eigen::NoChange, S.coords.cols() + 1);
    S.coords.col(S.coords.cols() - 1) = w / w.norm();
    return true;
  };

  for (const CMatrix& G : generators) {
    if (G.rows() != n || G.cols() != n)
      throw DimensionError("ideal_closure: generators of mixed size");
    if (!is_member(G, Conjugation::canonical(n), tol))
      throw MembershipError("ideal_closure: generator is not skew-symmetric");
    absorb(coords_of(G));
  }

  const std::vector<CMatrix> F = skew_basis(n);
  for (Index sweep = 0; sweep < m; ++sweep) {
    bool grew = false;
    const Index cur = S.coords.cols();
    for (const CMatrix& f : F)
      for (Index c = 0; c < cur; ++c)
        grew |= absorb(coords_of(bracket(f, matrix_of(S.coords.col(c), n))));
    if (!grew) break;
  }
  return S;
}

bool is_lie_ideal(const IdealSubspace& S, const ToleranceProfile& tol) {
  tol.validate();
  const std::vector<CMatrix> F = skew_basis(S.n);
  const double sqrt2 = 1.4142135623730950488;
  for (const CMatrix& f : F)
    for (Index c = 0; c < S.coords.cols(); ++c) {
      const CMatrix X = matrix_of(S.coords.col(c), S.n);  // |X|_F = sqrt(2)
      const CVector w = coords_of(bracket(f, X));
      const double res = sqrt2 * project_out(S.coords, w).norm();
      if (res > 1e-8 * f.norm() * X.norm()) return false;
    }
  return true;
}

IdealSubspace trace_complement(const IdealSubspace& S) {
  const Index m = S.coords.rows();
  // full orthonormal frame containing span(S), complement = the tail columns
  Eigen::HouseholderQR<CMatrix> qr(S.coords);
  const CMatrix Q = qr.householderQ() * CMatrix::Identity(m, m);
  IdealSubspace out;
  out.n = S.n;
  out.coords = Q.rightCols(m - S.coords.cols());
  return out;
}

}  // namespace orthlie

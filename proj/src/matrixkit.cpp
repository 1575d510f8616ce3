#include "orthlie/matrixkit.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace orthlie {

namespace {

void require_square(const CMatrix& M, const char* who) {
  if (M.rows() != M.cols())
    throw DimensionError(std::string(who) + ": matrix must be square");
  if (M.rows() == 0) throw DimensionError(std::string(who) + ": matrix must be nonempty");
}

}  // namespace

EigResult eig_full(const CMatrix& M) {
  require_square(M, "eig_full");
  if (!M.allFinite()) throw NumericalError("eig_full: non-finite entries");
  Eigen::ComplexEigenSolver<CMatrix> solver(M, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success)
    throw NumericalError("eig_full: eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

RVector svd_values(const CMatrix& M) {
  if (M.size() == 0) throw DimensionError("svd_values: empty matrix");
  if (!M.allFinite()) throw NumericalError("svd_values: non-finite entries");
  Eigen::JacobiSVD<CMatrix> svd(M);
  return svd.singularValues();
}

double operator_norm(const CMatrix& M) {
  if (M.size() == 0) return 0.0;
  return svd_values(M)(0);
}

double schatten_norm(const CMatrix& M, double p) {
  if (!(p >= 1.0)) throw ParameterError("schatten_norm: p must be >= 1 (or inf)");
  const RVector s = svd_values(M);
  if (std::isinf(p)) return s(0);
  if (p == 1.0) return s.sum();
  if (p == 2.0) return s.norm();
  double acc = 0.0;
  for (Index i = 0; i < s.size(); ++i) acc += std::pow(s(i), p);
  return std::pow(acc, 1.0 / p);
}

Index rank_tol(const CMatrix& M, const ToleranceProfile& tol) {
  tol.validate();
  const RVector s = svd_values(M);
  const double thresh = tol.rank_threshold(s(0), std::max(M.rows(), M.cols()));
  Index r = 0;
  for (Index i = 0; i < s.size(); ++i)
    if (s(i) > thresh) ++r;
  return r;
}

CMatrix outer(const CVector& e, const CVector& f) {
  if (e.size() == 0 || f.size() == 0) throw DimensionError("outer: empty vector");
  return e * f.adjoint();
}

CMatrix kron(const CMatrix& A, const CMatrix& B) {
  CMatrix K(A.rows() * B.rows(), A.cols() * B.cols());
  for (Index i = 0; i < A.rows(); ++i)
    for (Index j = 0; j < A.cols(); ++j)
      K.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
  return K;
}

double hausdorff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.empty() || b.empty())
    throw ParameterError("hausdorff: sets must be nonempty");
  auto directed = [](const std::vector<Complex>& from, const std::vector<Complex>& to) {
    double worst = 0.0;
    for (const Complex& x : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const Complex& y : to) best = std::min(best, std::abs(x - y));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

}  // namespace orthlie

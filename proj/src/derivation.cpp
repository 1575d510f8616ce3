#include "orthlie/derivation.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace orthlie {

namespace {

// coordinates of a (numerically) skew-symmetric S in the F_jk basis
CVector skew_coords(const CMatrix& S) {
  const Index n = S.rows();
  CVector c(n * (n - 1) / 2);
  Index idx = 0;
  for (Index j = 0; j < n; ++j)
    for (Index k = j + 1; k < n; ++k) c(idx++) = 0.5 * (S(j, k) - S(k, j));
  return c;
}

// transport to entrywise-conjugation coordinates when needed; the fixed
// basis is drawn from a pinned seed so repeated calls agree
CMatrix reduce_to_plain(const SkewElement& T, CMatrix& basis_change,
                        const ToleranceProfile& tol) {
  if (T.C.is_canonical()) {
    basis_change = CMatrix::Identity(T.C.dim(), T.C.dim());
    return T.T;
  }
  Rng rng(0x0f17edba515ULL);
  basis_change = fixed_basis(T.C, rng, tol);
  return basis_change.adjoint() * T.T * basis_change;
}

CVector kernel_vector_candidates(const CMatrix& M, const ToleranceProfile& tol, CMatrix* out) {
  Eigen::JacobiSVD<CMatrix> svd(M, Eigen::ComputeFullV);
  const RVector s = svd.singularValues();
  const double thresh = tol.rank_threshold(s(0), M.rows());
  Index null_dim = 0;
  for (Index i = 0; i < s.size(); ++i)
    if (s(i) <= thresh) ++null_dim;
  *out = svd.matrixV().rightCols(null_dim);
  return s;
}

}  // namespace

AdMatrix ad_matrix(const SkewElement& T, const ToleranceProfile& tol) {
  tol.validate();
  AdMatrix out;
  out.T = reduce_to_plain(T, out.basis_change, tol);
  const Index n = out.T.rows();
  if (n < 2) throw DimensionError("ad_matrix: need n >= 2");
  // transported coordinates must be plainly skew-symmetric
  if (operator_norm(out.T + out.T.transpose()) >
      tol.member_tol(operator_norm(out.T)))
    throw MembershipError("ad_matrix: transported matrix is not skew-symmetric");
  out.basis = skew_basis(n);
  const Index m = static_cast<Index>(out.basis.size());
  out.M.resize(m, m);
  for (Index col = 0; col < m; ++col) {
    const CMatrix bracket = out.T * out.basis[col] - out.basis[col] * out.T;
    out.M.col(col) = skew_coords(bracket);
  }
  return out;
}

SpectrumSet ad_spectrum_oracle(const SkewElement& T, const ToleranceProfile& tol) {
  return spectrum(ad_matrix(T, tol).M, tol);
}

PointSet ad_spectrum_formula(const SkewElement& T, const ToleranceProfile& tol) {
  tol.validate();
  CMatrix B;
  const CMatrix Tc = reduce_to_plain(T, B, tol);
  const SpectrumSet S = spectrum(Tc, tol);
  const PointSet sp = S.point_set();
  PointSet sums = sumset(sp, sp);
  const XiSet xi = xi_set(Tc, S, tol);
  PointSet out;
  out.tol = sums.tol;
  for (const Complex& s : sums.values) {
    bool removed = false;
    for (const Complex& z : xi.values)
      if (std::abs(s - 2.0 * z) <= sums.tol) {
        removed = true;
        break;
      }
    if (!removed) out.values.push_back(s);
  }
  return out;
}

DeltaBlocks delta_blocks(const SkewElement& T, const ToleranceProfile& tol) {
  tol.validate();
  DeltaBlocks out;
  AdMatrix ad = ad_matrix(T, tol);
  const Index n = ad.T.rows();
  out.ad_block = std::move(ad.M);

  // symmetric basis: E_jj, then E_jk + E_kj lexicographic
  const Index ms = n * (n + 1) / 2;
  std::vector<std::pair<Index, Index>> pairs;
  pairs.reserve(ms);
  for (Index j = 0; j < n; ++j) pairs.emplace_back(j, j);
  for (Index j = 0; j < n; ++j)
    for (Index k = j + 1; k < n; ++k) pairs.emplace_back(j, k);

  auto sym_coords = [&](const CMatrix& S) {
    CVector c(ms);
    for (Index a = 0; a < ms; ++a) {
      const auto [j, k] = pairs[a];
      c(a) = (j == k) ? S(j, j) : 0.5 * (S(j, k) + S(k, j));
    }
    return c;
  };

  out.sym_block.resize(ms, ms);
  for (Index a = 0; a < ms; ++a) {
    const auto [j, k] = pairs[a];
    CMatrix G = CMatrix::Zero(n, n);
    G(j, k) += 1.0;
    G(k, j) += (j == k) ? 0.0 : 1.0;
    out.sym_block.col(a) = sym_coords(ad.T * G - G * ad.T);
  }
  return out;
}

CMatrix eig_pair_vector(const SkewElement& T, Complex lambda, const CVector& e, Complex mu,
                        const CVector& f, const ToleranceProfile& tol) {
  tol.validate();
  const double tnorm = operator_norm(T.T);
  if ((T.T * e - lambda * e).norm() > tol.atol * std::max(tnorm, 1.0) * e.norm() ||
      e.norm() == 0.0)
    throw NotEigenpair("eig_pair_vector: (lambda, e) fails the residual bound");
  if ((T.T * f - mu * f).norm() > tol.atol * std::max(tnorm, 1.0) * f.norm() ||
      f.norm() == 0.0)
    throw NotEigenpair("eig_pair_vector: (mu, f) fails the residual bound");
  const CVector en = e / e.norm();
  const CVector fn = f / f.norm();
  const CMatrix X = rank_two(en, fn, T.C);
  if (operator_norm(X) <= tol.atol)
    throw ZeroConstruct("eig_pair_vector: construction collapsed to zero");
  const double res = operator_norm(T.T * X - X * T.T - (lambda + mu) * X);
  if (res > 1e-8 * std::max(tnorm, 1.0) * operator_norm(X))
    throw NumericalError("eig_pair_vector: commutator residual above contract");
  return X;
}

CMatrix jordan_pair_vector(const SkewElement& T, Complex z, const ToleranceProfile& tol) {
  tol.validate();
  const Index n = T.T.rows();
  const CMatrix I = CMatrix::Identity(n, n);
  const CMatrix D = T.T - z * I;

  CMatrix K2;
  kernel_vector_candidates(D * D, tol, &K2);
  if (K2.cols() <= 1)
    throw PreconditionFailed("jordan_pair_vector: dim ker (T - z)^2 <= 1");
  CMatrix K1;
  kernel_vector_candidates(D, tol, &K1);

  CVector f1, f2;
  if (K1.cols() >= 2) {
    // two genuine eigenvectors
    f1 = K1.col(0);
    f2 = K1.col(1);
  } else {
    // jordan pair: pick the second-kernel direction furthest from the kernel,
    // then push it down one rung
    Index best = 0;
    double best_res = -1.0;
    for (Index c = 0; c < K2.cols(); ++c) {
      CVector w = K2.col(c);
      if (K1.cols() == 1) w -= inner(w, K1.col(0)) * K1.col(0);
      if (w.norm() > best_res) {
        best_res = w.norm();
        best = c;
      }
    }
    CVector w = K2.col(best);
    if (K1.cols() == 1) w -= inner(w, K1.col(0)) * K1.col(0);
    if (w.norm() <= tol.atol)
      throw PreconditionFailed("jordan_pair_vector: no direction beyond the kernel");
    f2 = w / w.norm();
    f1 = D * f2;
    if (f1.norm() <= tol.atol)
      throw PreconditionFailed("jordan_pair_vector: chain collapsed");
  }

  const CMatrix X = outer(f1, T.C.apply(f2)) - outer(f2, T.C.apply(f1));
  if (operator_norm(X) <= tol.atol)
    throw ZeroConstruct("jordan_pair_vector: construction collapsed to zero");
  const double res = operator_norm(T.T * X - X * T.T - 2.0 * z * X);
  if (res > 1e-8 * std::max(operator_norm(T.T), 1.0) * operator_norm(X))
    throw NumericalError("jordan_pair_vector: commutator residual above contract");
  return X;
}

double ad_trace_antisymmetry(const CMatrix& T, const CMatrix& X, const CMatrix& Y) {
  const CMatrix TX = T * X - X * T;
  const CMatrix TY = T * Y - Y * T;
  return std::abs(((TX * Y).trace() + (X * TY).trace()));
}

}  // namespace orthlie

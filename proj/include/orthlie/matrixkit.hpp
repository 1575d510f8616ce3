#pragma once

#include "orthlie/types.hpp"

#include <vector>

namespace orthlie {

struct EigResult {
  CVector values;   // unordered, as returned by the solver
  CMatrix vectors;  // unit right eigenvectors / Schur-derived directions, by column
};

// full nonsymmetric eigendecomposition.  for every diagonalizable eigenpair
// (lambda, v) the residual obeys |Mv - lambda v| <= 100 n eps |M|.
// throws DimensionError on non-square, NumericalError if the solver fails.
EigResult eig_full(const CMatrix& M);

// singular values, descending
RVector svd_values(const CMatrix& M);

// largest singular value (0 for empty)
double operator_norm(const CMatrix& M);

// schatten p-norm: l_p norm of the singular values; p = inf gives the
// operator norm.  requires p >= 1.
double schatten_norm(const CMatrix& M, double p);

// number of singular values strictly above tol.rank_threshold(sigma_max, n)
Index rank_tol(const CMatrix& M, const ToleranceProfile& tol = {});

// rank-one map x -> <x,f> e with the first-argument-linear inner product;
// matrix e * conj(f)^T
CMatrix outer(const CVector& e, const CVector& f);

// kronecker product (row-major pairing: result((i,k),(j,l)) = A(i,j) B(k,l))
CMatrix kron(const CMatrix& A, const CMatrix& B);

// directed + symmetric hausdorff distance between finite nonempty value sets
double hausdorff(const std::vector<Complex>& a, const std::vector<Complex>& b);

}  // namespace orthlie

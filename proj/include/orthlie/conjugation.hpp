#pragma once

#include "orthlie/matrixkit.hpp"

namespace orthlie {

// antiunitary involution x -> U conj(x) with U symmetric unitary.
// the pair (U symmetric, U unitary) is exactly what makes the map an
// involution: C(C(x)) = U conj(U) x = U U^* x = x.
class Conjugation {
 public:
  // entrywise conjugation: U = I
  static Conjugation canonical(Index n);

  // validated construction from an explicit U.
  // throws NotUnitary / NotSymmetric when the defect exceeds
  // max(tol.atol, tol.rtol) in operator norm.
  static Conjugation from_matrix(const CMatrix& U, const ToleranceProfile& tol = {});

  Index dim() const { return U_.rows(); }
  const CMatrix& matrix() const { return U_; }

  bool is_canonical() const;

  // C x
  CVector apply(const CVector& x) const;

  // matrix of the linear map C X C  (equals U conj(X) U^*)
  CMatrix conjugate_map(const CMatrix& X) const;

  // matrix of the antilinear-sandwich linear map  C_a A^* C_b : x -> C_a(A^*(C_b x))
  // for rectangular A mapping the C_a-space into the C_b-space; U_a, U_b are the
  // blocks of symmetric-unitary matrices realizing the two conjugations.
  // used for block decompositions; equals U_a A^T conj(U_b).
  static CMatrix sandwich(const CMatrix& Ua, const CMatrix& A, const CMatrix& Ub);

 private:
  explicit Conjugation(CMatrix U) : U_(std::move(U)) {}
  CMatrix U_;
};

// complex-orthonormal basis of the fixed set {x : Cx = x}, returned by
// columns.  randomized greedy construction: draw v, symmetrize to
// w = v + Cv (or i(v - Cv) when that is tiny), then gram-schmidt with real
// coefficients -- inner products between fixed vectors are automatically
// real.  deterministic for a fixed rng seed.
// throws NumericalError if repeated draws cannot extend the basis.
CMatrix fixed_basis(const Conjugation& C, Rng& rng, const ToleranceProfile& tol = {});

// conjugation on the doubled space with U = [[0, U_D], [U_D, 0]]
Conjugation double_block(const Conjugation& D);

}  // namespace orthlie

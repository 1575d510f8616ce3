#pragma once

#include "orthlie/conjugation.hpp"

#include <utility>
#include <vector>

namespace orthlie {

// defect of the skew relation C T C = -T^*, in operator norm
double membership_residual(const CMatrix& T, const Conjugation& C);

// true iff membership_residual(T, C) <= tol.member_tol(|T|)
bool is_member(const CMatrix& T, const Conjugation& C, const ToleranceProfile& tol = {});

// validated element of the skew class of C
struct SkewElement {
  CMatrix T;
  Conjugation C;
  double residual;  // membership_residual(T, C) at construction

  // throws MembershipError when T fails the class relation at tol
  static SkewElement make(CMatrix T, Conjugation C, const ToleranceProfile& tol = {});
};

// split of an arbitrary X into (sym, skew) with X = sym + skew, where
// sym satisfies C A C = A^* and skew satisfies C A C = -A^*
std::pair<CMatrix, CMatrix> split(const CMatrix& X, const Conjugation& C);

// basis F_jk = E_jk - E_kj of the entrywise-conjugation skew class,
// lexicographic in (j, k), j < k; n(n-1)/2 matrices, frobenius norm sqrt(2)
std::vector<CMatrix> skew_basis(Index n);

// pair index of F_jk within skew_basis(n) order
Index skew_basis_index(Index n, Index j, Index k);

// rank-two element e (x) (Cf) - f (x) (Ce) from unit vectors e, f.
// throws NotUnit if a norm deviates from 1 by more than 1e-10.
CMatrix rank_two(const CVector& e, const CVector& f, const Conjugation& C);

// block-diagonal doubling X -> diag(X, -C X^* C) into the class of
// double_block(C); preserves brackets and the operator norm
CMatrix embed_double(const CMatrix& X, const Conjugation& C);

// block pattern check for a conjugation in antidiagonal three-block form
// with dims (1, n-2, 1): the (1,3)/(3,1) corners of a member vanish and the
// remaining blocks are pinned by the middle/corner sub-conjugations.
// returns the worst block residual; throws BlockShapeError when C itself
// does not have the required antidiagonal shape.
double three_block_residual(const CMatrix& R, const Conjugation& C,
                            const ToleranceProfile& tol = {});
bool three_block_check(const CMatrix& R, const Conjugation& C,
                       const ToleranceProfile& tol = {});

// trace pairing tr(AB)
Complex trace_pair(const CMatrix& A, const CMatrix& B);

// norm-attaining trace-dual witness for T in the entrywise-conjugation class:
// X skew-symmetric with |X|_1 = 1 and tr(XT) = |T|, built from a top
// singular pair.  throws DegenerateZero when |T| <= tol.atol, MembershipError
// when T is not in the class or C is not entrywise conjugation.
CMatrix dual_witness(const CMatrix& T, const Conjugation& C, const ToleranceProfile& tol = {});

}  // namespace orthlie

#pragma once

#include "orthlie/skewalg.hpp"

#include <vector>

namespace orthlie {

// commutator, the bracket of the class: [F_12, F_13] = -F_23
CMatrix bracket(const CMatrix& A, const CMatrix& B);

// subspace of the plain skew class, stored by orthonormal coordinate columns
// over the F_jk basis (coordinate dot = half the trace pairing)
struct IdealSubspace {
  Index n = 0;
  CMatrix coords;  // n(n-1)/2 rows, dim columns, orthonormal

  Index dim() const { return coords.cols(); }
  // basis matrices, trace-orthonormalized: tr(b_i b_j^*) = delta_ij
  std::vector<CMatrix> basis_matrices() const;
};

// smallest bracket-closed subspace containing the generators: span saturation
// sweeping [F, X] over the full basis F and current span X until stable
// (at most n(n-1)/2 sweeps).  throws MembershipError when a generator is not
// plainly skew-symmetric.
IdealSubspace ideal_closure(const std::vector<CMatrix>& generators,
                            const ToleranceProfile& tol = {});

// every [F, X] stays in the span: frobenius residual after projection at most
// 1e-8 |F|_F |X|_F
bool is_lie_ideal(const IdealSubspace& S, const ToleranceProfile& tol = {});

// orthogonal complement within the class under the trace pairing
IdealSubspace trace_complement(const IdealSubspace& S);

}  // namespace orthlie

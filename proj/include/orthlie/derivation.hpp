#pragma once

#include "orthlie/skewalg.hpp"
#include "orthlie/spectra.hpp"

#include <vector>

namespace orthlie {

// coordinates of X -> [T, X] on the skew class.  a non-entrywise conjugation
// is first transported to entrywise form by one change of basis onto a fixed
// basis of C (seeded internally, deterministic), after which the class is the
// plain skew-symmetric matrices with basis F_jk.
struct AdMatrix {
  CMatrix T;                   // class element in the transported coordinates
  std::vector<CMatrix> basis;  // skew_basis(n)
  CMatrix M;                   // n(n-1)/2 square coordinate matrix of [T, .]
  CMatrix basis_change;        // columns: the fixed basis used (identity if none)
};

AdMatrix ad_matrix(const SkewElement& T, const ToleranceProfile& tol = {});

// spectrum of the explicit coordinate matrix: the brute-force reference
SpectrumSet ad_spectrum_oracle(const SkewElement& T, const ToleranceProfile& tol = {});

// pair-sum prediction: {l + m : l, m spectral values of T} minus the doubles
// of the xi values, with tolerance-aware subtraction at the merge radius
PointSet ad_spectrum_formula(const SkewElement& T, const ToleranceProfile& tol = {});

// the same commutator on the full matrix space splits over skew + symmetric;
// these are the two diagonal blocks (the skew one equals ad_matrix(T).M).
// symmetric coordinates: E_jj first, then E_jk + E_kj lexicographic.
struct DeltaBlocks {
  CMatrix ad_block;   // n(n-1)/2 square
  CMatrix sym_block;  // n(n+1)/2 square
};

DeltaBlocks delta_blocks(const SkewElement& T, const ToleranceProfile& tol = {});

// eigenvector of the commutator from two eigenvectors of T:
// X = e (x) (Cf) - f (x) (Ce) satisfies [T, X] = (lambda + mu) X.
// throws NotEigenpair when a pair fails its residual bound, ZeroConstruct
// when the construction collapses.
CMatrix eig_pair_vector(const SkewElement& T, Complex lambda, const CVector& e, Complex mu,
                        const CVector& f, const ToleranceProfile& tol = {});

// eigenvector of the commutator for the double 2z of a spectral value z with
// a two-dimensional second kernel: either two kernel vectors of T - z, or a
// jordan pair f1 = (T - z) f2 != 0.  throws PreconditionFailed when
// dim ker (T - z)^2 <= 1.
CMatrix jordan_pair_vector(const SkewElement& T, Complex z, const ToleranceProfile& tol = {});

// |tr([T,X] Y) + tr(X [T,Y])|: the commutator is antisymmetric for the trace
// pairing; returns the defect
double ad_trace_antisymmetry(const CMatrix& T, const CMatrix& X, const CMatrix& Y);

}  // namespace orthlie

#pragma once

#include "orthlie/matrixkit.hpp"
#include "orthlie/setgeom.hpp"

#include <vector>

namespace orthlie {

struct SpectrumPoint {
  Complex value;     // cluster centroid
  int multiplicity;  // cluster size
};

struct SpectrumSet {
  std::vector<SpectrumPoint> points;  // lexicographic by (re, im)
  double cluster_radius = 0.0;

  std::vector<Complex> values() const;
  PointSet point_set() const;  // values with tol = cluster_radius
  double max_abs() const;
};

// eigenvalues of M regrouped by single linkage at tol.cluster_radius(max
// |lambda|); representatives are multiplicity-weighted centroids, pairwise
// separated by more than the radius
SpectrumSet spectrum(const CMatrix& M, const ToleranceProfile& tol = {});

// true iff negation permutes the clusters including multiplicities
bool check_symmetric_spectrum(const SpectrumSet& S);
bool check_symmetric_spectrum(const CMatrix& M, const ToleranceProfile& tol = {});

// spectral idempotent for the cluster at z: trapezoid quadrature of the
// resolvent over the circle |zeta - z| = r with tol.contour_points nodes.
// pre: the closed disc encloses exactly one cluster and the contour stays
// clear of the spectrum (ContourTouchesSpectrum otherwise); nodes within
// tol.atol of an eigenvalue raise SingularResolvent.
// post (enforced): |E^2 - E| <= 1e-8 (1 + |E|^2).
CMatrix riesz_idempotent(const CMatrix& M, Complex z, double r, const ToleranceProfile& tol = {});

// raw trapezoid sum over the circle |zeta - z| = r with the given node
// count: no separation or idempotency enforcement, only the node-clearance
// guard (SingularResolvent).  riesz_idempotent wraps this; exposed so
// convergence in the node count can be measured directly.
CMatrix riesz_quadrature(const CMatrix& M, Complex z, double r, int nodes,
                         double node_clearance);

// multiplicity of the cluster at z, or 0 when z is away from the spectrum
Index riesz_dim(const CMatrix& M, Complex z, const ToleranceProfile& tol = {});

// spectral values z whose doubles the pair-sum formula must discard:
// rank((M - z)^2) == n - 1 and no two distinct spectral values sum to 2z
struct XiSet {
  std::vector<Complex> values;
  double tol = 0.0;
};

XiSet xi_set(const CMatrix& M, const ToleranceProfile& tol = {});
XiSet xi_set(const CMatrix& M, const SpectrumSet& S, const ToleranceProfile& tol = {});

}  // namespace orthlie

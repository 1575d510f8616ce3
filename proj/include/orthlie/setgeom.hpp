#pragma once

#include "orthlie/types.hpp"

#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace orthlie {

// finite set of complex values with a merge radius: representatives are kept
// pairwise further apart than tol
struct PointSet {
  std::vector<Complex> values;
  double tol = 0.0;
};

// dedupe raw values into representatives (single linkage at tol, centroid
// representative, lexicographic (re, im) order)
PointSet make_point_set(std::vector<Complex> raw, double tol);

// {a + b : a in A, b in B}, deduped at max(A.tol, B.tol)
PointSet sumset(const PointSet& A, const PointSet& B);

// some pair of distinct representatives z1 != z2 with |z1 + z2 - t| <= S.tol,
// if one exists
std::optional<std::pair<Complex, Complex>> distinct_pair_sum(const PointSet& S, Complex t);

// true iff negation permutes the representatives (bijective matching at S.tol)
bool neg_symmetric(const PointSet& S);

// ---- planar regions -------------------------------------------------------

struct FinitePoints {
  std::vector<Complex> points;
};

// simple polygon, vertices in order, implicitly closed
struct SimplePolygon {
  std::vector<Complex> vertices;
};

// axis-aligned union of unit cells: cell (i, j) covers
// origin + [i, i+1] x [j, j+1] scaled by h
struct GridRegion {
  std::vector<std::pair<int, int>> cells;
  double h = 1.0;
  Complex origin{0.0, 0.0};
};

using PlanarRegion = std::variant<FinitePoints, SimplePolygon, GridRegion>;

double region_diameter(const PlanarRegion& R);

// boundary discretization; for polygons and grids at least min_points samples
std::vector<Complex> sample_boundary(const PlanarRegion& R, int min_points = 512);

// random points of the region (members for finite sets, interior points
// otherwise)
std::vector<Complex> sample_interior(const PlanarRegion& R, int count, Rng& rng);

struct BoundaryPairCertificate {
  Complex z1, z2;  // interior sample pair
  Complex b1, b2;  // boundary pair found
  double err;      // |b1 + b2 - (z1 + z2)|
  bool ok;
};

struct BoundarySumReport {
  bool ok;
  std::vector<BoundaryPairCertificate> certificates;
};

// checks that interior sums are realized by boundary sums: for `samples`
// random interior pairs (z1, z2), search the discretized boundary for b1, b2
// with |b1 + b2 - (z1 + z2)| <= tol * diameter.  the search intersects the
// reflected boundary { z1 + z2 - b : b boundary } with the boundary itself
// (nearest-pair query over the samples).  throws DegenerateRegion when the
// region has no boundary to sample.
BoundarySumReport boundary_sum_property(const PlanarRegion& R, int samples, double tol,
                                        Rng& rng, int boundary_points = 512);

}  // namespace orthlie

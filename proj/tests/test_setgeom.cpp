#include "orthlie/setgeom.hpp"

#include <doctest.h>

#include <cmath>

using namespace orthlie;

namespace {
SimplePolygon unit_square() {
  SimplePolygon p;
  p.vertices = {Complex(0, 0), Complex(1, 0), Complex(1, 1), Complex(0, 1)};
  return p;
}

double dist_to_segment(Complex p, Complex a, Complex b) {
  const Complex d = b - a;
  const double len2 = std::norm(d);
  double t = len2 > 0 ? ((p - a).real() * d.real() + (p - a).imag() * d.imag()) / len2 : 0.0;
  t = std::max(0.0, std::min(1.0, t));
  return std::abs(p - (a + t * d));
}

double dist_to_polygon_boundary(Complex p, const SimplePolygon& poly) {
  double best = std::numeric_limits<double>::infinity();
  const auto& v = poly.vertices;
  for (std::size_t i = 0; i < v.size(); ++i)
    best = std::min(best, dist_to_segment(p, v[i], v[(i + 1) % v.size()]));
  return best;
}
}  // namespace

TEST_CASE("make_point_set merges at the radius and sorts representatives") {
  const PointSet S = make_point_set({Complex(5, 0), Complex(1, 0), Complex(1 + 1e-12, 0)}, 1e-9);
  REQUIRE(S.values.size() == 2);
  CHECK(std::abs(S.values[0] - Complex(1, 0)) < 1e-11);
  CHECK(std::abs(S.values[1] - Complex(5, 0)) < 1e-15);
  // chained values collapse transitively (single linkage)
  const PointSet T = make_point_set({0.0, 0.8, 1.6}, 1.0);
  CHECK(T.values.size() == 1);
  CHECK(std::abs(T.values[0] - Complex(0.8, 0)) < 1e-12);
}

TEST_CASE("sumset of symmetric integers") {
  const PointSet A = make_point_set({-2.0, -1.0, 1.0, 2.0}, 1e-9);
  const PointSet S = sumset(A, A);
  REQUIRE(S.values.size() == 9);
  for (int k = -4; k <= 4; ++k)
    CHECK(std::abs(S.values[static_cast<std::size_t>(k + 4)] - Complex(k, 0)) < 1e-12);
}

TEST_CASE("distinct_pair_sum needs two distinct representatives") {
  const PointSet S = make_point_set({-1.0, 0.0, 1.0}, 1e-9);
  const auto hit = distinct_pair_sum(S, Complex(0, 0));
  REQUIRE(hit.has_value());
  CHECK(std::abs(hit->first + hit->second) < 1e-12);
  CHECK(std::abs(hit->first - hit->second) > 1e-9);
  CHECK_FALSE(distinct_pair_sum(S, Complex(2, 0)).has_value());   // only 1+1
  CHECK_FALSE(distinct_pair_sum(S, Complex(0.5, 0)).has_value());
  CHECK(distinct_pair_sum(S, Complex(1, 0)).has_value());         // 1 + 0
}

TEST_CASE("neg_symmetric matches values to their negatives with multiplicity") {
  CHECK(neg_symmetric(make_point_set({-1.0, 0.0, 1.0}, 1e-9)));
  CHECK(neg_symmetric(make_point_set({Complex(0, -2), Complex(0, 2)}, 1e-9)));
  CHECK_FALSE(neg_symmetric(make_point_set({0.0, 1.0}, 1e-9)));
}

TEST_CASE("region diameters") {
  CHECK(region_diameter(unit_square()) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  FinitePoints fp;
  fp.points = {Complex(0, 0), Complex(3, 4)};
  CHECK(region_diameter(fp) == doctest::Approx(5.0).epsilon(1e-12));
  GridRegion g;
  g.cells = {{0, 0}};
  g.h = 2.0;
  CHECK(region_diameter(g) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("sample_boundary lies on the boundary and respects the minimum count") {
  const SimplePolygon sq = unit_square();
  const auto pts = sample_boundary(sq, 512);
  CHECK(pts.size() >= 512);
  for (const Complex& p : pts) CHECK(dist_to_polygon_boundary(p, sq) < 1e-12);

  FinitePoints fp;
  fp.points = {Complex(1, 1), Complex(2, 2)};
  CHECK(sample_boundary(fp).size() == 2);

  SimplePolygon degenerate;
  degenerate.vertices = {Complex(0, 0), Complex(1, 0)};
  CHECK_THROWS_AS(sample_boundary(degenerate), DegenerateRegion);
  CHECK_THROWS_AS(sample_boundary(FinitePoints{}), DegenerateRegion);
  CHECK_THROWS_AS(sample_boundary(GridRegion{}), DegenerateRegion);
}

TEST_CASE("sample_interior stays inside") {
  Rng rng(61);
  const SimplePolygon sq = unit_square();
  for (const Complex& p : sample_interior(sq, 200, rng)) {
    CHECK(p.real() > 0.0);
    CHECK(p.real() < 1.0);
    CHECK(p.imag() > 0.0);
    CHECK(p.imag() < 1.0);
  }
  GridRegion g;
  g.cells = {{0, 0}, {1, 0}};
  g.h = 1.0;
  for (const Complex& p : sample_interior(g, 100, rng)) {
    CHECK(p.real() >= 0.0);
    CHECK(p.real() <= 2.0);
    CHECK(p.imag() >= 0.0);
    CHECK(p.imag() <= 1.0);
  }
  FinitePoints fp;
  fp.points = {Complex(1, 1), Complex(2, 2)};
  for (const Complex& p : sample_interior(fp, 10, rng))
    CHECK(std::min(std::abs(p - fp.points[0]), std::abs(p - fp.points[1])) < 1e-15);
}

TEST_CASE("interior pair sums are realized on the boundary") {
  Rng rng(71);
  SUBCASE("square") {
    const BoundarySumReport rep = boundary_sum_property(unit_square(), 50, 1e-3, rng);
    CHECK(rep.ok);
    const double diam = region_diameter(unit_square());
    for (const auto& c : rep.certificates) {
      CHECK(c.ok);
      CHECK(c.err <= 1e-3 * diam);
      CHECK(std::abs(c.b1 + c.b2 - (c.z1 + c.z2)) == doctest::Approx(c.err));
      CHECK(dist_to_polygon_boundary(c.b1, unit_square()) < 1e-9);
      CHECK(dist_to_polygon_boundary(c.b2, unit_square()) < 1e-9);
    }
  }
  SUBCASE("grid union") {
    GridRegion g;
    g.cells = {{0, 0}, {1, 0}, {1, 1}};
    g.h = 0.7;
    const BoundarySumReport rep = boundary_sum_property(g, 50, 1e-3, rng);
    CHECK(rep.ok);
  }
  SUBCASE("finite set") {
    FinitePoints fp;
    fp.points = {Complex(0, 0), Complex(1, 0), Complex(0, 1), Complex(2, 2)};
    const BoundarySumReport rep = boundary_sum_property(fp, 30, 1e-9, rng);
    CHECK(rep.ok);
  }
}

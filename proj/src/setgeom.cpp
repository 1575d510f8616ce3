#include "orthlie/setgeom.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace orthlie {

namespace {

bool lex_less(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

PointSet make_point_set(std::vector<Complex> raw, double tol) {
  if (tol < 0.0 || !std::isfinite(tol)) throw ParameterError("point set: bad merge radius");
  PointSet out;
  out.tol = tol;
  if (raw.empty()) return out;

  std::vector<Complex> work = std::move(raw);
  // single linkage, then re-merge centroids until representatives are
  // pairwise separated by more than tol
  while (true) {
    const int n = static_cast<int>(work.size());
    UnionFind uf(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (std::abs(work[i] - work[j]) <= tol) uf.unite(i, j);
    std::vector<Complex> sum(n, Complex(0, 0));
    std::vector<int> count(n, 0);
    for (int i = 0; i < n; ++i) {
      const int r = uf.find(i);
      sum[r] += work[i];
      count[r] += 1;
    }
    std::vector<Complex> reps;
    for (int i = 0; i < n; ++i)
      if (count[i] > 0) reps.push_back(sum[i] / static_cast<double>(count[i]));
    const bool stable = reps.size() == work.size();
    work = std::move(reps);
    if (stable) break;
  }
  std::sort(work.begin(), work.end(), lex_less);
  out.values = std::move(work);
  return out;
}

PointSet sumset(const PointSet& A, const PointSet& B) {
  std::vector<Complex> sums;
  sums.reserve(A.values.size() * B.values.size());
  for (const Complex& a : A.values)
    for (const Complex& b : B.values) sums.push_back(a + b);
  return make_point_set(std::move(sums), std::max(A.tol, B.tol));
}

std::optional<std::pair<Complex, Complex>> distinct_pair_sum(const PointSet& S, Complex t) {
  const auto& v = S.values;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (std::abs(v[i] + v[j] - t) <= S.tol) return std::make_pair(v[i], v[j]);
  return std::nullopt;
}

bool neg_symmetric(const PointSet& S) {
  const auto& v = S.values;
  std::vector<bool> used(v.size(), false);
  for (const Complex& z : v) {
    bool matched = false;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (!used[j] && std::abs(v[j] + z) <= S.tol) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

// ---- regions ---------------------------------------------------------------

namespace {

struct Segment {
  Complex a, b;
  double length() const { return std::abs(b - a); }
};

Complex closest_on_segment(const Complex& q, const Segment& s) {
  const Complex d = s.b - s.a;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return s.a;
  double t = ((q - s.a).real() * d.real() + (q - s.a).imag() * d.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return s.a + t * d;
}

std::vector<Segment> boundary_segments(const SimplePolygon& P) {
  if (P.vertices.size() < 3) throw DegenerateRegion("polygon: need at least 3 vertices");
  std::vector<Segment> segs;
  const std::size_t n = P.vertices.size();
  for (std::size_t i = 0; i < n; ++i) segs.push_back({P.vertices[i], P.vertices[(i + 1) % n]});
  return segs;
}

std::vector<Segment> boundary_segments(const GridRegion& G) {
  if (G.cells.empty()) throw DegenerateRegion("grid region: no cells");
  std::vector<Segment> segs;
  auto has = [&](int i, int j) {
    for (const auto& c : G.cells)
      if (c.first == i && c.second == j) return true;
    return false;
  };
  for (const auto& [i, j] : G.cells) {
    const Complex o = G.origin + Complex(i * G.h, j * G.h);
    const Complex ex(G.h, 0.0), ey(0.0, G.h);
    if (!has(i, j - 1)) segs.push_back({o, o + ex});
    if (!has(i, j + 1)) segs.push_back({o + ey, o + ey + ex});
    if (!has(i - 1, j)) segs.push_back({o, o + ey});
    if (!has(i + 1, j)) segs.push_back({o + ex, o + ex + ey});
  }
  return segs;
}

bool point_in_polygon(const Complex& q, const SimplePolygon& P) {
  // crossing number; samples are random so edge grazing is immaterial
  bool in = false;
  const std::size_t n = P.vertices.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Complex& vi = P.vertices[i];
    const Complex& vj = P.vertices[j];
    if ((vi.imag() > q.imag()) != (vj.imag() > q.imag())) {
      const double x =
          vi.real() + (q.imag() - vi.imag()) / (vj.imag() - vi.imag()) * (vj.real() - vi.real());
      if (q.real() < x) in = !in;
    }
  }
  return in;
}

double diameter_of(const std::vector<Complex>& pts) {
  double d = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, std::abs(pts[i] - pts[j]));
  return d;
}

std::vector<Complex> corner_cloud(const GridRegion& G) {
  std::vector<Complex> pts;
  for (const auto& [i, j] : G.cells) {
    const Complex o = G.origin + Complex(i * G.h, j * G.h);
    pts.push_back(o);
    pts.push_back(o + Complex(G.h, 0));
    pts.push_back(o + Complex(0, G.h));
    pts.push_back(o + Complex(G.h, G.h));
  }
  return pts;
}

}  // namespace

double region_diameter(const PlanarRegion& R) {
  return std::visit(
      [](const auto& r) -> double {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, FinitePoints>) {
          if (r.points.empty()) throw DegenerateRegion("finite region: empty");
          return diameter_of(r.points);
        } else if constexpr (std::is_same_v<T, SimplePolygon>) {
          if (r.vertices.size() < 3) throw DegenerateRegion("polygon: need at least 3 vertices");
          return diameter_of(r.vertices);
        } else {
          if (r.cells.empty()) throw DegenerateRegion("grid region: no cells");
          return diameter_of(corner_cloud(r));
        }
      },
      R);
}

std::vector<Complex> sample_boundary(const PlanarRegion& R, int min_points) {
  if (const auto* fp = std::get_if<FinitePoints>(&R)) {
    if (fp->points.empty()) throw DegenerateRegion("finite region: empty");
    return fp->points;
  }
  std::vector<Segment> segs = std::visit(
      [](const auto& r) -> std::vector<Segment> {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, FinitePoints>)
          return {};
        else
          return boundary_segments(r);
      },
      R);
  double perim = 0.0;
  for (const Segment& s : segs) perim += s.length();
  if (perim <= 0.0) throw DegenerateRegion("region boundary has zero length");
  std::vector<Complex> pts;
  for (const Segment& s : segs) {
    const int k = std::max(1, static_cast<int>(std::ceil(s.length() / perim * min_points)));
    for (int t = 0; t < k; ++t)  // half-open parameterization: no duplicated vertices
      pts.push_back(s.a + (s.b - s.a) * (static_cast<double>(t) / k));
  }
  return pts;
}

std::vector<Complex> sample_interior(const PlanarRegion& R, int count, Rng& rng) {
  std::vector<Complex> out;
  out.reserve(count);
  if (const auto* fp = std::get_if<FinitePoints>(&R)) {
    if (fp->points.empty()) throw DegenerateRegion("finite region: empty");
    for (int i = 0; i < count; ++i)
      out.push_back(fp->points[rng.next_u64() % fp->points.size()]);
    return out;
  }
  if (const auto* poly = std::get_if<SimplePolygon>(&R)) {
    if (poly->vertices.size() < 3) throw DegenerateRegion("polygon: need at least 3 vertices");
    double xlo = poly->vertices[0].real(), xhi = xlo;
    double ylo = poly->vertices[0].imag(), yhi = ylo;
    for (const Complex& v : poly->vertices) {
      xlo = std::min(xlo, v.real());
      xhi = std::max(xhi, v.real());
      ylo = std::min(ylo, v.imag());
      yhi = std::max(yhi, v.imag());
    }
    int guard = 0;
    while (static_cast<int>(out.size()) < count) {
      const Complex q(rng.uniform(xlo, xhi), rng.uniform(ylo, yhi));
      if (point_in_polygon(q, *poly)) out.push_back(q);
      if (++guard > 100000 + 10000 * count)
        throw DegenerateRegion("polygon: interior sampling failed (degenerate area?)");
    }
    return out;
  }
  const auto& grid = std::get<GridRegion>(R);
  if (grid.cells.empty()) throw DegenerateRegion("grid region: no cells");
  for (int i = 0; i < count; ++i) {
    const auto& [ci, cj] = grid.cells[rng.next_u64() % grid.cells.size()];
    const Complex o = grid.origin + Complex(ci * grid.h, cj * grid.h);
    out.push_back(o + Complex(rng.uniform(0.0, grid.h), rng.uniform(0.0, grid.h)));
  }
  return out;
}

BoundarySumReport boundary_sum_property(const PlanarRegion& R, int samples, double tol,
                                        Rng& rng, int boundary_points) {
  if (samples < 1) throw ParameterError("boundary_sum_property: need at least one sample");
  if (!(tol > 0.0)) throw ParameterError("boundary_sum_property: tolerance must be positive");

  const double diam = region_diameter(R);
  const double accept = tol * diam;
  const std::vector<Complex> bnd = sample_boundary(R, boundary_points);
  if (bnd.empty()) throw DegenerateRegion("region has an empty boundary");
  const std::vector<Complex> z1s = sample_interior(R, samples, rng);
  const std::vector<Complex> z2s = sample_interior(R, samples, rng);

  const bool finite = std::holds_alternative<FinitePoints>(R);
  std::vector<Segment> segs;
  if (!finite)
    segs = std::visit(
        [](const auto& r) -> std::vector<Segment> {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, FinitePoints>)
            return {};
          else
            return boundary_segments(r);
        },
        R);

  auto project = [&](const Complex& q) {
    Complex best = bnd[0];
    double bd = std::numeric_limits<double>::infinity();
    for (const Segment& s : segs) {
      const Complex p = closest_on_segment(q, s);
      const double d = std::abs(p - q);
      if (d < bd) {
        bd = d;
        best = p;
      }
    }
    return best;
  };

  BoundarySumReport report;
  report.ok = true;
  for (int k = 0; k < samples; ++k) {
    const Complex s = z1s[k] + z2s[k];
    BoundaryPairCertificate cert;
    cert.z1 = z1s[k];
    cert.z2 = z2s[k];
    if (finite) {
      // members are their own boundary; scan pairs of samples
      double best = std::numeric_limits<double>::infinity();
      for (const Complex& b1 : bnd)
        for (const Complex& b2 : bnd) {
          const double e = std::abs(b1 + b2 - s);
          if (e < best) {
            best = e;
            cert.b1 = b1;
            cert.b2 = b2;
          }
        }
      cert.err = best;
    } else {
      // both curves are unions of line segments, so the crossing of the
      // boundary with the reflected boundary { s - b } is found exactly by
      // pairwise segment intersection (the reflection of [a, b] is
      // [s - a, s - b]).  a candidate x on the boundary is scored by snapping
      // its partner s - x back onto the boundary.
      cert.err = std::numeric_limits<double>::infinity();
      auto consider = [&](const Complex& x) {
        const Complex partner = project(s - x);
        const double e = std::abs(x + partner - s);
        if (e < cert.err) {
          cert.err = e;
          cert.b1 = x;
          cert.b2 = partner;
        }
      };
      auto cross2 = [](const Complex& a, const Complex& b) {
        return a.real() * b.imag() - a.imag() * b.real();
      };
      const double floor_err = 1e-9 * diam;
      for (const Segment& sa : segs) {
        if (cert.err <= floor_err) break;
        const Complex d1 = sa.b - sa.a;
        for (const Segment& sb : segs) {
          const Complex q0 = s - sb.a;
          const Complex d2 = (s - sb.b) - q0;
          const Complex w = q0 - sa.a;
          const double denom = cross2(d1, d2);
          if (std::abs(denom) > 1e-12 * std::abs(d1) * std::abs(d2)) {
            const double t = cross2(w, d2) / denom;
            const double u = cross2(w, d1) / denom;
            if (t >= -1e-9 && t <= 1.0 + 1e-9 && u >= -1e-9 && u <= 1.0 + 1e-9)
              consider(sa.a + std::clamp(t, 0.0, 1.0) * d1);
          } else if (std::abs(cross2(w, d1)) <=
                     1e-9 * std::abs(d1) * (std::abs(w) + std::abs(d1))) {
            // parallel and collinear: take the middle of the overlap, if any
            auto param = [&](const Complex& p) {
              return ((p - sa.a).real() * d1.real() + (p - sa.a).imag() * d1.imag()) /
                     std::norm(d1);
            };
            double t0 = param(q0), t1 = param(s - sb.b);
            if (t0 > t1) std::swap(t0, t1);
            const double lo = std::max(0.0, t0), hi = std::min(1.0, t1);
            if (lo <= hi) consider(sa.a + (0.5 * (lo + hi)) * d1);
          }
          if (cert.err <= floor_err) break;
        }
      }

      // numerically tangent contacts can slip through the exact scan; polish
      // with alternating projection from the most promising sampled starts
      // (each projection step cannot increase the error)
      if (cert.err > 1e-3 * accept) {
        std::vector<std::pair<double, Complex>> ranked;
        ranked.reserve(bnd.size());
        for (const Complex& b : bnd) {
          const Complex refl = s - b;
          ranked.emplace_back(std::abs(project(refl) - refl), b);
        }
        std::sort(ranked.begin(), ranked.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        const double spread = 0.05 * diam;
        std::vector<Complex> starts;
        for (const auto& [d, b] : ranked) {
          bool near = false;
          for (const Complex& s0 : starts) near = near || std::abs(s0 - b) < spread;
          if (!near) starts.push_back(b);
          if (starts.size() == 8) break;
        }
        for (const Complex& s0 : starts) {
          Complex b1 = s0;
          Complex b2 = project(s - s0);
          double prev = std::numeric_limits<double>::infinity();
          for (int it = 0; it < 64; ++it) {
            b1 = project(s - b2);
            b2 = project(s - b1);
            const double e = std::abs(b1 + b2 - s);
            if (e >= prev * (1.0 - 1e-3)) break;  // stalled in a local basin
            prev = e;
          }
          const double e = std::abs(b1 + b2 - s);
          if (e < cert.err) {
            cert.err = e;
            cert.b1 = b1;
            cert.b2 = b2;
          }
          if (cert.err <= 1e-3 * accept) break;
        }
      }
    }
    cert.ok = cert.err <= accept;
    report.ok = report.ok && cert.ok;
    report.certificates.push_back(cert);
  }
  return report;
}

}  // namespace orthlie

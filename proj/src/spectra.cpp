#include "orthlie/spectra.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace orthlie {

namespace {

struct Cluster {
  Complex centroid;
  int count;
};

// single linkage at radius tol, weighted centroids, re-merged until the
// representatives are pairwise separated by more than tol
std::vector<Cluster> cluster_values(const CVector& raw, double tol) {
  std::vector<Cluster> work;
  work.reserve(raw.size());
  for (Index i = 0; i < raw.size(); ++i) work.push_back({raw(i), 1});
  bool merged = true;
  while (merged && work.size() > 1) {
    merged = false;
    std::vector<int> parent(work.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int i) {
      return parent[i] == i ? i : parent[i] = find(parent[i]);
    };
    for (std::size_t i = 0; i < work.size(); ++i)
      for (std::size_t j = i + 1; j < work.size(); ++j)
        if (std::abs(work[i].centroid - work[j].centroid) <= tol) {
          const int a = find(static_cast<int>(i)), b = find(static_cast<int>(j));
          if (a != b) {
            parent[a] = b;
            merged = true;
          }
        }
    if (!merged) break;
    std::vector<Cluster> next;
    std::vector<int> slot(work.size(), -1);
    for (std::size_t i = 0; i < work.size(); ++i) {
      const int r = find(static_cast<int>(i));
      if (slot[r] < 0) {
        slot[r] = static_cast<int>(next.size());
        next.push_back({Complex(0, 0), 0});
      }
      Cluster& c = next[slot[r]];
      c.centroid += work[i].centroid * static_cast<double>(work[i].count);
      c.count += work[i].count;
    }
    for (Cluster& c : next) c.centroid /= static_cast<double>(c.count);
    work = std::move(next);
  }
  return work;
}

}  // namespace

std::vector<Complex> SpectrumSet::values() const {
  std::vector<Complex> v;
  v.reserve(points.size());
  for (const SpectrumPoint& p : points) v.push_back(p.value);
  return v;
}

PointSet SpectrumSet::point_set() const { return PointSet{values(), cluster_radius}; }

double SpectrumSet::max_abs() const {
  double m = 0.0;
  for (const SpectrumPoint& p : points) m = std::max(m, std::abs(p.value));
  return m;
}

SpectrumSet spectrum(const CMatrix& M, const ToleranceProfile& tol) {
  tol.validate();
  const EigResult eg = eig_full(M);
  double max_abs = 0.0;
  for (Index i = 0; i < eg.values.size(); ++i) max_abs = std::max(max_abs, std::abs(eg.values(i)));
  const double radius = tol.cluster_radius(max_abs);
  std::vector<Cluster> clusters = cluster_values(eg.values, radius);
  SpectrumSet out;
  out.cluster_radius = radius;
  for (const Cluster& c : clusters) out.points.push_back({c.centroid, c.count});
  std::sort(out.points.begin(), out.points.end(), [](const SpectrumPoint& a, const SpectrumPoint& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

bool check_symmetric_spectrum(const SpectrumSet& S) {
  std::vector<bool> used(S.points.size(), false);
  for (const SpectrumPoint& p : S.points) {
    bool matched = false;
    for (std::size_t j = 0; j < S.points.size(); ++j) {
      if (used[j]) continue;
      if (std::abs(S.points[j].value + p.value) <= S.cluster_radius &&
          S.points[j].multiplicity == p.multiplicity) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

bool check_symmetric_spectrum(const CMatrix& M, const ToleranceProfile& tol) {
  return check_symmetric_spectrum(spectrum(M, tol));
}

CMatrix riesz_idempotent(const CMatrix& M, Complex z, double r, const ToleranceProfile& tol) {
  tol.validate();
  if (M.rows() != M.cols() || M.rows() == 0)
    throw DimensionError("riesz_idempotent: matrix must be square");
  if (!(r > 0.0) || !std::isfinite(r))
    throw ParameterError("riesz_idempotent: radius must be positive");

  const SpectrumSet spec = spectrum(M, tol);
  const EigResult eg = eig_full(M);

  // separation: exactly one cluster inside, none straddling the circle
  int enclosed = 0;
  for (const SpectrumPoint& p : spec.points) {
    const double d = std::abs(p.value - z);
    if (std::abs(d - r) <= spec.cluster_radius)
      throw ContourTouchesSpectrum("riesz_idempotent: a cluster sits on the contour");
    if (d < r) ++enclosed;
  }
  if (enclosed != 1)
    throw ContourTouchesSpectrum(
        "riesz_idempotent: the disc must isolate exactly one cluster");
  for (Index i = 0; i < eg.values.size(); ++i) {
    const double d = std::abs(eg.values(i) - z);
    if (std::abs(d - r) <= tol.atol)
      throw ContourTouchesSpectrum("riesz_idempotent: an eigenvalue touches the contour");
  }

  const CMatrix E = riesz_quadrature(M, z, r, tol.contour_points, tol.atol);

  const double defect = operator_norm(E * E - E);
  const double en = operator_norm(E);
  if (defect > 1e-8 * (1.0 + en * en))
    throw NumericalError("riesz_idempotent: idempotency defect above contract");
  return E;
}

CMatrix riesz_quadrature(const CMatrix& M, Complex z, double r, int nodes,
                         double node_clearance) {
  if (M.rows() != M.cols() || M.rows() == 0)
    throw DimensionError("riesz_quadrature: matrix must be square");
  if (!(r > 0.0) || nodes < 1) throw ParameterError("riesz_quadrature: bad contour");
  const Index n = M.rows();
  const EigResult eg = eig_full(M);
  const double two_pi = 6.283185307179586476925287;
  CMatrix E = CMatrix::Zero(n, n);
  const CMatrix I = CMatrix::Identity(n, n);
  for (int k = 0; k < nodes; ++k) {
    const Complex w = std::polar(1.0, two_pi * k / nodes);
    const Complex zeta = z + r * w;
    for (Index i = 0; i < eg.values.size(); ++i)
      if (std::abs(zeta - eg.values(i)) <= node_clearance)
        throw SingularResolvent("riesz_quadrature: quadrature node meets the spectrum");
    Eigen::PartialPivLU<CMatrix> lu(zeta * I - M);
    E += (r / nodes) * w * lu.solve(I);
  }
  return E;
}

Index riesz_dim(const CMatrix& M, Complex z, const ToleranceProfile& tol) {
  const SpectrumSet spec = spectrum(M, tol);
  for (const SpectrumPoint& p : spec.points)
    if (std::abs(p.value - z) <= spec.cluster_radius) return p.multiplicity;
  return 0;
}

XiSet xi_set(const CMatrix& M, const ToleranceProfile& tol) {
  return xi_set(M, spectrum(M, tol), tol);
}

XiSet xi_set(const CMatrix& M, const SpectrumSet& S, const ToleranceProfile& tol) {
  tol.validate();
  const Index n = M.rows();
  if (M.rows() != M.cols()) throw DimensionError("xi_set: matrix must be square");
  const PointSet sp = S.point_set();
  XiSet out;
  out.tol = S.cluster_radius;
  const CMatrix I = CMatrix::Identity(n, n);
  for (const SpectrumPoint& p : S.points) {
    const CMatrix D = M - p.value * I;
    if (rank_tol(D * D, tol) != n - 1) continue;
    if (distinct_pair_sum(sp, 2.0 * p.value)) continue;
    out.values.push_back(p.value);
  }
  return out;
}

}  // namespace orthlie

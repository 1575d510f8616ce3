#include "orthlie/verify.hpp"

#include "orthlie/conjugation.hpp"
#include "orthlie/derivation.hpp"
#include "orthlie/generators.hpp"
#include "orthlie/ideals.hpp"
#include "orthlie/setgeom.hpp"
#include "orthlie/skewalg.hpp"
#include "orthlie/spectra.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>

namespace orthlie::verify {

namespace {

constexpr Complex kI{0.0, 1.0};

double rel(double x, double bound) {
  return bound > 0.0 ? x / bound : (x == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
}

std::vector<Complex> real_values(std::initializer_list<int> ks) {
  std::vector<Complex> v;
  for (int k : ks) v.push_back(Complex(k, 0));
  return v;
}

CVector random_unit(Rng& rng, Index n) {
  CVector v(n);
  for (Index i = 0; i < n; ++i) v(i) = rng.cnormal();
  return v / v.norm();
}

// random symmetric unitary: U = Q Q^T for haar-ish Q from a QR factorization
Conjugation random_conjugation(Index n, Rng& rng) {
  CMatrix A(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) A(i, j) = rng.cnormal();
  const Eigen::HouseholderQR<CMatrix> qr(A);
  const CMatrix Q = qr.householderQ() * CMatrix::Identity(n, n);
  return Conjugation::from_matrix(Q * Q.transpose());
}

// ---- 1 -------------------------------------------------------------------

PropertyResult known_blocks_dim7(const ToleranceProfile& tol) {
  PropertyResult r;
  r.name = "plane blocks i,2i,2i in dim 7: formula = brute force = {0,±1,±2,±3,±4}";
  r.population = 1;
  const CMatrix T = gen_block_sums(7, 0, {kI, 2.0 * kI, 2.0 * kI});
  const SkewElement S = SkewElement::make(T, Conjugation::canonical(7), tol);
  const PointSet formula = ad_spectrum_formula(S, tol);
  const SpectrumSet oracle = ad_spectrum_oracle(S, tol);
  const std::vector<Complex> expect = real_values({-4, -3, -2, -1, 0, 1, 2, 3, 4});
  const double h = std::max({hausdorff(formula.values, expect),
                             hausdorff(oracle.values(), expect),
                             hausdorff(formula.values, oracle.values())});
  r.max_residual = rel(h, 1e-8);
  r.pass = r.max_residual <= r.threshold;
  r.note = fmt::format("worst hausdorff {:.2e} (bound 1e-08)", h);
  return r;
}

// ---- 2 -------------------------------------------------------------------

PropertyResult single_block_dim3(const ToleranceProfile& tol) {
  PropertyResult r;
  r.name = "single plane block i in dim 3: formula = brute force = {-1,0,1}";
  r.population = 1;
  const CMatrix T = gen_block_sums(3, 0, {kI});
  const SkewElement S = SkewElement::make(T, Conjugation::canonical(3), tol);
  const PointSet formula = ad_spectrum_formula(S, tol);
  const SpectrumSet oracle = ad_spectrum_oracle(S, tol);
  const std::vector<Complex> expect = real_values({-1, 0, 1});
  double h = std::max(hausdorff(formula.values, expect), hausdorff(oracle.values(), expect));

  // the value 1 = 1 + 0 is carried by an explicit rank-two eigenvector, so
  // the spectrum genuinely exceeds {0}
  CVector e(3), f(3);
  e << 1.0, -kI, 0.0;
  e /= e.norm();
  f << 0.0, 0.0, 1.0;
  const CMatrix X = eig_pair_vector(S, Complex(1, 0), e, Complex(0, 0), f, tol);
  const double wres =
      operator_norm(T * X - X * T - X) / (operator_norm(T) * operator_norm(X));
  h = std::max(h, wres);

  r.max_residual = rel(h, 1e-8);
  r.pass = r.max_residual <= r.threshold;
  r.note = fmt::format(
      "distinct-value spectrum is {{-1,0,1}}, strictly larger than {{0}}; the +1 "
      "eigenvalue is witnessed by a rank-two eigenvector (residual {:.2e})", wres);
  return r;
}

// ---- 3 -------------------------------------------------------------------

PropertyResult formula_vs_oracle_population(const ToleranceProfile& base) {
  PropertyResult r;
  r.name = "formula vs brute force on 200 mixed instances (dims 2..8)";
  r.population = 200;
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const Index n = 2 + (i % 7);
    GenKind kind = static_cast<GenKind>(i % 4);
    if (kind == GenKind::Nilpotent && n < 3) kind = GenKind::Dense;
    ToleranceProfile tol = base;
    if (kind == GenKind::Nilpotent) tol.cluster_override = 1e-2;  // defective scatter
    const CMatrix T = generate(kind, n, 1000 + i);
    const SkewElement S = SkewElement::make(T, Conjugation::canonical(n), tol);
    const double h =
        hausdorff(ad_spectrum_formula(S, tol).values, ad_spectrum_oracle(S, tol).values());
    worst = std::max(worst, rel(h, 1e-6 * (1.0 + operator_norm(T))));
  }
  r.max_residual = worst;
  r.pass = worst <= r.threshold;
  r.note = "per-instance bound 1e-06 (1 + |T|); defective family clustered at 1e-02";
  return r;
}

// ---- 4 -------------------------------------------------------------------

PropertyResult truncated_blocks_dim6(const ToleranceProfile& tol) {
  PropertyResult r;
  r.name = "plane blocks i,2i,2i in dim 6: both spectra are {0,±1,±3,±4}, no ±2";
  r.population = 1;
  const CMatrix T = gen_block_sums(6, 0, {kI, 2.0 * kI, 2.0 * kI});
  const SkewElement S = SkewElement::make(T, Conjugation::canonical(6), tol);
  const PointSet formula = ad_spectrum_formula(S, tol);
  const SpectrumSet oracle = ad_spectrum_oracle(S, tol);
  const std::vector<Complex> expect = real_values({-4, -3, -1, 0, 1, 3, 4});
  double h = std::max({hausdorff(formula.values, expect), hausdorff(oracle.values(), expect),
                       hausdorff(formula.values, oracle.values())});
  // the doubles of the simple values ±1 must be absent on both sides
  double gap = std::numeric_limits<double>::infinity();
  for (const std::vector<Complex>& side : {formula.values, oracle.values()})
    for (const Complex& v : side)
      for (double two : {2.0, -2.0}) gap = std::min(gap, std::abs(v - two));
  if (gap < 0.5) h = std::max(h, 1.0);
  r.max_residual = rel(h, 1e-8);
  r.pass = r.max_residual <= r.threshold;
  r.note = fmt::format("worst hausdorff {:.2e}; distance of ±2 from both spectra {:.2f}",
                       h, gap);
  return r;
}

// ---- 5 -------------------------------------------------------------------

PropertyResult spectral_symmetry_population(const ToleranceProfile& tol) {
  PropertyResult r;
  r.name = "negation symmetry of spectra on 100 random instances (element and commutator)";
  r.population = 100;
  r.threshold = 0.0;
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    const Index n = 2 + (i % 8);
    const CMatrix T = gen_dense(n, 3000 + i);
    if (!check_symmetric_spectrum(T, tol)) ++failures;
    const SkewElement S = SkewElement::make(T, Conjugation::canonical(n), tol);
    if (!check_symmetric_spectrum(ad_matrix(S, tol).M, tol)) ++failures;
  }
  r.max_residual = failures;
  r.pass = failures == 0;
  r.note = fmt::format("{} symmetry failures", failures);
  return r;
}

// ---- 6 -------------------------------------------------------------------

PropertyResult trace_orthogonality_population(const ToleranceProfile&) {
  PropertyResult r;
  r.name = "trace orthogonality of the two symmetry classes on 100 random pairs";
  r.population = 100;
  Rng rng(606060);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Index n = 2 + (i % 8);
    const Conjugation C =
        (i % 2 == 0) ? Conjugation::canonical(n) : random_conjugation(n, rng);
    CMatrix X(n, n), Y(n, n);
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) {
        X(a, b) = rng.cnormal();
        Y(a, b) = rng.cnormal();
      }
    const CMatrix A = split(X, C).first;   // C A C = A^*
    const CMatrix B = split(Y, C).second;  // C B C = -B^*
    const double v = std::abs(trace_pair(A, B));
    worst = std::max(worst, rel(v, 1e-10 * A.norm() * B.norm()));
  }
  r.max_residual = worst;
  r.pass = worst <= r.threshold;
  r.note = "bound 1e-10 |A|_F |B|_F, half the pairs under a random conjugation";
  return r;
}

// ---- 7 -------------------------------------------------------------------

PropertyResult dual_witness_population(const ToleranceProfile& tol) {
  PropertyResult r;
  r.name = "trace-dual witness attains the norm with unit trace norm on 50 instances";
  r.population = 50;
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Index n = 2 + (i % 7);
    const CMatrix T = gen_dense(n, 5000 + i);
    const Conjugation C = Conjugation::canonical(n);
    const CMatrix X = dual_witness(T, C, tol);
    SkewElement::make(X, C, tol);  // the witness stays in the class
    const double tn = operator_norm(T);
    worst = std::max(worst, rel(std::abs(schatten_norm(X, 1.0) - 1.0), 1e-8));
    worst = std::max(worst, rel(std::abs(trace_pair(X, T) - tn), 1e-8 * (1.0 + tn)));
  }
  r.max_residual = worst;
  r.pass = worst <= r.threshold;
  r.note = "checks |X|_1 = 1 and tr(XT) = |T| to 1e-08";
  return r;
}

// ---- 8 -------------------------------------------------------------------

PropertyResult doubling_embedding_population(const ToleranceProfile& tol) {
  PropertyResult r;
  r.name = "doubling embedding: bracket homomorphism, isometry, membership (50 pairs)";
  r.population = 50;
  Rng rng(808080);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Index n = 2 + (i % 7);
    const bool plain = (i % 2 == 0);
    const Conjugation C = plain ? Conjugation::canonical(n) : random_conjugation(n, rng);
    CMatrix X = gen_dense(n, 7000 + 2 * i);
    CMatrix Y = gen_dense(n, 7001 + 2 * i);
    if (!plain) {
      const CMatrix B = fixed_basis(C, rng);
      X = B * X * B.adjoint();
      Y = B * Y * B.adjoint();
    }
    SkewElement::make(X, C, tol);
    SkewElement::make(Y, C, tol);
    const Conjugation D = double_block(C);
    const CMatrix pX = embed_double(X, C);
    const CMatrix pY = embed_double(Y, C);
    const double scale = 1.0 + X.norm() * Y.norm();
    worst = std::max(worst, rel(membership_residual(pX, D), 1e-10 * (1.0 + X.norm())));
    worst = std::max(
        worst, rel(operator_norm(embed_double(bracket(X, Y), C) - bracket(pX, pY)),
                   1e-10 * scale));
    worst = std::max(
        worst, rel(std::abs(operator_norm(pX) - operator_norm(X)), 1e-10 * (1.0 + X.norm())));
  }
  r.max_residual = worst;
  r.pass = worst <= r.threshold;
  r.note = "bound 1e-10 at natural scale; half the pairs under a random conjugation";
  return r;
}

// ---- 9 -------------------------------------------------------------------

PropertyResult riesz_population(const ToleranceProfile& tol) {
  PropertyResult r;
  r.name = "spectral idempotents: partition of identity, ranks, node-doubling decay (20)";
  r.population = 20;
  double worst = 0.0;
  double worst_decay = 0.0;
  int found = 0;
  std::uint64_t seed = 4000;
  while (found < 20) {
    ++seed;
    const Index n = 4 + (seed % 5);
    CMatrix T = gen_dense(n, seed);
    T *= 2.0 / operator_norm(T);
    const SpectrumSet spec = spectrum(T, tol);
    if (spec.points.size() < 2) continue;
    double min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < spec.points.size(); ++a)
      for (std::size_t b = a + 1; b < spec.points.size(); ++b)
        min_gap = std::min(min_gap, std::abs(spec.points[a].value - spec.points[b].value));
    if (min_gap < 0.3) continue;
    ++found;

    CMatrix sum = CMatrix::Zero(n, n);
    int total_mult = 0;
    std::size_t tightest = 0;
    double tightest_gap = std::numeric_limits<double>::infinity();
    std::vector<double> radii(spec.points.size());
    for (std::size_t a = 0; a < spec.points.size(); ++a) {
      double d = std::numeric_limits<double>::infinity();
      for (std::size_t b = 0; b < spec.points.size(); ++b)
        if (b != a) d = std::min(d, std::abs(spec.points[a].value - spec.points[b].value));
      radii[a] = 0.5 * d;
      if (d < tightest_gap) {
        tightest_gap = d;
        tightest = a;
      }
    }
    for (std::size_t a = 0; a < spec.points.size(); ++a) {
      const Complex z = spec.points[a].value;
      const CMatrix E = riesz_idempotent(T, z, radii[a], tol);
      sum += E;
      total_mult += spec.points[a].multiplicity;
      if (rank_tol(E, tol) != spec.points[a].multiplicity) worst = std::max(worst, 2.0);
      if (riesz_dim(T, z, tol) != spec.points[a].multiplicity) worst = std::max(worst, 2.0);
    }
    if (total_mult != n) worst = std::max(worst, 2.0);
    worst = std::max(
        worst, rel(operator_norm(sum - CMatrix::Identity(n, n)), 1e-7));

    // quadrature error decays geometrically in the node count: halving it
    // back from 16 to 8 nodes must cost at least a factor 10 in the
    // idempotency defect
    const Complex z = spec.points[tightest].value;
    const double rad = radii[tightest];
    const CMatrix E8 = riesz_quadrature(T, z, rad, 8, tol.atol);
    const CMatrix E16 = riesz_quadrature(T, z, rad, 16, tol.atol);
    const double d8 = operator_norm(E8 * E8 - E8);
    const double d16 = operator_norm(E16 * E16 - E16);
    const double decay = 10.0 * d16 / std::max(d8, 1e-300);
    worst_decay = std::max(worst_decay, decay);
    worst = std::max(worst, decay);
  }
  r.max_residual = worst;
  r.pass = worst <= r.threshold;
  r.note = fmt::format(
      "partition defect bound 1e-07; worst normalized doubling ratio {:.2e}", worst_decay);
  return r;
}

// ---- 10 ------------------------------------------------------------------

PropertyResult ideal_structure(const ToleranceProfile& tol) {
  PropertyResult r;
  r.name = "bracket closures: full class for dims 3,5,6,7; split pair in dim 4";
  r.population = 5;
  r.threshold = 1.0;
  double worst = 0.0;
  for (Index n : {3, 5, 6, 7}) {
    const std::vector<CMatrix> F = skew_basis(n);
    const IdealSubspace L = ideal_closure({F[0]}, tol);
    if (L.dim() != n * (n - 1) / 2 || !is_lie_ideal(L, tol)) worst = std::max(worst, 2.0);
  }
  {
    const Index n = 4;
    const std::vector<CMatrix> F = skew_basis(n);
    const CMatrix g = F[skew_basis_index(n, 0, 1)] + F[skew_basis_index(n, 2, 3)];
    const IdealSubspace L = ideal_closure({g}, tol);
    if (L.dim() != 3 || !is_lie_ideal(L, tol)) worst = std::max(worst, 2.0);
    const IdealSubspace Lc = trace_complement(L);
    if (Lc.dim() != 3 || !is_lie_ideal(Lc, tol)) worst = std::max(worst, 2.0);
    std::vector<CMatrix> comp_gens = Lc.basis_matrices();
    if (ideal_closure(comp_gens, tol).dim() != 3) worst = std::max(worst, 2.0);
    double cross = 0.0;
    for (const CMatrix& b : L.basis_matrices())
      for (const CMatrix& c : comp_gens) cross = std::max(cross, bracket(b, c).norm());
    worst = std::max(worst, rel(cross, 1e-10));
  }
  r.max_residual = worst;
  r.pass = worst <= r.threshold;
  r.note = "dim-4 split: two 3-dim complementary closures with vanishing cross brackets";
  return r;
}

// ---- 11 ------------------------------------------------------------------

PropertyResult boundary_sum_population(const ToleranceProfile&) {
  PropertyResult r;
  r.name = "interior pair sums realized on boundaries: 20 regions x 100 pairs";
  r.population = 20;
  Rng rng(111111);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    PlanarRegion region;
    if (k % 3 == 0) {
      const int nv = 6 + k;
      std::vector<double> angles(nv);
      double acc = 0.0;
      for (double& a : angles) {
        acc += 0.2 + rng.uniform();
        a = acc;
      }
      const Complex center(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
      const double scale = 0.5 + 2.0 * rng.uniform();
      SimplePolygon poly;
      for (double a : angles) {
        const double theta = 6.283185307179586 * a / (acc + 0.2 + rng.uniform());
        const double rad = scale * (0.6 + 0.8 * rng.uniform());
        poly.vertices.push_back(center + std::polar(rad, theta));
      }
      region = poly;
    } else if (k % 3 == 1) {
      GridRegion grid;
      grid.h = 0.3 + 0.7 * rng.uniform();
      grid.origin = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
      grid.cells.push_back({0, 0});
      const int target = 5 + (k % 12);
      while (static_cast<int>(grid.cells.size()) < target) {
        const auto& base = grid.cells[rng.next_u64() % grid.cells.size()];
        const int dir = static_cast<int>(rng.next_u64() % 4);
        const int di[] = {1, -1, 0, 0}, dj[] = {0, 0, 1, -1};
        const std::pair<int, int> cand{base.first + di[dir], base.second + dj[dir]};
        bool present = false;
        for (const auto& c : grid.cells) present = present || c == cand;
        if (!present) grid.cells.push_back(cand);
      }
      region = grid;
    } else {
      FinitePoints pts;
      const int np = 10 + k;
      for (int p = 0; p < np; ++p)
        pts.points.push_back(Complex(rng.normal(), rng.normal()));
      region = pts;
    }
    const BoundarySumReport rep = boundary_sum_property(region, 100, 1e-3, rng, 512);
    const double diam = region_diameter(region);
    for (const BoundaryPairCertificate& c : rep.certificates)
      worst = std::max(worst, rel(c.err, 1e-3 * diam));
  }
  r.max_residual = worst;
  r.pass = worst <= r.threshold;
  r.note = "polygons, grid unions, finite sets; acceptance 1e-03 x diameter";
  return r;
}

// ---- 12 ------------------------------------------------------------------

PropertyResult rank_two_norm_bounds(const ToleranceProfile&) {
  PropertyResult r;
  r.name = "rank-two element norm chain on 100 unit pairs, p in {1,2,3,inf}";
  r.population = 100;
  Rng rng(121212);
  double worst = 0.0;
  const double inf = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 100; ++i) {
    const Index n = 2 + (i % 8);
    const Conjugation C =
        (i % 2 == 0) ? Conjugation::canonical(n) : random_conjugation(n, rng);
    const CVector e = random_unit(rng, n);
    const CVector f = random_unit(rng, n);
    const CMatrix X = rank_two(e, f, C);
    const double lower = 1.0 - std::norm(inner(f, e));
    const double op = operator_norm(X);
    worst = std::max(worst, rel(std::max(0.0, lower - op), 1e-10));
    for (double p : {1.0, 2.0, 3.0, inf}) {
      const double sp = schatten_norm(X, p);
      worst = std::max(worst, rel(std::max(0.0, op - sp), 1e-10));
      worst = std::max(worst, rel(std::max(0.0, sp - 2.0), 1e-10));
    }
  }
  r.max_residual = worst;
  r.pass = worst <= r.threshold;
  r.note = "1 - |<f,e>|^2 <= |X| <= |X|_p <= 2, slack 1e-10";
  return r;
}

// ---- 13 ------------------------------------------------------------------

PropertyResult delta_block_spectra(const ToleranceProfile& tol) {
  PropertyResult r;
  r.name = "full-space commutator spectrum equals the union of its two blocks (50)";
  r.population = 50;
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Index n = 2 + (i % 6);
    const GenKind kind = (i % 5 == 4) ? GenKind::Repeated : GenKind::Dense;
    const CMatrix T = generate(kind, n, 9000 + i);
    const SkewElement S = SkewElement::make(T, Conjugation::canonical(n), tol);
    const DeltaBlocks blocks = delta_blocks(S, tol);
    const Index m = n * (n - 1) / 2;
    if (blocks.ad_block.rows() != m || blocks.sym_block.rows() != n * (n + 1) / 2 ||
        m + blocks.sym_block.rows() != n * n) {
      worst = std::max(worst, 2.0);
      continue;
    }
    const CMatrix I = CMatrix::Identity(n, n);
    const CMatrix full = kron(I, T) - kron(T.transpose(), I);
    const CVector full_eigs = eig_full(full).values;
    CVector block_eigs(n * n);
    block_eigs << eig_full(blocks.ad_block).values, eig_full(blocks.sym_block).values;

    // multiset match by greedy nearest pairing
    std::vector<bool> used(block_eigs.size(), false);
    double match = 0.0;
    for (Index a = 0; a < full_eigs.size(); ++a) {
      double best = std::numeric_limits<double>::infinity();
      Index arg = -1;
      for (Index b = 0; b < block_eigs.size(); ++b)
        if (!used[b] && std::abs(full_eigs(a) - block_eigs(b)) < best) {
          best = std::abs(full_eigs(a) - block_eigs(b));
          arg = b;
        }
      used[arg] = true;
      match = std::max(match, best);
    }
    worst = std::max(worst, rel(match, 1e-6 * (1.0 + operator_norm(T))));
  }
  r.max_residual = worst;
  r.pass = worst <= r.threshold;
  r.note = "greedy multiset matching, bound 1e-06 (1 + |T|)";
  return r;
}

using Criterion = PropertyResult (*)(const ToleranceProfile&);

const std::vector<std::pair<std::string, std::vector<Criterion>>>& suite_table() {
  static const std::vector<std::pair<std::string, std::vector<Criterion>>> table = {
      {"derivation",
       {known_blocks_dim7, single_block_dim3, formula_vs_oracle_population,
        truncated_blocks_dim6, spectral_symmetry_population, delta_block_spectra}},
      {"duality",
       {trace_orthogonality_population, dual_witness_population,
        doubling_embedding_population, rank_two_norm_bounds}},
      {"riesz", {riesz_population}},
      {"ideals", {ideal_structure}},
      {"geometry", {boundary_sum_population}},
  };
  return table;
}

}  // namespace

std::vector<PropertyResult> run_acceptance(const ToleranceProfile& tol) {
  tol.validate();
  const Criterion order[] = {
      known_blocks_dim7,           single_block_dim3,
      formula_vs_oracle_population, truncated_blocks_dim6,
      spectral_symmetry_population, trace_orthogonality_population,
      dual_witness_population,      doubling_embedding_population,
      riesz_population,             ideal_structure,
      boundary_sum_population,      rank_two_norm_bounds,
      delta_block_spectra,
  };
  std::vector<PropertyResult> out;
  for (Criterion c : order) out.push_back(c(tol));
  return out;
}

std::vector<PropertyResult> run_suite(const std::string& suite, const ToleranceProfile& tol) {
  tol.validate();
  if (suite == "all") return run_acceptance(tol);
  for (const auto& [name, fns] : suite_table())
    if (name == suite) {
      std::vector<PropertyResult> out;
      for (Criterion c : fns) out.push_back(c(tol));
      return out;
    }
  throw ParameterError("unknown suite: " + suite);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"all",    "derivation", "duality",
                                                 "riesz",  "ideals",     "geometry"};
  return names;
}

}  // namespace orthlie::verify

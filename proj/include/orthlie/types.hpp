#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace orthlie {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

// inner product, linear in the FIRST argument: <x,y> = sum_k x_k * conj(y_k).
// Eigen's dot() conjugates its object, so the arguments are swapped here.
inline Complex inner(const CVector& x, const CVector& y) { return y.dot(x); }

// ---- error taxonomy ------------------------------------------------------
// every failure mode named by the module contracts gets its own type so tests
// can assert on the exact condition that fired.

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error { using Error::Error; };
struct ParameterError : Error { using Error::Error; };
struct NumericalError : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };

struct NotUnitary : Error { using Error::Error; };
struct NotSymmetric : Error { using Error::Error; };

struct MembershipError : Error { using Error::Error; };
struct NotUnit : Error { using Error::Error; };
struct DegenerateZero : Error { using Error::Error; };
struct BlockShapeError : Error { using Error::Error; };

struct ContourTouchesSpectrum : Error { using Error::Error; };
struct SingularResolvent : Error { using Error::Error; };

struct NotEigenpair : Error { using Error::Error; };
struct ZeroConstruct : Error { using Error::Error; };
struct PreconditionFailed : Error { using Error::Error; };

struct DegenerateRegion : Error { using Error::Error; };

// ---- tolerance profile ---------------------------------------------------
// one knob set shared by every numerical predicate.  thresholds derive from
// (atol, rtol) by fixed rules; cluster_override pins the eigenvalue grouping
// radius when the caller knows the defectivity scale better than the rule.

struct ToleranceProfile {
  double atol = 1e-9;
  double rtol = 1e-7;
  int contour_points = 128;
  std::optional<double> cluster_override{};

  void validate() const {
    if (!(atol > 0.0) || !std::isfinite(atol) || !(rtol >= 0.0) || !std::isfinite(rtol))
      throw ParameterError("tolerance profile: atol must be positive and rtol nonnegative");
    if (contour_points < 8)
      throw ParameterError("tolerance profile: contour_points must be at least 8");
  }

  // grouping radius for eigenvalue clustering, from the largest modulus seen
  double cluster_radius(double max_abs) const {
    if (cluster_override) return *cluster_override;
    return std::max(atol, rtol * max_abs);
  }

  // singular values at or below this threshold count as zero
  double rank_threshold(double sigma_max, Index n) const {
    return std::max(atol, static_cast<double>(n) * kEps * sigma_max);
  }

  // admissible defect for membership in the skew class
  double member_tol(double op_norm) const { return std::max(atol, rtol * op_norm); }
};

// ---- deterministic random source -----------------------------------------
// splitmix64 core; uniform doubles take the top 53 bits.  the standard
// library's distributions are not pinned across platforms, this is.

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform on [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform on [lo, hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // standard normal via box-muller (pairs, one cached)
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 6.283185307179586476925287 * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  // complex standard normal: E|z|^2 = 1
  Complex cnormal() {
    const double re = normal();
    const double im = normal();
    return Complex(re, im) * 0.7071067811865475244;
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace orthlie

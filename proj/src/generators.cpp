#include "orthlie/generators.hpp"

#include "orthlie/skewalg.hpp"

namespace orthlie {

namespace {

// distinct low-byte stirs keep the four families decorrelated at equal seeds
Rng seeded(GenKind kind, Index n, std::uint64_t seed) {
  return Rng(seed * 0x100000001b3ULL + static_cast<std::uint64_t>(n) * 0x9e37ULL +
             static_cast<std::uint64_t>(kind));
}

}  // namespace

GenKind parse_gen_kind(const std::string& name) {
  if (name == "dense") return GenKind::Dense;
  if (name == "block-sums") return GenKind::BlockSums;
  if (name == "nilpotent") return GenKind::Nilpotent;
  if (name == "repeated") return GenKind::Repeated;
  throw FormatError("unknown generator kind: " + name);
}

std::string gen_kind_name(GenKind kind) {
  switch (kind) {
    case GenKind::Dense: return "dense";
    case GenKind::BlockSums: return "block-sums";
    case GenKind::Nilpotent: return "nilpotent";
    case GenKind::Repeated: return "repeated";
  }
  throw ParameterError("bad generator kind");
}

CMatrix gen_dense(Index n, std::uint64_t seed) {
  if (n < 1) throw DimensionError("gen_dense: need n >= 1");
  Rng rng = seeded(GenKind::Dense, n, seed);
  CMatrix A(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) A(i, j) = rng.cnormal();
  return A - A.transpose().eval();
}

CMatrix gen_block_sums(Index n, std::uint64_t seed, std::vector<Complex> coefficients) {
  if (n < 2) throw DimensionError("gen_block_sums: need n >= 2");
  const std::size_t blocks = static_cast<std::size_t>(n / 2);
  if (coefficients.size() > blocks)
    throw ParameterError("gen_block_sums: more coefficients than plane blocks");
  Rng rng = seeded(GenKind::BlockSums, n, seed);
  while (coefficients.size() < blocks) coefficients.push_back(rng.cnormal());
  CMatrix T = CMatrix::Zero(n, n);
  for (std::size_t k = 0; k < blocks; ++k) {
    const Index j = static_cast<Index>(2 * k);
    T(j, j + 1) = coefficients[k];
    T(j + 1, j) = -coefficients[k];
  }
  return T;
}

CMatrix gen_nilpotent(Index n, std::uint64_t seed) {
  if (n < 3) throw DimensionError("gen_nilpotent: need n >= 3");
  Rng rng = seeded(GenKind::Nilpotent, n, seed);
  // three real orthonormal directions p, q, r; u = p and v = q + i r give
  // v^T v = 0 and v^T u = 0, hence (u v^T - v u^T)^3 = 0
  Eigen::MatrixXd G(n, 3);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < 3; ++j) G(i, j) = rng.normal();
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(G);
  const Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(n, 3);
  const CVector u = Q.col(0).cast<Complex>();
  const CVector v = Q.col(1).cast<Complex>() + Complex(0, 1) * Q.col(2).cast<Complex>();
  return u * v.transpose() - v * u.transpose();
}

CMatrix gen_repeated(Index n, std::uint64_t seed) {
  if (n < 2) throw DimensionError("gen_repeated: need n >= 2");
  const std::size_t blocks = static_cast<std::size_t>(n / 2);
  Rng rng = seeded(GenKind::Repeated, n, seed);
  std::vector<Complex> coeff;
  while (coeff.size() < blocks) {
    const Complex a = rng.cnormal();
    coeff.push_back(a);
    if (coeff.size() < blocks) coeff.push_back(a);
  }
  CMatrix T = CMatrix::Zero(n, n);
  for (std::size_t k = 0; k < blocks; ++k) {
    const Index j = static_cast<Index>(2 * k);
    T(j, j + 1) = coeff[k];
    T(j + 1, j) = -coeff[k];
  }
  return T;
}

CMatrix generate(GenKind kind, Index n, std::uint64_t seed, std::vector<Complex> coefficients) {
  switch (kind) {
    case GenKind::Dense: return gen_dense(n, seed);
    case GenKind::BlockSums: return gen_block_sums(n, seed, std::move(coefficients));
    case GenKind::Nilpotent: return gen_nilpotent(n, seed);
    case GenKind::Repeated: return gen_repeated(n, seed);
  }
  throw ParameterError("bad generator kind");
}

}  // namespace orthlie

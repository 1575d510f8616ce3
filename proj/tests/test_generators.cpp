#include "orthlie/generators.hpp"

#include "orthlie/skewalg.hpp"

#include <doctest.h>

using namespace orthlie;

namespace {
const Complex kI{0.0, 1.0};
}

TEST_CASE("kind names round-trip and reject junk") {
  for (GenKind k : {GenKind::Dense, GenKind::BlockSums, GenKind::Nilpotent, GenKind::Repeated})
    CHECK(parse_gen_kind(gen_kind_name(k)) == k);
  CHECK_THROWS_AS(parse_gen_kind("weird"), FormatError);
}

TEST_CASE("equal seeds give equal instances, different seeds differ") {
  for (GenKind k : {GenKind::Dense, GenKind::BlockSums, GenKind::Nilpotent, GenKind::Repeated}) {
    const CMatrix A = generate(k, 5, 42);
    const CMatrix B = generate(k, 5, 42);
    CHECK((A - B).norm() == 0.0);  // bitwise reproducible
    CHECK((A - generate(k, 5, 43)).norm() > 0.0);
  }
}

TEST_CASE("every kind emits members of the entrywise class") {
  const Conjugation C5 = Conjugation::canonical(5);
  for (GenKind k : {GenKind::Dense, GenKind::BlockSums, GenKind::Nilpotent, GenKind::Repeated}) {
    const CMatrix T = generate(k, 5, 7);
    CHECK(T.norm() > 0.0);
    CHECK(membership_residual(T, C5) < 1e-13 * (1.0 + operator_norm(T)));
  }
}

TEST_CASE("block sums place the requested coefficients") {
  const CMatrix T = gen_block_sums(6, 0, {kI, 2.0 * kI, 2.0 * kI});
  CHECK(std::abs(T(0, 1) - kI) == 0.0);
  CHECK(std::abs(T(1, 0) + kI) == 0.0);
  CHECK(std::abs(T(2, 3) - 2.0 * kI) == 0.0);
  CHECK(std::abs(T(4, 5) - 2.0 * kI) == 0.0);
  CHECK(std::abs(T(0, 2)) == 0.0);
  CHECK(std::abs(T(1, 3)) == 0.0);

  // odd trailing dimension stays a zero row/column
  const CMatrix S = gen_block_sums(5, 0, {kI, kI});
  CHECK(S.row(4).norm() == 0.0);
  CHECK(S.col(4).norm() == 0.0);

  // unspecified coefficients are drawn deterministically
  const CMatrix R = gen_block_sums(4, 11);
  CHECK(std::abs(R(0, 1)) > 0.0);
  CHECK(std::abs(R(2, 3)) > 0.0);

  CHECK_THROWS_AS(gen_block_sums(4, 0, {kI, kI, kI}), ParameterError);
}

TEST_CASE("nilpotent instances cube to zero without vanishing") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    const CMatrix T = gen_nilpotent(5, seed);
    const double s = operator_norm(T);
    CHECK(s > 1e-6);
    CHECK(operator_norm(T * T * T) < 1e-12 * s * s * s);
    CHECK(operator_norm(T * T) > 1e-12 * s * s);  // index exactly 3
  }
  CHECK_THROWS_AS(gen_nilpotent(2, 1), DimensionError);
}

TEST_CASE("repeated kind duplicates coefficients") {
  const CMatrix T = gen_repeated(6, 9);
  CHECK(std::abs(T(0, 1) - T(2, 3)) < 1e-15);  // first value used twice
  CHECK(std::abs(T(0, 1)) > 0.0);
}

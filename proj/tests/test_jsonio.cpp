#include "orthlie/jsonio.hpp"

#include "orthlie/generators.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace orthlie;

namespace {
MatrixDocument sample_doc() {
  MatrixDocument doc;
  doc.n = 3;
  doc.T = gen_dense(3, 17);
  doc.seed = 17;
  doc.generator = "dense";
  return doc;
}
}  // namespace

TEST_CASE("documents round-trip bit-exactly") {
  const MatrixDocument doc = sample_doc();
  const MatrixDocument back = MatrixDocument::parse(doc.serialize());
  CHECK(back.n == 3);
  REQUIRE(back.T.rows() == 3);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) {
      CHECK(back.T(i, j).real() == doc.T(i, j).real());
      CHECK(back.T(i, j).imag() == doc.T(i, j).imag());
    }
  CHECK(back.seed == doc.seed);
  CHECK(back.generator == doc.generator);
  CHECK_FALSE(back.U.has_value());
  CHECK(back.digest() == doc.digest());

  // a conjugation block survives the trip too
  MatrixDocument with_u = sample_doc();
  CMatrix J = CMatrix::Zero(3, 3);
  for (Index i = 0; i < 3; ++i) J(i, 2 - i) = 1.0;
  with_u.U = J;
  const MatrixDocument back_u = MatrixDocument::parse(with_u.serialize());
  REQUIRE(back_u.U.has_value());
  CHECK((*back_u.U - J).norm() == 0.0);
  CHECK(back_u.digest() != doc.digest());
}

TEST_CASE("digest is stable and sensitive") {
  const MatrixDocument doc = sample_doc();
  CHECK(doc.digest() == sample_doc().digest());
  CHECK(doc.digest().size() == 16);
  MatrixDocument tweaked = sample_doc();
  // one ulp is enough: serialization is shortest-round-trip
  tweaked.T(0, 1) =
      Complex(std::nextafter(tweaked.T(0, 1).real(), 10.0), tweaked.T(0, 1).imag());
  CHECK(tweaked.digest() != doc.digest());
}

TEST_CASE("compact serialization stays on one line") {
  const std::string s = sample_doc().serialize(-1);
  CHECK(s.find('\n') == std::string::npos);
  CHECK(MatrixDocument::parse(s).digest() == sample_doc().digest());
}

TEST_CASE("malformed documents raise FormatError") {
  CHECK_THROWS_AS(MatrixDocument::parse("not json"), FormatError);
  CHECK_THROWS_AS(MatrixDocument::parse("{}"), FormatError);
  CHECK_THROWS_AS(MatrixDocument::parse(R"({"n": 2})"), FormatError);
  CHECK_THROWS_AS(MatrixDocument::parse(R"({"n": 2, "entries": [[0,0]]})"), FormatError);
  CHECK_THROWS_AS(MatrixDocument::parse(R"({"n": 2, "entries": [0, 0, 0, 0]})"), FormatError);
  CHECK_THROWS_AS(MatrixDocument::parse(R"({"n": -1, "entries": []})"), FormatError);
  CHECK_THROWS_AS(
      MatrixDocument::parse(
          R"({"n": 2, "entries": [[0,0],[1,0],[-1,0],[0,0]], "conjugation": [[1,0]]})"),
      FormatError);
}

TEST_CASE("load reads from a stream") {
  std::istringstream in(sample_doc().serialize());
  CHECK(MatrixDocument::load(in).digest() == sample_doc().digest());
}

TEST_CASE("analyze agrees with itself on honest instances") {
  MatrixDocument doc;
  doc.n = 4;
  doc.T = gen_dense(4, 23);
  const AnalysisReport rep = analyze_document(doc, ToleranceProfile{});
  CHECK(rep.agree);
  CHECK(rep.n == 4);
  CHECK(rep.digest == doc.digest());
  CHECK(rep.membership_residual < 1e-12);
  CHECK(rep.hausdorff_distance <= rep.agreement_tol);
  CHECK_FALSE(rep.spec.points.empty());
  CHECK_FALSE(rep.formula.empty());
  CHECK_FALSE(rep.oracle.points.empty());
  // serialized form carries the verdict
  CHECK(rep.serialize().find("AGREE") != std::string::npos);

  MatrixDocument bad;
  bad.n = 2;
  bad.T = CMatrix::Ones(2, 2);
  CHECK_THROWS_AS(analyze_document(bad, ToleranceProfile{}), MembershipError);
}

#include "orthlie/jsonio.hpp"

#include "orthlie/derivation.hpp"

#include <json.hpp>

#include <cstdio>
#include <istream>
#include <sstream>

namespace orthlie {

namespace {

using nlohmann::json;

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw FormatError("expected a complex number as [re, im]");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

json matrix_to_json(const CMatrix& M) {
  json rows = json::array();
  for (Index i = 0; i < M.rows(); ++i)
    for (Index j = 0; j < M.cols(); ++j) rows.push_back(complex_to_json(M(i, j)));
  return rows;
}

CMatrix matrix_from_json(const json& j, Index n, const char* what) {
  if (!j.is_array() || static_cast<Index>(j.size()) != n * n)
    throw FormatError(std::string(what) + ": expected n*n row-major entries");
  CMatrix M(n, n);
  Index k = 0;
  for (Index i = 0; i < n; ++i)
    for (Index c = 0; c < n; ++c) M(i, c) = complex_from_json(j[k++]);
  if (!M.allFinite()) throw FormatError(std::string(what) + ": non-finite entries");
  return M;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

json spectrum_to_json(const SpectrumSet& s) {
  json pts = json::array();
  for (const SpectrumPoint& p : s.points)
    pts.push_back(json{{"value", complex_to_json(p.value)}, {"multiplicity", p.multiplicity}});
  return json{{"points", pts}, {"cluster_radius", s.cluster_radius}};
}

json values_to_json(const std::vector<Complex>& v) {
  json a = json::array();
  for (const Complex& z : v) a.push_back(complex_to_json(z));
  return a;
}

}  // namespace

MatrixDocument MatrixDocument::parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("document: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    throw FormatError("document: object with n and entries required");
  if (!j["n"].is_number_integer() || j["n"].get<long long>() < 1)
    throw FormatError("document: n must be a positive integer");
  MatrixDocument doc;
  doc.n = j["n"].get<Index>();
  doc.T = matrix_from_json(j["entries"], doc.n, "entries");
  if (j.contains("conjugation") && !j["conjugation"].is_null())
    doc.U = matrix_from_json(j["conjugation"], doc.n, "conjugation");
  if (j.contains("seed") && !j["seed"].is_null()) {
    if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer())
      throw FormatError("document: seed must be an integer");
    doc.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("generator") && !j["generator"].is_null()) {
    if (!j["generator"].is_string()) throw FormatError("document: generator must be a string");
    doc.generator = j["generator"].get<std::string>();
  }
  return doc;
}

MatrixDocument MatrixDocument::load(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string MatrixDocument::serialize(int indent) const {
  json j;
  j["n"] = n;
  j["entries"] = matrix_to_json(T);
  if (U) j["conjugation"] = matrix_to_json(*U);
  if (seed) j["seed"] = *seed;
  if (generator) j["generator"] = *generator;
  return j.dump(indent);
}

std::string MatrixDocument::digest() const { return fnv1a_hex(serialize(-1)); }

std::string AnalysisReport::serialize(int indent) const {
  json j;
  j["digest"] = digest;
  j["n"] = n;
  json jt{{"atol", tol.atol}, {"rtol", tol.rtol}, {"contour_points", tol.contour_points}};
  if (tol.cluster_override) jt["cluster_radius"] = *tol.cluster_override;
  j["tolerances"] = jt;
  j["membership_residual"] = membership_residual;
  j["spectrum"] = spectrum_to_json(spec);
  j["xi"] = values_to_json(xi);
  j["formula_spectrum"] = values_to_json(formula);
  j["oracle_spectrum"] = spectrum_to_json(oracle);
  j["hausdorff_distance"] = hausdorff_distance;
  j["agreement_tol"] = agreement_tol;
  j["verdict"] = agree ? "AGREE" : "DISAGREE";
  return j.dump(indent);
}

AnalysisReport analyze_document(const MatrixDocument& doc, const ToleranceProfile& tol) {
  tol.validate();
  const Conjugation C =
      doc.U ? Conjugation::from_matrix(*doc.U, tol) : Conjugation::canonical(doc.n);
  AnalysisReport rep;
  rep.digest = doc.digest();
  rep.n = doc.n;
  rep.tol = tol;
  rep.membership_residual = membership_residual(doc.T, C);
  const SkewElement T = SkewElement::make(doc.T, C, tol);

  const AdMatrix ad = ad_matrix(T, tol);
  rep.spec = spectrum(ad.T, tol);
  rep.xi = xi_set(ad.T, rep.spec, tol).values;
  rep.formula = ad_spectrum_formula(T, tol).values;
  rep.oracle = spectrum(ad.M, tol);
  rep.hausdorff_distance = hausdorff(rep.formula, rep.oracle.values());
  rep.agreement_tol = 1e-6 * (1.0 + operator_norm(doc.T));
  rep.agree = rep.hausdorff_distance <= rep.agreement_tol;
  return rep;
}

}  // namespace orthlie

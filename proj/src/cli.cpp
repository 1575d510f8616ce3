#include "orthlie/cli.hpp"

#include "orthlie/generators.hpp"
#include "orthlie/jsonio.hpp"
#include "orthlie/verify.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>

namespace orthlie::cli {

namespace {

double parse_real_strict(const std::string& t) {
  if (t.empty()) throw FormatError("empty number in complex literal");
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw FormatError("bad number in complex literal: '" + t + "'");
  }
  if (used != t.size())
    throw FormatError("trailing characters in complex literal: '" + t + "'");
  return v;
}

double parse_imag_term(std::string t) {
  t.pop_back();  // the caller checked the trailing i
  if (t.empty() || t == "+") return 1.0;
  if (t == "-") return -1.0;
  return parse_real_strict(t);
}

}  // namespace

Complex parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw FormatError("empty complex literal");

  // last +/- that is not an exponent sign splits real and imaginary terms
  std::size_t split = std::string::npos;
  for (std::size_t k = 1; k < s.size(); ++k)
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') split = k;

  const bool has_i = s.back() == 'i' || s.back() == 'I';
  if (split == std::string::npos)
    return has_i ? Complex(0.0, parse_imag_term(s)) : Complex(parse_real_strict(s), 0.0);
  if (!has_i)
    throw FormatError("complex literal must end in an imaginary term: '" + text + "'");
  return Complex(parse_real_strict(s.substr(0, split)), parse_imag_term(s.substr(split)));
}

int run_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    const GenKind kind = parse_gen_kind(opt.kind);
    std::vector<Complex> coeffs;
    for (const std::string& t : opt.coeffs) coeffs.push_back(parse_complex(t));
    if (!coeffs.empty() && kind != GenKind::BlockSums)
      throw ParameterError("coefficients only apply to the block-sums generator");
    MatrixDocument doc;
    doc.n = opt.n;
    doc.T = generate(kind, opt.n, opt.seed, std::move(coeffs));
    doc.seed = opt.seed;
    doc.generator = gen_kind_name(kind);
    out << doc.serialize(opt.indent) << "\n";
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_analyze(const AnalyzeOptions& opt, std::istream& in, std::ostream& out,
                std::ostream& err) {
  try {
    opt.tol.validate();
    MatrixDocument doc;
    if (opt.input.empty() || opt.input == "-") {
      doc = MatrixDocument::load(in);
    } else {
      std::ifstream f(opt.input);
      if (!f) throw FormatError("cannot open input file: " + opt.input);
      doc = MatrixDocument::load(f);
    }
    const AnalysisReport rep = analyze_document(doc, opt.tol);
    out << rep.serialize() << "\n";
    err << fmt::format("instance {} (n = {}): hausdorff {:.3e}, verdict {}\n", rep.digest,
                       rep.n, rep.hausdorff_distance, rep.agree ? "AGREE" : "DISAGREE");
    return rep.agree ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    opt.tol.validate();
    const std::vector<verify::PropertyResult> results = verify::run_suite(opt.suite, opt.tol);
    const auto passed = static_cast<int>(
        std::count_if(results.begin(), results.end(),
                      [](const verify::PropertyResult& r) { return r.pass; }));
    if (opt.json) {
      nlohmann::json arr = nlohmann::json::array();
      for (const verify::PropertyResult& r : results)
        arr.push_back({{"name", r.name},
                       {"population", r.population},
                       {"max_residual", r.max_residual},
                       {"threshold", r.threshold},
                       {"pass", r.pass},
                       {"note", r.note}});
      nlohmann::json doc = {{"suite", opt.suite},
                            {"properties", arr},
                            {"passed", passed},
                            {"total", static_cast<int>(results.size())}};
      out << doc.dump(2) << "\n";
    } else {
      for (const verify::PropertyResult& r : results) {
        out << fmt::format("{}  {}\n", r.pass ? "PASS" : "FAIL", r.name);
        out << fmt::format("      population {:<4}  max residual {:.3e}  threshold {:g}\n",
                           r.population, r.max_residual, r.threshold);
        if (!r.note.empty()) out << fmt::format("      {}\n", r.note);
      }
      out << fmt::format("passed {}/{}\n", passed, results.size());
    }
    return passed == static_cast<int>(results.size()) ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace orthlie::cli

#pragma once

#include "orthlie/types.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace orthlie::cli {

// parse complex literals: "1.5", "i", "-i", "2i", "1+2i", "3-0.5i", "1e-3i"
// (a real term, an imaginary term, or real+imaginary in that order).
// throws FormatError.
Complex parse_complex(const std::string& text);

struct GenOptions {
  Index n = 4;
  std::string kind = "dense";
  std::uint64_t seed = 0;
  std::vector<std::string> coeffs;  // complex literals, block-sums only
  int indent = 2;
};

struct AnalyzeOptions {
  std::string input;  // file path; empty or "-" reads the stream
  ToleranceProfile tol;
};

struct VerifyOptions {
  std::string suite = "all";
  bool json = false;
  ToleranceProfile tol;
};

// exit codes: 0 ok, 2 bad input / parameters
int run_gen(const GenOptions& opt, std::ostream& out, std::ostream& err);

// exit codes: 0 spectra agree, 1 they disagree, 2 bad input
int run_analyze(const AnalyzeOptions& opt, std::istream& in, std::ostream& out,
                std::ostream& err);

// exit codes: 0 every property passed, 1 some failed, 2 bad parameters
int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace orthlie::cli

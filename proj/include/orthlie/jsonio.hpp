#pragma once

#include "orthlie/spectra.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace orthlie {

// on-disk form of one instance.  complex numbers are [re, im] pairs; entries
// are row-major; doubles round-trip bit-exactly (shortest decimal emission).
struct MatrixDocument {
  Index n = 0;
  CMatrix T;                        // n x n
  std::optional<CMatrix> U;         // conjugation matrix; absent = entrywise
  std::optional<std::uint64_t> seed;
  std::optional<std::string> generator;

  static MatrixDocument parse(const std::string& text);   // FormatError on bad input
  static MatrixDocument load(std::istream& in);
  std::string serialize(int indent = 2) const;
  std::string digest() const;  // fnv1a-64 over the canonical serialization
};

struct AnalysisReport {
  std::string digest;
  Index n = 0;
  ToleranceProfile tol;
  double membership_residual = 0.0;
  SpectrumSet spec;                 // spectrum of T
  std::vector<Complex> xi;
  std::vector<Complex> formula;     // predicted commutator spectrum (set)
  SpectrumSet oracle;               // brute-force commutator spectrum
  double hausdorff_distance = 0.0;
  double agreement_tol = 0.0;
  bool agree = false;

  std::string serialize(int indent = 2) const;
};

// full analysis pipeline on a validated document; throws MembershipError when
// T is not in the class of its conjugation
AnalysisReport analyze_document(const MatrixDocument& doc, const ToleranceProfile& tol);

}  // namespace orthlie

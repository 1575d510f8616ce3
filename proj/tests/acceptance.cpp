// runs every gate property once and prints one verdict line per property.
// exit code 0 iff all pass.
#include "orthlie/verify.hpp"

#include <fmt/format.h>

int main() {
  const std::vector<orthlie::verify::PropertyResult> results =
      orthlie::verify::run_acceptance();
  int failed = 0;
  fmt::print("acceptance gate: {} properties\n\n", results.size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    const orthlie::verify::PropertyResult& r = results[i];
    fmt::print("[{:>2}] {}  {}\n", i + 1, r.pass ? "PASS" : "FAIL", r.name);
    fmt::print("       population {:<5} max residual {:.3e}  threshold {:g}\n",
               r.population, r.max_residual, r.threshold);
    if (!r.note.empty()) fmt::print("       {}\n", r.note);
    if (!r.pass) ++failed;
  }
  fmt::print("\n{} of {} passed\n", results.size() - failed, results.size());
  return failed == 0 ? 0 : 1;
}

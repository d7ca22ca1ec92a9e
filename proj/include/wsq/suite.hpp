#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace wsq {

struct CheckResult {
  std::string name;
  int passed = 0;
  int total = 0;
  std::vector<std::string> failures;  // first few counterexamples
  bool ok() const { return passed == total; }
};

/// Oracle-versus-formula battery. "small" covers:
///   minor pairs for (k,m) = (2,2) and the 1x1 / 2x2 pairs for (2,3),
///   Pluecker exponents for k = 2, n = 4,5,
///   quantum Pluecker relations and short Pluecker identities for k = 2, n = 4,5,
///   the Stieffel-Pluecker embedding for every minor with k = m = 2.
/// Throws PreconditionError for an unknown suite name.
std::vector<CheckResult> run_oracle_suite(std::string_view suite);

}  // namespace wsq

// Acceptance criteria AC1-AC9: one PASS/FAIL line each, non-zero exit on any failure.

#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "cylkit/verify.hpp"

int main() {
  const std::vector<std::pair<std::string, std::string>> criteria{
      {"AC1", "golden"},       {"AC2", "intermediates"}, {"AC3", "oracle"},
      {"AC4", "positivity"},   {"AC5", "shift"},         {"AC6", "dual-pieri"},
      {"AC7", "nilcoxeter"},   {"AC8", "grassmannianize"}, {"AC9", "bijection"}};
  bool all = true;
  for (const auto& [id, suite] : criteria) {
    const auto r = cylkit::run_suite(suite);
    all = all && r.passed;
    std::cout << id << " " << (r.passed ? "PASS" : "FAIL") << " " << suite << " cases=" << r.cases
              << " ms=" << r.millis << std::endl;
    for (const auto& c : r.counterexamples) std::cout << "    " << c << std::endl;
  }
  return all ? 0 : 1;
}

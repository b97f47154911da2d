// Runs every acceptance criterion at its stated tolerance and prints one
// PASS/FAIL line per criterion. Exit status is nonzero if any fails.

#include <cstdio>
#include <exception>

#include "lieeq/error.hpp"
#include "lieeq/selftest.hpp"

int main() {
  int failures = 0;
  for (int id = 1; id <= lieeq::kCriterionCount; ++id) {
    lieeq::CriterionResult r;
    try {
      r = lieeq::run_criterion(id);
    } catch (const std::exception& e) {
      r.id = id;
      r.name = "criterion";
      r.detail = std::string("unexpected exception: ") + e.what();
    }
    std::printf("%s\n", lieeq::format_result(r).c_str());
    std::fflush(stdout);
    if (!r.passed) ++failures;
  }
  std::printf("%d/%d criteria passed\n", lieeq::kCriterionCount - failures, lieeq::kCriterionCount);
  return failures == 0 ? 0 : 1;
}

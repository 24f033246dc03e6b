// Acceptance suite: runs the full verification table, one numbered pass/fail
// line per criterion, and exits nonzero when anything fails.  This is the
// same table behind `tropcount verify --preset desk`.

#include <cstdio>

#include "tropcount/verify.hpp"

int main() {
  tropcount::Verifier verifier(/*workers=*/0, /*small_only=*/false);
  auto results = verifier.run();
  bool all = true;
  int idx = 0;
  for (const auto& r : results) {
    ++idx;
    std::printf("%s  criterion %2d: %-42s  %7.2fs  %s\n", r.passed ? "PASS" : "FAIL", idx,
                r.name.c_str(), r.seconds, r.detail.c_str());
    all = all && r.passed;
  }
  std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILURES present");
  return all ? 0 : 1;
}

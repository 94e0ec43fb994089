// Acceptance suite: runs every named claim check and prints one line per
// criterion. Exit status 0 iff all pass.

#include <cstdio>

#include "dqsim/checks.hpp"

int main() {
  const auto suite = dqsim::checks::run_paper_checks();
  for (const auto& c : suite.checks) {
    std::printf("%s %s\n", c.pass ? "[PASS]" : "[FAIL]", c.name.c_str());
    if (!c.pass)
      std::printf("       expected: %s\n       observed: %s\n", c.expected.c_str(),
                  c.observed.c_str());
  }
  std::printf("%zu checks, %s\n", suite.checks.size(),
              suite.all_pass() ? "all passed" : "FAILURES PRESENT");
  return suite.all_pass() ? 0 : 1;
}

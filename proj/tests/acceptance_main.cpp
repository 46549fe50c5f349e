// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "oneshot/papersuite.hpp"

int main(int argc, char** argv) {
  int threads = 2;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc) threads = std::atoi(argv[++i]);
  }
  oneshot::papersuite::SuiteResult suite = oneshot::papersuite::run_all(threads);
  for (const auto& c : suite.criteria) {
    std::printf("[%s] criterion %d: %s (%.2f s)\n", c.pass ? "PASS" : "FAIL", c.id,
                c.name.c_str(), c.seconds);
    if (!c.pass) std::printf("        %s\n", c.detail.c_str());
  }
  std::printf("%s\n", suite.all_pass() ? "ACCEPTANCE: ALL CRITERIA PASS"
                                       : "ACCEPTANCE: FAILURES PRESENT");
  return suite.all_pass() ? 0 : 1;
}

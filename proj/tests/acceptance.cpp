// Acceptance gate: runs the full verification suite and prints one PASS/FAIL
// line per criterion.  Exit status is nonzero if any checked criterion fails.
// Criterion 10 (the long line-oracle run) only executes with --extended.

#include <cstring>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "grmw/spectrum.hpp"

namespace {

const char* kCriteria[11] = {
    "spectrum R_3(2,2): nonzero weights start 3,4,5",
    "spectrum R_3(2,3): nonzero weights start 9,12,15",
    "spectrum R_4(3,2): nonzero weights start 4,6,7",
    "spectrum R_5(3,2): nonzero weights start 10,12,13",
    "arrangement top-3 grid vs closed forms (q<=17)",
    "constructor witnesses meet claimed weights",
    "line oracle q=9,b=4: third union size 32 (complement 49)",
    "plane oracle q=7: third union size 127 (complement 216)",
    "quadratic classifier matches direct weight",
    "line oracle q=13,b=5: third union size 59 (complement 110)",
    "property suites (axioms, invariance, sharding, cross-module)",
};

}  // namespace

int main(int argc, char** argv) {
  bool extended = false;
  for (int i = 1; i < argc; ++i)
    if (!std::strcmp(argv[i], "--extended")) extended = true;

  unsigned hw = std::thread::hardware_concurrency();
  int threads = hw ? (int)hw : 4;

  grmw::Report rep;
  try {
    rep = grmw::run_verification_suite("all", extended, threads);
  } catch (const std::exception& e) {
    std::cout << "FATAL: suite aborted: " << e.what() << "\n";
    return 1;
  }

  bool seen[11] = {};
  bool ok[11];
  std::fill(std::begin(ok), std::end(ok), true);
  std::vector<std::string> failures;
  for (const auto& c : rep.claims) {
    int idx = -1;
    if (c.id.rfind("c", 0) == 0) idx = std::atoi(c.id.c_str() + 1) - 1;
    if (idx >= 0 && idx < 11) {
      seen[idx] = true;
      ok[idx] = ok[idx] && c.pass;
    }
    if (!c.pass)
      failures.push_back(c.id + " expected " + c.expected + " measured " +
                         c.measured);
  }

  int bad = 0;
  for (int i = 0; i < 11; ++i) {
    std::cout << "criterion " << (i + 1) << ": ";
    if (!seen[i]) {
      if (i == 9 && !extended) {
        std::cout << "SKIP (run with --extended) - " << kCriteria[i] << "\n";
        continue;
      }
      std::cout << "FAIL (no claims ran) - " << kCriteria[i] << "\n";
      ++bad;
      continue;
    }
    std::cout << (ok[i] ? "PASS" : "FAIL") << " - " << kCriteria[i] << "\n";
    if (!ok[i]) ++bad;
  }
  for (const auto& f : failures) std::cout << "  mismatch: " << f << "\n";
  if (!bad && !failures.empty()) ++bad;  // auxiliary oracle claims also gate
  std::cout << (bad ? "ACCEPTANCE: FAIL" : "ACCEPTANCE: PASS") << " ("
            << rep.elapsed_ms << " ms)\n";
  return bad ? 1 : 0;
}

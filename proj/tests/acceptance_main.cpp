// Acceptance suite: runs every registered verification check and prints one
// line per criterion. Exit status 0 iff nothing failed (inconclusive checks
// do not fail the run, but none are expected here).

#include "flopkit/verify.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  unsigned long seed = 0;
  if (argc > 1) seed = std::strtoul(argv[1], nullptr, 10);
  flopkit::RunReport rep = flopkit::verify_all(seed);
  for (const auto& c : rep.checks) {
    const char* s = c.status == flopkit::CheckStatus::Pass
                        ? "PASS"
                        : (c.status == flopkit::CheckStatus::Fail ? "FAIL" : "INCONCLUSIVE");
    std::cout << s << "  " << c.name << " -- " << c.anchor;
    if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
    std::cout << "\n";
  }
  std::cout << (rep.all_pass() ? "acceptance: all criteria pass" : "acceptance: FAILURES present")
            << "\n";
  return rep.all_pass() ? 0 : 1;
}

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <iostream>

#include "reesmod/groebner.hpp"

// Runs the suite, then fails if any basis computed during it missed the
// S-polynomial self-check.
int main(int argc, char** argv) {
  doctest::Context ctx(argc, argv);
  int code = ctx.run();
  if (ctx.shouldExit()) return code;
  reesmod::GroebnerAudit audit = reesmod::groebner_audit();
  std::cout << "groebner audit: " << audit.verified << " verified, " << audit.failed << " failed\n";
  if (audit.failed != 0) return 1;
  return code;
}

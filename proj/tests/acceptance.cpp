// Acceptance suite: one pass/fail line per criterion; exit code reflects
// blocking failures only.

#include <cstdio>

#include "bifix/verify.hpp"

int main() {
  auto results = bifix::run_acceptance();
  bool ok = true;
  for (const auto& r : results) {
    std::printf("%s criterion %2d: %s (%.2fs)%s%s\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds, r.detail.empty() ? "" : " -- ", r.detail.c_str());
    if (!r.pass && r.blocking) ok = false;
  }
  return ok ? 0 : 1;
}

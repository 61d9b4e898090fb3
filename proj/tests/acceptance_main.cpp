#include <cstdio>

#include "paratrace/acceptance.hpp"

int main() {
  bool ok = true;
  for (const auto& r : paratrace::run_acceptance(0)) {
    std::printf("%s  %s — %s (%.2fs)\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.c_str(), r.seconds);
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}

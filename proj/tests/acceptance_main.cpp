// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include <cstdio>

#include "latpack/acceptance.hpp"

int main() {
  const auto results = latpack::acceptance::run();
  int failed = 0;
  for (const auto& r : results) {
    std::printf("%s  %2d  %-45s %10.1f ms", r.pass() ? "PASS" : "FAIL", r.id, r.name.c_str(), r.elapsed_ms);
    if (r.time_limit_ms > 0) std::printf(" (limit %.0f ms)", r.time_limit_ms);
    std::printf("\n");
    if (!r.pass()) {
      ++failed;
      std::printf("      %s\n", r.values.dump().c_str());
    }
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
  return failed == 0 ? 0 : 1;
}

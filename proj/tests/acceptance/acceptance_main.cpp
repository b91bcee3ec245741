// Runs the ten acceptance criteria and prints one line per criterion.
// Exit status is non-zero if any criterion fails or overruns its budget.

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>

#include "acd/verify.hpp"

int main() {
  int failed = 0;
  for (const acd::verify::AcceptanceCheck& check : acd::verify::acceptance_checks()) {
    acd::verify::CheckResult r;
    try {
      const auto t0 = std::chrono::steady_clock::now();
      r = check.run();
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    } catch (const std::exception& e) {
      r.id = check.id;
      r.title = check.title;
      r.passed = false;
      r.detail = std::string("threw: ") + e.what();
    }
    r.budget_seconds = check.budget_seconds;
    const char* status = r.ok() ? "PASS" : "FAIL";
    std::printf("%s %-4s %-52s %7.2fs / %gs  %s%s\n", status, r.id.c_str(), r.title.c_str(),
                r.seconds, r.budget_seconds, r.detail.c_str(),
                r.passed && !r.within_budget() ? " [over runtime budget]" : "");
    std::fflush(stdout);
    if (!r.ok()) ++failed;
  }
  std::printf("%d of 10 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}

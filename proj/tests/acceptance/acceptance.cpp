// Runs the full verification suite and prints one line per acceptance criterion.
#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "cjp/verify.hpp"

int main() {
  cjp::verify::VerifyOptions o;
  o.level = cjp::verify::Level::Full;
  if (const char* t = std::getenv("CJP_THREADS")) o.threads = std::max(1, std::atoi(t));
  int failed = 0;
  o.on_result = [&](const cjp::verify::CheckResult& r) {
    if (!r.pass) ++failed;
    std::cout << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.name << " [" << std::fixed
              << std::setprecision(1) << r.seconds << " s] " << r.detail << std::endl;
  };
  cjp::verify::run_checks(o);
  std::cout << (failed ? "acceptance: FAILED " : "acceptance: all passed") << (failed ? std::to_string(failed) : "")
            << std::endl;
  return failed ? 1 : 0;
}

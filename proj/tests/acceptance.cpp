#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "girthlab/claims.hpp"

// Runs the acceptance checks, one pass/fail line per criterion.
// With arguments, runs only the named criteria.
int main(int argc, char** argv) {
  using clock = std::chrono::steady_clock;
  std::vector<std::string> ids;
  for (int i = 1; i < argc; ++i) ids.emplace_back(argv[i]);
  if (ids.empty()) ids = girthlab::claim_ids();

  bool all_ok = true;
  for (const std::string& id : ids) {
    auto t0 = clock::now();
    bool ok = false;
    std::vector<std::string> detail;
    try {
      girthlab::ClaimResult r = girthlab::run_claim(id);
      ok = r.pass;
      if (!ok) detail = r.lines;
    } catch (const std::exception& e) {
      detail.push_back(std::string("exception: ") + e.what());
    }
    double secs =
        std::chrono::duration<double>(clock::now() - t0).count();
    std::printf("[%s] %s (%.1fs)\n", ok ? "PASS" : "FAIL", id.c_str(), secs);
    if (!ok)
      for (const std::string& line : detail)
        std::printf("    %s\n", line.c_str());
    std::fflush(stdout);
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}

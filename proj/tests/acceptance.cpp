// Runs every acceptance criterion and prints one verdict line per criterion.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "degseq/error.hpp"
#include "degseq/verify.hpp"

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  int failed = 0;
  for (int id = 1; id <= degseq::kCriterionCount; ++id) {
    if (only && id != only) continue;
    degseq::CriterionReport r;
    try {
      r = degseq::run_criterion(id);
    } catch (const degseq::Error& e) {
      r.id = id;
      r.name = "criterion " + std::to_string(id);
      r.detail = std::string("aborted: ") + e.what();
    }
    std::printf("[%s] %2d %-48s checked=%zu failures=%zu %.1fs  %s\n", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.checked, r.failures, r.seconds, r.detail.c_str());
    for (const auto& s : r.failure_samples) std::printf("       %s\n", s.c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
  }
  return failed == 0 ? 0 : 1;
}

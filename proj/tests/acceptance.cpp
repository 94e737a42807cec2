// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <cstdio>
#include <string>
#include <vector>

#include "brittle/verify.hpp"

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> suites;
};

}  // namespace

int main() {
  using namespace brittle;
  const std::vector<Criterion> criteria = {
      {1, "Figure 3 regression (kappa 2->3, nu 1->2)", {"figure3"}},
      {2, "K2,n family, n = 3..8", {"k2n-family"}},
      {3, "hemmed sequence G_1..G_4: e = 1, eta >= l+1", {"prop-example"}},
      {4, "eta for K4-free: K4 vs subdivided K4", {"subdivided-k4"}},
      {5, "Figure 4 regression (e increases under contraction)", {"figure4"}},
      {6, "trap classification for K3, D, K2,3", {"trap-classification"}},
      {7, "oracle equivalence on connected graphs <= 6 vertices", {"oracle-equivalence"}},
      {8, "basic inequalities and topological-minor monotonicity", {"observation-basic", "topminor-monotonicity"}},
      {9, "fan lower bounds, l = 1..3", {"fan-lower-bounds"}},
  };

  VerifyOptions opt;
  bool all_ok = true;
  for (const auto& c : criteria) {
    bool ok = true;
    double ms = 0.0;
    long long cases = 0;
    std::vector<std::string> failures;
    try {
      for (const auto& s : c.suites) {
        CheckResult r = run_suite(s, opt);
        ok = ok && r.passed;
        ms += r.elapsed_ms;
        cases += r.cases;
        failures.insert(failures.end(), r.failures.begin(), r.failures.end());
      }
    } catch (const std::exception& e) {
      ok = false;
      failures.push_back(std::string("exception: ") + e.what());
    }
    std::printf("criterion %d: %s  %s  (%lld cases, %.1f s)\n", c.number, ok ? "PASS" : "FAIL", c.title.c_str(),
                cases, ms / 1000.0);
    for (const auto& f : failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
    all_ok = all_ok && ok;
  }
  std::printf("%s\n", all_ok ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED");
  return all_ok ? 0 : 1;
}

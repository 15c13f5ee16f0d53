// Acceptance gate. One line per criterion; a criterion passes only if its
// check passes and finishes inside the pinned budget. Exact tolerances live
// in the checks themselves (everything is integer or rational equality).

#include <iostream>
#include <string>

#include "gandg/verify.hpp"

int main(int argc, char** argv) {
  gandg::VerifyOptions opt;
  opt.max_rank = 8;
  if (argc > 1) opt.fixtures_dir = argv[1];

  struct Criterion {
    const char* check;
    long long budget_ms;
  };
  // Budgets: classification table 10s; witness exactness 30s; E6 incidence
  // suite 5s; Gosset hulls 60s; hull oracle equivalence 120s; lemma
  // properties 30s; solver-vs-oracle 10s; negative control 60s.
  const Criterion criteria[] = {
      {"classification", 10'000}, {"witnesses", 30'000}, {"e6", 5'000},
      {"hulls", 60'000},          {"hull-oracle", 120'000}, {"lemmas", 30'000},
      {"pm-one", 10'000},         {"negative-control", 60'000},
  };

  bool all = true;
  int idx = 0;
  for (const auto& c : criteria) {
    ++idx;
    gandg::VerifyOptions one = opt;
    one.only = c.check;
    auto results = gandg::run_checks(one);
    const auto& r = results.at(0);
    bool in_budget = r.millis <= c.budget_ms;
    bool pass = r.pass && in_budget;
    all = all && pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion-" << idx << " " << r.name << " ("
              << r.millis / 1000 << "." << (r.millis % 1000) / 100 << "s, budget "
              << c.budget_ms / 1000 << "s)";
    if (!in_budget) std::cout << " [over budget]";
    std::cout << "\n";
    if (!r.pass)
      for (const auto& line : r.lines)
        if (line.rfind("FAIL", 0) == 0 || line.rfind("exception", 0) == 0)
          std::cout << "    " << line << "\n";
  }
  std::cout << (all ? "acceptance: all criteria pass" : "acceptance: FAILURES above") << "\n";
  return all ? 0 : 1;
}

// Times the parallel kernels against their serial reference implementations.
// Outputs are asserted equal first; a bench that compares different answers
// times nothing of interest.

#include <omp.h>

#include <chrono>
#include <iostream>
#include <string>

#include "gandg/obstruction.hpp"
#include "gandg/oracles.hpp"

using namespace gandg;

namespace {

template <class F>
long long time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
      .count();
}

void row(const std::string& name, long long serial_ms, long long parallel_ms) {
  std::string n = name;
  while (n.size() < 24) n += ' ';
  std::cout << n << "serial " << serial_ms << " ms    parallel " << parallel_ms << " ms\n";
}

}  // namespace

int main() {
  std::cout << "threads available: " << omp_get_max_threads() << "\n\n";

  auto ws6 = weight_system(TypeLabel::E, 6, {1, 0, 0, 0, 0, 0});
  auto ws7 = weight_system(TypeLabel::E, 7, {0, 0, 0, 0, 0, 0, 1});
  auto g = e6_incidence(ws6);

  {
    E6Certificate a, b;
    long long s = time_ms([&] { a = e6_case_checks_serial(g); });
    long long p = time_ms([&] { b = e6_case_checks(g); });
    if (a.case_counts != b.case_counts || a.verified != b.verified) {
      std::cerr << "e6 serial/parallel disagree\n";
      return 1;
    }
    row("e6 triples (2925)", s, p);
  }
  {
    Polytope a, b;
    long long s = time_ms([&] { a = hull_facets_serial(ws6.weights); });
    long long p = time_ms([&] { b = hull_facets(ws6.weights); });
    if (a.facets.size() != b.facets.size()) {
      std::cerr << "2_21 hull serial/parallel disagree\n";
      return 1;
    }
    row("hull 2_21 (27 pts)", s, p);
  }
  {
    Polytope a, b;
    long long s = time_ms([&] { a = hull_facets_serial(ws7.weights); });
    long long p = time_ms([&] { b = hull_facets(ws7.weights); });
    if (a.facets.size() != b.facets.size()) {
      std::cerr << "3_21 hull serial/parallel disagree\n";
      return 1;
    }
    row("hull 3_21 (56 pts)", s, p);
  }
  {
    Polytope a, b;
    long long s = time_ms([&] { a = hull_facets_bruteforce_serial(ws6.weights); });
    long long p = time_ms([&] { b = hull_facets_bruteforce(ws6.weights); });
    if (a.facets.size() != b.facets.size()) {
      std::cerr << "2_21 oracle serial/parallel disagree\n";
      return 1;
    }
    row("hull oracle 2_21", s, p);
  }
  {
    auto ws = weight_system(TypeLabel::B, 4, {0, 0, 0, 1});
    std::vector<std::vector<int>> a, b;
    long long s = time_ms([&] { a = pm_one_patterns_serial(ws); });
    long long p = time_ms([&] { b = pm_one_patterns(ws); });
    if (a != b) {
      std::cerr << "pm-one oracle serial/parallel disagree\n";
      return 1;
    }
    row("pm-one oracle B4", s, p);
  }
  return 0;
}

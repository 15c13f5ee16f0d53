#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "gandg/root_system.hpp"

// End-to-end tests against the installed binary. ctest points GANDG_BIN at
// the build output; the working directory is the repository root so the
// shipped fixtures resolve.

namespace {

std::string bin() {
  const char* p = std::getenv("GANDG_BIN");
  if (!p) throw std::runtime_error("GANDG_BIN is not set; run through ctest");
  return std::string(p);
}

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  RunResult r;
  std::string cmd = bin() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  char buf[4096];
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int st = pclose(pipe);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("classify, witness case") {
  auto r = run("classify A 3 w2");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "intersection  nonempty"));
  CHECK(contains(r.out, "wedge witness (verified)"));

  auto rj = run("--json classify A 3 w2");
  REQUIRE(rj.code == 0);
  auto d = nlohmann::json::parse(rj.out);
  CHECK(d["intersection_nonempty"] == true);
  CHECK(d["certificate_kind"] == "witness");
  CHECK(d["certificate"]["case"] == "wedge");
  CHECK(d["certificate"]["checks"]["entrywise_equal"] == true);
  CHECK(d["certificate"]["checks"]["trace_zero"] == true);
  CHECK(d["certificate"]["checks"]["relations_ok"] == true);
}

TEST_CASE("classify, root string case") {
  auto r = run("classify A 1 2");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "intersection  empty"));
  CHECK(contains(r.out, "root-string obstruction (verified)"));
  CHECK(contains(r.out, "s = 2"));
}

TEST_CASE("classify, e7 case") {
  auto r = run("classify E 7 w7");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "intersection  empty"));
  CHECK(contains(r.out, "E7 hyperplane obstruction (verified)"));
}

TEST_CASE("usage errors exit 2") {
  for (const char* args : {"classify Z 3 w1", "classify A 3 w9", "classify A 3",
                           "classify A 99 w1", "classify A 3 0,0,0", "classify A 3 w2,1",
                           "classify B 1 w1", "bogus", ""}) {
    auto r = run(args);
    CHECK_MESSAGE(r.code == 2, args, " -> ", r.out);
  }
  CHECK(run("--help").code == 0);
  CHECK(run("classify --help").code == 0);
}

TEST_CASE("report is deterministic and matches the minuscule classification") {
  auto r1 = run("report");
  auto r2 = run("report");
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);
  CHECK(contains(r1.out, "system  weight  minuscule  intersection"));
  CHECK(contains(r1.out, "B3      w3      yes        nonempty"));
  CHECK(contains(r1.out, "B3      w1      no         empty"));
  CHECK(contains(r1.out, "E7      w7      yes        empty"));
  CHECK(contains(r1.out, "G2      w1      no         empty"));

  auto small = run("report --max-rank 2");
  CHECK(small.code == 0);
  CHECK(contains(small.out, "A2"));
  CHECK(contains(small.out, "G2"));
  CHECK_FALSE(contains(small.out, "A3"));
  CHECK_FALSE(contains(small.out, "E6"));
}

TEST_CASE("facets subcommand") {
  auto r = run("facets fixtures/square.txt");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "4 points in R^2"));
  CHECK(contains(r.out, "histogram {2: 4}"));

  auto rj = run("--json facets fixtures/square.txt");
  REQUIRE(rj.code == 0);
  auto d = nlohmann::json::parse(rj.out);
  CHECK(d["histogram"]["2"] == 4);
  CHECK(d["polytope"]["facets"].size() == 4);

  auto tmp = std::filesystem::temp_directory_path() / "gandg_cli_bad_points.txt";
  {
    std::ofstream f(tmp);
    f << "1/2 3\nx/y 4\n";
  }
  auto bad = run("facets " + tmp.string());
  CHECK(bad.code == 2);
  CHECK(contains(bad.out, "line 2"));
  {
    std::ofstream f(tmp);
    f << "0 0\n1 0\n1\n";
  }
  auto ragged = run("facets " + tmp.string());
  CHECK(ragged.code == 2);
  CHECK(contains(ragged.out, "line 3"));
  std::filesystem::remove(tmp);

  CHECK(run("facets /no/such/file.txt").code == 2);
}

TEST_CASE("verify-all check selection") {
  auto r = run("verify-all --only classification");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "PASS classification"));
  CHECK(contains(r.out, "all checks passed"));

  auto bad = run("verify-all --only nosuch");
  CHECK(bad.code == 2);
  CHECK(contains(bad.out, "unknown check"));
}

TEST_CASE("verify-all catches a corrupted weight fixture") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "gandg_cli_corrupt";
  fs::remove_all(dir);
  fs::create_directories(dir / "fixtures");

  auto ws = gandg::weight_system(gandg::TypeLabel::E, 6, {1, 0, 0, 0, 0, 0});
  {
    std::ofstream f(dir / "fixtures" / "gosset_221.txt");
    for (size_t i = 0; i < ws.weights.size(); ++i) {
      gandg::RatVec w = ws.weights[i];
      if (i == 0) w[0] += gandg::Rational(1);
      for (size_t k = 0; k < w.size(); ++k) f << (k ? " " : "") << w[k].str();
      f << "\n";
    }
  }

  RunResult r;
  {
    std::string cmd = "cd " + dir.string() + " && " + bin() + " verify-all --only e6 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int st = pclose(pipe);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  }
  CHECK(r.code == 1);
  CHECK(contains(r.out, "FAIL e6"));
  CHECK(contains(r.out, "some checks FAILED"));
  fs::remove_all(dir);
}

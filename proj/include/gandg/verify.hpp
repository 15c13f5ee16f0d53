#pragma once

// The verification suite behind `verify-all` and the acceptance gate: named
// checks, each rebuilding its objects from scratch and comparing against
// frozen expected values. Checks are independent; any subset can run.

#include <iosfwd>
#include <string>
#include <vector>

#include "gandg/root_system.hpp"

namespace gandg {

struct CheckResult {
  std::string name;
  bool pass = false;
  long long millis = 0;
  std::vector<std::string> lines;  // facts and failures, human-readable
};

struct VerifyOptions {
  int max_rank = 8;
  std::string only;                    // empty = run everything
  std::string fixtures_dir = "fixtures";
};

// Registered names, in execution order: classification, witnesses, e6,
// hulls, hull-oracle, lemmas, pm-one, negative-control.
std::vector<std::string> check_names();

// Runs the selected checks. A check that throws is recorded as failed with
// the exception text. Unknown `only` names throw std::invalid_argument.
std::vector<CheckResult> run_checks(const VerifyOptions& opt);

// One classification row per fundamental weight, rank <= max_rank, in
// canonical order (types A..G, rank ascending, weight index ascending).
struct ReportRow {
  TypeLabel type;
  int rank;
  int weight_index;  // 1-based
  bool minuscule;
  bool nonempty;
};

std::vector<ReportRow> report_rows(int max_rank);
std::string render_report(const std::vector<ReportRow>& rows);

// The frozen classification: which fundamental weights are minuscule.
bool expected_minuscule(TypeLabel t, int rank, int weight_index);

// Rational vectors, one per line, entries "p/q" separated by whitespace;
// blank lines and lines starting with '#' are skipped. Ragged or unparsable
// input throws std::runtime_error naming the 1-based line.
std::vector<RatVec> parse_points(std::istream& in);

}  // namespace gandg

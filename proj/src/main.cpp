#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gandg/hull.hpp"
#include "gandg/json_io.hpp"
#include "gandg/verdict.hpp"
#include "gandg/verify.hpp"

namespace {

using namespace gandg;

std::string sec_str(long long ms) {
  return std::to_string(ms / 1000) + "." + std::to_string((ms % 1000) / 100) + "s";
}

std::string hist_str(const std::map<size_t, size_t>& h) {
  std::string s = "{";
  bool first = true;
  for (const auto& [k, v] : h) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(k) + ": " + std::to_string(v);
  }
  return s + "}";
}

std::vector<long> parse_weight(const std::string& s, int rank) {
  if (s.empty()) throw std::invalid_argument("empty weight");
  auto parse_long = [](const std::string& tok) {
    size_t pos = 0;
    long v = std::stol(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("trailing characters in '" + tok + "'");
    return v;
  };
  if (s[0] == 'w' || s[0] == 'W') {
    long idx = parse_long(s.substr(1));
    if (idx < 1 || idx > rank)
      throw std::invalid_argument("weight index must be in 1.." + std::to_string(rank));
    std::vector<long> c(size_t(rank), 0);
    c[size_t(idx - 1)] = 1;
    return c;
  }
  std::vector<long> c;
  std::string tok;
  std::istringstream ss(s);
  while (std::getline(ss, tok, ',')) c.push_back(parse_long(tok));
  if (int(c.size()) != rank)
    throw std::invalid_argument("expected " + std::to_string(rank) + " coefficients, got " +
                                std::to_string(c.size()));
  return c;
}

std::string human_verdict(const Verdict& v) {
  std::ostringstream out;
  std::string lambda = "[";
  for (size_t i = 0; i < v.lambda_coeffs.size(); ++i) {
    if (i) lambda += ", ";
    lambda += std::to_string(v.lambda_coeffs[i]);
  }
  lambda += "]";
  out << "system        " << std::string(1, type_char(v.type)) << v.rank << "\n";
  out << "lambda        " << lambda << "\n";
  out << "minuscule     " << (v.minuscule ? "yes" : "no") << "\n";
  out << "classical     " << (v.classical ? "yes" : "no") << "\n";
  out << "intersection  " << (v.intersection_nonempty ? "nonempty" : "empty") << "\n";
  if (v.witness) {
    const Witness& w = *v.witness;
    out << "certificate   " << (w.kind == WitnessKind::wedge ? "wedge witness" : "torus witness")
        << (w.verified() ? " (verified)" : " (FAILED)") << "\n";
    if (w.kind == WitnessKind::wedge)
      out << "  m = " << w.m << ", j = " << w.j << ", ring Q[t]/(t^" << w.modulus.m << " - ("
          << w.modulus.c.str() << ")), " << w.weights.size() << " diagonal entries, "
          << w.relations.size() << " relations\n";
    else
      out << "  torus vector " << vec_str(w.torus_vector) << ", " << w.weights.size()
          << " diagonal entries, " << w.relations.size() << " relations\n";
  } else if (v.obstruction) {
    const ObstructionCertificate& c = *v.obstruction;
    switch (c.kind) {
      case ObstructionKind::root_string:
        out << "certificate   root-string obstruction" << (c.verified ? " (verified)" : " (FAILED)")
            << "\n";
        out << "  s = " << c.root_string->s << ", string root "
            << vec_str(c.root_string->string_root) << ", dim V = " << c.root_string->dim_v.get_str()
            << "\n";
        break;
      case ObstructionKind::e6_case_analysis: {
        out << "certificate   E6 case analysis" << (c.verified ? " (verified)" : " (FAILED)") << "\n";
        const E6Certificate& e = *c.e6;
        out << "  " << e.triples.size() << " triples (" << e.case_counts[0] << "/" << e.case_counts[1]
            << "/" << e.case_counts[2] << "/" << e.case_counts[3] << "), difference rank "
            << e.difference_rank << ", hull " << hist_str(e.hull_summary.facet_sizes) << "\n";
        break;
      }
      case ObstructionKind::e7_hyperplane: {
        out << "certificate   E7 hyperplane obstruction" << (c.verified ? " (verified)" : " (FAILED)")
            << "\n";
        const E7Certificate& e = *c.e7;
        out << "  " << e.weights.size() << " weights, self-dual, hull "
            << hist_str(e.hull_summary.facet_sizes) << ", 2 * "
            << e.hull_summary.max_facet_vertices << " < " << e.hull_summary.vertex_count << "\n";
        break;
      }
    }
  }
  return out.str();
}

int emit(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream f(out_path);
  if (!f) {
    std::cerr << "cannot open " << out_path << " for writing\n";
    return 2;
  }
  f << payload;
  std::cerr << "wrote " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact certificates for when a simple matrix group meets its own Lie algebra"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string out_path;
  int max_rank = 8;
  app.add_flag("--json", as_json, "emit JSON instead of text");
  app.add_option("--out", out_path, "write output to this file instead of stdout");
  app.add_option("--max-rank", max_rank, "rank cap for the classical families")
      ->check(CLI::Range(1, 64));

  std::string type_str, weight_str;
  int rank = 0;
  auto* classify_cmd =
      app.add_subcommand("classify", "decide one type and dominant weight, with certificate");
  classify_cmd->add_option("type", type_str, "type letter A..G")->required();
  classify_cmd->add_option("rank", rank, "rank")->required();
  classify_cmd->add_option("weight", weight_str, "w<i> or comma-separated coefficients")->required();
  classify_cmd->fallthrough();

  auto* report_cmd =
      app.add_subcommand("report", "minuscule flag and verdict for every fundamental weight");
  report_cmd->fallthrough();

  std::string facets_path;
  auto* facets_cmd = app.add_subcommand("facets", "convex hull facets of points from a file");
  facets_cmd->add_option("file", facets_path, "one point per line, \"p/q\" entries")->required();
  facets_cmd->fallthrough();

  std::string only;
  auto* verify_cmd = app.add_subcommand("verify-all", "run the full verification suite");
  verify_cmd->add_option("--only", only, "run a single named check");
  verify_cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*classify_cmd) {
      if (type_str.size() != 1) {
        std::cerr << "error: type must be a single letter A..G\n";
        return 2;
      }
      TypeLabel t;
      std::vector<long> coeffs;
      try {
        t = type_from_char(char(std::toupper(type_str[0])));
        if (rank > max_rank) {
          std::cerr << "error: rank " << rank << " exceeds --max-rank " << max_rank << "\n";
          return 2;
        }
        coeffs = parse_weight(weight_str, rank);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }

      Verdict v;
      try {
        v = classify(t, rank, coeffs);
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
      json doc = verdict_json(v);
      int rc = emit(out_path, as_json ? doc.dump(2) + "\n" : human_verdict(v));
      if (rc != 0) return rc;
      if (!v.certificate_verified()) {
        if (!as_json) std::cout << doc.dump(2) << "\n";
        return 1;
      }
      return 0;
    }

    if (*report_cmd) {
      auto rows = report_rows(max_rank);
      std::string payload;
      if (as_json) {
        json arr = json::array();
        for (const auto& row : rows)
          arr.push_back(json{{"type", std::string(1, type_char(row.type))},
                             {"rank", row.rank},
                             {"weight", "w" + std::to_string(row.weight_index)},
                             {"minuscule", row.minuscule},
                             {"intersection_nonempty", row.nonempty}});
        payload = arr.dump(2) + "\n";
      } else {
        payload = render_report(rows);
      }
      return emit(out_path, payload);
    }

    if (*facets_cmd) {
      std::ifstream in(facets_path);
      if (!in) {
        std::cerr << "cannot open " << facets_path << "\n";
        return 2;
      }
      std::vector<RatVec> pts;
      Polytope p;
      try {
        pts = parse_points(in);
        p = hull_facets(pts);
      } catch (const std::exception& e) {
        std::cerr << facets_path << ": " << e.what() << "\n";
        return 2;
      }
      auto hist = facet_size_histogram(p);
      std::string payload;
      if (as_json) {
        payload = json{{"polytope", polytope_json(p)}, {"histogram", [&] {
                         json h = json::object();
                         for (const auto& [k, v] : hist) h[std::to_string(k)] = v;
                         return h;
                       }()}}
                      .dump(2) +
                  "\n";
      } else {
        std::ostringstream out;
        out << pts.size() << " points in R^" << p.ambient_dim << ", affine dimension " << p.affine_dim
            << ", " << p.facets.size() << " facets\n";
        out << "histogram " << hist_str(hist) << "\n";
        for (size_t i = 0; i < p.facets.size(); ++i) {
          const Facet& f = p.facets[i];
          out << "facet " << i << ": vertices [";
          for (size_t k = 0; k < f.vertices.size(); ++k)
            out << (k ? " " : "") << f.vertices[k];
          out << "] normal " << vec_str(f.normal) << " offset " << f.offset.str() << "\n";
        }
        payload = out.str();
      }
      return emit(out_path, payload);
    }

    if (*verify_cmd) {
      VerifyOptions opt;
      opt.max_rank = max_rank;
      opt.only = only;
      std::vector<CheckResult> results;
      try {
        results = run_checks(opt);
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
      bool all = true;
      std::string payload;
      if (as_json) {
        json arr = json::array();
        for (const auto& r : results) {
          all = all && r.pass;
          arr.push_back(json{{"name", r.name}, {"pass", r.pass}, {"millis", r.millis},
                             {"lines", r.lines}});
        }
        payload = arr.dump(2) + "\n";
      } else {
        std::ostringstream out;
        for (const auto& r : results) {
          all = all && r.pass;
          out << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << sec_str(r.millis) << ")\n";
          for (const auto& line : r.lines) out << "  " << line << "\n";
        }
        out << (all ? "all checks passed" : "some checks FAILED") << "\n";
        payload = out.str();
      }
      int rc = emit(out_path, payload);
      if (rc != 0) return rc;
      return all ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

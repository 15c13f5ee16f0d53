#include "gandg/json_io.hpp"

#include <stdexcept>

namespace gandg {

namespace {

std::string first_diff(const json& got, const json& want) {
  json patch = json::diff(got, want);
  if (patch.empty()) return "no difference";
  const json& op = patch.front();
  std::string path = op.value("path", "?");
  return "first difference at " + path;
}

mpz_class mpz_from_json(const json& d) {
  if (!d.is_string()) throw std::invalid_argument("integer fields are decimal strings");
  return mpz_class(d.get<std::string>(), 10);
}

std::vector<long> coeffs_from_json(const json& d) { return d.get<std::vector<long>>(); }

json weights_json(const std::vector<RatVec>& ws) {
  json a = json::array();
  for (const auto& w : ws) a.push_back(ratvec_json(w));
  return a;
}

std::vector<RatVec> weights_from_json(const json& d) {
  std::vector<RatVec> ws;
  for (const auto& w : d) ws.push_back(ratvec_from_json(w));
  return ws;
}

json hull_summary_json(const HullSummary& s) {
  json sizes = json::object();
  for (const auto& [k, v] : s.facet_sizes) sizes[std::to_string(k)] = v;
  return json{{"facet_sizes", sizes},
              {"max_facet_vertices", s.max_facet_vertices},
              {"vertex_count", s.vertex_count},
              {"two_hyperplane_impossible", s.two_hyperplane_impossible}};
}

json triple_json(const TripleRecord& t) {
  json d;
  d["triple"] = t.triple;
  d["incident_count"] = t.incident_count;
  d["ok"] = t.ok;
  if (!t.detail.empty()) d["detail"] = t.detail;
  switch (t.incident_count) {
    case 0:
      d["common"] = t.common;
      d["sum_indices"] = t.sum_indices;
      break;
    case 1:
      d["fourth"] = t.fourth;
      break;
    case 2:
      d["skew_pair"] = t.skew_pair;
      d["apex"] = t.apex;
      d["n_both"] = t.n_both;
      d["n_either"] = t.n_either;
      d["n_skew_both"] = t.n_skew_both;
      d["n_apex_incident"] = t.n_apex_incident;
      d["outside_skew"] = t.outside_skew;
      break;
    case 3:
      d["crossing"] = t.crossing;
      d["outside_low"] = t.outside_low;
      break;
    default:
      break;
  }
  return d;
}

json incidence_checks_json(const IncidenceChecks& c) {
  json d{{"count_ok", c.count_ok},       {"distinct", c.distinct},
         {"diag_ok", c.diag_ok},         {"offdiag_ok", c.offdiag_ok},
         {"degree_ok", c.degree_ok},     {"incident_pairs", c.incident_pair_count}};
  if (!c.detail.empty()) d["detail"] = c.detail;
  return d;
}

json e6_json(const E6Certificate& c) {
  json pairs = json::array();
  for (const auto& [i, j] : c.graph.incident_pairs) pairs.push_back(json::array({i, j}));
  json triples = json::array();
  for (const auto& t : c.triples) triples.push_back(triple_json(t));
  return json{{"weights", weights_json(c.graph.weights)},
              {"incidence", incidence_checks_json(c.graph.checks)},
              {"incident_pair_list", pairs},
              {"triples", triples},
              {"case_counts", c.case_counts},
              {"difference_rank", c.difference_rank},
              {"hull", polytope_json(c.hull)},
              {"hull_summary", hull_summary_json(c.hull_summary)},
              {"verified", c.verified}};
}

json e7_json(const E7Certificate& c) {
  return json{{"weights", weights_json(c.weights)},
              {"weight_count_ok", c.weight_count_ok},
              {"self_dual", c.self_dual},
              {"hull", polytope_json(c.hull)},
              {"hull_summary", hull_summary_json(c.hull_summary)},
              {"verified", c.verified}};
}

json root_string_json(const RootStringCertificate& c) {
  json combos = json::array();
  for (const auto& combo : c.short_gen.combos) {
    json terms = json::array();
    for (const auto& [coeff, idx] : combo.terms)
      terms.push_back(json{{"coeff", coeff.get_str()}, {"index", idx}});
    combos.push_back(json{{"target", ratvec_json(combo.target)}, {"terms", terms}});
  }
  return json{{"type", std::string(1, type_char(c.type))},
              {"rank", c.rank},
              {"lambda", c.lambda_coeffs},
              {"lambda_vec", ratvec_json(c.lambda)},
              {"s", c.s},
              {"dual_highest", ratvec_json(c.dual_highest)},
              {"string_root", ratvec_json(c.string_root)},
              {"mid", ratvec_json(c.mid)},
              {"low", ratvec_json(c.low)},
              {"checks",
               json{{"ap_identity", c.ap_identity},
                    {"string_root_is_root", c.string_root_is_root},
                    {"string_root_short", c.string_root_short},
                    {"short_roots_generate", c.short_gen.verified}}},
              {"short_roots",
               json{{"all_roots_short", c.short_gen.all_roots_short},
                    {"roots", weights_json(c.short_gen.short_roots)},
                    {"combos", combos}}},
              {"dim_v", c.dim_v.get_str()},
              {"verified", c.verified}};
}

const char* kind_str(ObstructionKind k) {
  switch (k) {
    case ObstructionKind::root_string: return "root_string";
    case ObstructionKind::e6_case_analysis: return "e6_case_analysis";
    case ObstructionKind::e7_hyperplane: return "e7_hyperplane";
  }
  throw std::logic_error("unknown obstruction kind");
}

}  // namespace

json rational_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& d) {
  if (!d.is_string()) throw std::invalid_argument("rationals are \"p/q\" strings");
  return Rational::parse(d.get<std::string>());
}

json ratvec_json(const RatVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

RatVec ratvec_from_json(const json& d) {
  RatVec v;
  for (const auto& x : d) v.push_back(rational_from_json(x));
  return v;
}

json intvec_json(const IntVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

IntVec intvec_from_json(const json& d) {
  IntVec v;
  for (const auto& x : d) v.push_back(mpz_from_json(x));
  return v;
}

json gaussian_json(const GaussianRational& g) {
  return json{{"re", g.re().str()}, {"im", g.im().str()}};
}

GaussianRational gaussian_from_json(const json& d) {
  return GaussianRational(rational_from_json(d.at("re")), rational_from_json(d.at("im")));
}

json ring_element_json(const QuotientRingElement& x) {
  json cs = json::array();
  for (const auto& c : x.coeffs()) cs.push_back(c.str());
  return json{{"modulus", json{{"m", x.modulus().m}, {"c", x.modulus().c.str()}}}, {"coeffs", cs}};
}

QuotientRingElement ring_element_from_json(const json& d) {
  const json& md = d.at("modulus");
  QuotientModulus mod{md.at("m").get<long>(), rational_from_json(md.at("c"))};
  std::vector<Rational> cs;
  for (const auto& c : d.at("coeffs")) cs.push_back(rational_from_json(c));
  return QuotientRingElement(mod, std::move(cs));
}

json witness_json(const Witness& w) {
  json d;
  d["type"] = std::string(1, type_char(w.type));
  d["rank"] = w.rank;
  d["lambda"] = w.lambda_coeffs;
  d["weights"] = weights_json(w.weights);
  json rels = json::array();
  for (const auto& r : w.relations) rels.push_back(intvec_json(r));
  d["relations"] = rels;
  d["checks"] = json{{"entrywise_equal", w.entrywise_equal},
                     {"trace_zero", w.trace_zero},
                     {"relations_ok", w.relations_ok}};

  // The two routes are serialized once: a verified witness has them equal,
  // and reverification reconstructs both from the parameters anyway.
  json diag = json::array();
  if (w.kind == WitnessKind::wedge) {
    d["case"] = "wedge";
    d["ring"] = json{{"kind", "quotient"},
                     {"modulus", json{{"m", w.modulus.m}, {"c", w.modulus.c.str()}}}};
    d["m"] = w.m;
    d["j"] = w.j;
    for (const auto& x : w.group_diag_q) {
      json cs = json::array();
      for (const auto& c : x.coeffs()) cs.push_back(c.str());
      diag.push_back(cs);
    }
  } else {
    d["case"] = "torus_pm_i";
    d["ring"] = json{{"kind", "gaussian"}};
    d["v"] = ratvec_json(w.torus_vector);
    for (const auto& x : w.group_diag_g) diag.push_back(gaussian_json(x));
  }
  d["diag"] = diag;
  return d;
}

Witness witness_from_json(const json& d) {
  Witness w;
  std::string c = d.at("case").get<std::string>();
  w.type = type_from_char(d.at("type").get<std::string>().at(0));
  w.rank = d.at("rank").get<int>();
  w.lambda_coeffs = coeffs_from_json(d.at("lambda"));
  w.weights = weights_from_json(d.at("weights"));
  for (const auto& r : d.at("relations")) w.relations.push_back(intvec_from_json(r));
  const json& checks = d.at("checks");
  w.entrywise_equal = checks.at("entrywise_equal").get<bool>();
  w.trace_zero = checks.at("trace_zero").get<bool>();
  w.relations_ok = checks.at("relations_ok").get<bool>();

  if (c == "wedge") {
    w.kind = WitnessKind::wedge;
    const json& md = d.at("ring").at("modulus");
    w.modulus = QuotientModulus{md.at("m").get<long>(), rational_from_json(md.at("c"))};
    w.m = d.at("m").get<long>();
    w.j = d.at("j").get<long>();
    for (const auto& entry : d.at("diag")) {
      std::vector<Rational> cs;
      for (const auto& x : entry) cs.push_back(rational_from_json(x));
      w.group_diag_q.emplace_back(w.modulus, std::move(cs));
    }
    w.algebra_diag_q = w.group_diag_q;
  } else if (c == "torus_pm_i") {
    w.kind = WitnessKind::torus_pm_i;
    if (d.at("ring").at("kind").get<std::string>() != "gaussian")
      throw std::invalid_argument("torus witness must use the gaussian ring");
    w.torus_vector = ratvec_from_json(d.at("v"));
    for (const auto& entry : d.at("diag")) w.group_diag_g.push_back(gaussian_from_json(entry));
    w.algebra_diag_g = w.group_diag_g;
  } else {
    throw std::invalid_argument("unknown witness case '" + c + "'");
  }
  return w;
}

json polytope_json(const Polytope& p) {
  json facets = json::array();
  for (const auto& f : p.facets)
    facets.push_back(json{{"normal", ratvec_json(f.normal)},
                          {"offset", f.offset.str()},
                          {"vertices", f.vertices}});
  return json{{"ambient_dim", p.ambient_dim},
              {"affine_dim", p.affine_dim},
              {"points", weights_json(p.points)},
              {"facets", facets}};
}

Polytope polytope_from_json(const json& d) {
  Polytope p;
  p.ambient_dim = d.at("ambient_dim").get<int>();
  p.affine_dim = d.at("affine_dim").get<int>();
  p.points = weights_from_json(d.at("points"));
  for (const auto& f : d.at("facets")) {
    Facet facet;
    facet.normal = ratvec_from_json(f.at("normal"));
    facet.offset = rational_from_json(f.at("offset"));
    facet.vertices = f.at("vertices").get<std::vector<int>>();
    p.facets.push_back(std::move(facet));
  }
  return p;
}

json obstruction_json(const ObstructionCertificate& c) {
  json d{{"kind", kind_str(c.kind)}, {"verified", c.verified}};
  switch (c.kind) {
    case ObstructionKind::root_string: d["root_string"] = root_string_json(*c.root_string); break;
    case ObstructionKind::e6_case_analysis: d["e6"] = e6_json(*c.e6); break;
    case ObstructionKind::e7_hyperplane: d["e7"] = e7_json(*c.e7); break;
  }
  return d;
}

json verdict_json(const Verdict& v) {
  json d{{"type", std::string(1, type_char(v.type))},
         {"rank", v.rank},
         {"lambda", v.lambda_coeffs},
         {"minuscule", v.minuscule},
         {"classical", v.classical},
         {"intersection_nonempty", v.intersection_nonempty}};
  if (v.witness) {
    d["certificate_kind"] = "witness";
    d["certificate"] = witness_json(*v.witness);
  } else if (v.obstruction) {
    d["certificate_kind"] = kind_str(v.obstruction->kind);
    d["certificate"] = obstruction_json(*v.obstruction);
  }
  return d;
}

ReverifyResult reverify_witness(const json& doc) {
  try {
    Witness w = witness_from_json(doc);
    recheck_witness(w);
    if (!w.verified()) return {false, "stored witness content fails recheck"};

    Witness rebuilt;
    if (w.kind == WitnessKind::wedge) {
      rebuilt = slm_wedge_witness(w.m, w.j);
    } else {
      WeightSystem ws = weight_system(w.type, w.rank, w.lambda_coeffs);
      rebuilt = pm_i_torus_witness(ws, w.torus_vector);
    }
    json r = witness_json(rebuilt);
    if (r != doc) return {false, "document differs from reconstruction: " + first_diff(doc, r)};
    return {true, ""};
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
}

ReverifyResult reverify_obstruction(const json& doc) {
  try {
    std::string kind = doc.at("kind").get<std::string>();
    ObstructionCertificate rebuilt;
    if (kind == "root_string") {
      const json& b = doc.at("root_string");
      TypeLabel t = type_from_char(b.at("type").get<std::string>().at(0));
      RootSystem rs = build_root_system(t, b.at("rank").get<int>());
      rebuilt.kind = ObstructionKind::root_string;
      rebuilt.root_string = root_string_obstruction(rs, coeffs_from_json(b.at("lambda")));
      rebuilt.verified = rebuilt.root_string->verified;
    } else if (kind == "e6_case_analysis") {
      rebuilt.kind = ObstructionKind::e6_case_analysis;
      rebuilt.e6 = e6_case_checks_serial(incidence_graph(weights_from_json(doc.at("e6").at("weights"))));
      rebuilt.verified = rebuilt.e6->verified;
    } else if (kind == "e7_hyperplane") {
      rebuilt.kind = ObstructionKind::e7_hyperplane;
      rebuilt.e7 = e7_obstruction(build_root_system(TypeLabel::E, 7));
      rebuilt.verified = rebuilt.e7->verified;
    } else {
      return {false, "unknown obstruction kind '" + kind + "'"};
    }
    if (!rebuilt.verified) return {false, "reconstructed certificate fails verification"};
    json r = obstruction_json(rebuilt);
    if (r != doc) return {false, "document differs from reconstruction: " + first_diff(doc, r)};
    return {true, ""};
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
}

ReverifyResult reverify_verdict(const json& doc) {
  try {
    TypeLabel t = type_from_char(doc.at("type").get<std::string>().at(0));
    Verdict v = classify(t, doc.at("rank").get<int>(), coeffs_from_json(doc.at("lambda")));
    if (!v.certificate_verified()) return {false, "recomputed verdict fails verification"};
    json r = verdict_json(v);
    if (r != doc) return {false, "document differs from reconstruction: " + first_diff(doc, r)};
    return {true, ""};
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
}

}  // namespace gandg

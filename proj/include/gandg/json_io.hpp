#pragma once

// JSON serialization for certificates, plus independent re-verification of
// serialized documents. Scalars keep their exact string forms ("p/q" for
// rationals, decimal strings for big integers); nothing passes through
// floating point.
//
// Reverification never trusts stored check bits: it reconstructs the whole
// certificate from the document's defining data (wedge parameters, torus
// vector, type and weight, embedded weight lists) and demands the serialized
// form match the reconstruction exactly.

#include <string>

#include <json.hpp>

#include "gandg/verdict.hpp"

namespace gandg {

using nlohmann::json;

json rational_json(const Rational& r);
Rational rational_from_json(const json& d);
json ratvec_json(const RatVec& v);
RatVec ratvec_from_json(const json& d);
json intvec_json(const IntVec& v);
IntVec intvec_from_json(const json& d);
json gaussian_json(const GaussianRational& g);
GaussianRational gaussian_from_json(const json& d);
json ring_element_json(const QuotientRingElement& x);
QuotientRingElement ring_element_from_json(const json& d);

json witness_json(const Witness& w);
Witness witness_from_json(const json& d);

json polytope_json(const Polytope& p);
Polytope polytope_from_json(const json& d);

json obstruction_json(const ObstructionCertificate& c);
json verdict_json(const Verdict& v);

struct ReverifyResult {
  bool ok = false;
  std::string detail;  // first mismatch or parse failure; empty when ok
};

// Parses the document, reruns every check on the parsed witness, rebuilds
// the witness from its parameters alone, and compares serializations.
ReverifyResult reverify_witness(const json& doc);

// Rebuilds the certificate of the documented kind (root strings from type
// and weight, E6 case analysis from the embedded weights, E7 from scratch)
// and compares serializations.
ReverifyResult reverify_obstruction(const json& doc);

// Recomputes the full verdict for the documented type and weight and
// compares serializations; covers the embedded certificate too.
ReverifyResult reverify_verdict(const json& doc);

}  // namespace gandg

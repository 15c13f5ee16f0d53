#include "gandg/verdict.hpp"

#include <stdexcept>
#include <string>

namespace gandg {

Verdict classify(TypeLabel t, int rank, const std::vector<long>& coeffs) {
  RootSystem rs = build_root_system(t, rank);
  if (int(coeffs.size()) != rank)
    throw std::invalid_argument("classify: expected " + std::to_string(rank) + " coefficients, got " +
                                std::to_string(coeffs.size()));
  bool any = false;
  for (long c : coeffs) {
    if (c < 0) throw std::invalid_argument("classify: weight coefficients must be nonnegative");
    if (c > 0) any = true;
  }
  if (!any) throw std::invalid_argument("classify: the zero weight is not a representation here");

  Verdict v;
  v.type = t;
  v.rank = rank;
  v.lambda_coeffs = coeffs;
  v.minuscule = is_minuscule(rs, coeffs);
  v.classical = (t == TypeLabel::A || t == TypeLabel::B || t == TypeLabel::C || t == TypeLabel::D);
  v.intersection_nonempty = v.minuscule && v.classical;

  if (v.intersection_nonempty) {
    v.witness = classical_minuscule_witness(t, rank, coeffs);
    return v;
  }

  ObstructionCertificate cert;
  if (!v.minuscule) {
    cert.kind = ObstructionKind::root_string;
    cert.root_string = root_string_obstruction(rs, coeffs);
    cert.verified = cert.root_string->verified;
  } else if (t == TypeLabel::E && rank == 6) {
    cert.kind = ObstructionKind::e6_case_analysis;
    WeightSystem ws = weight_system(t, rank, coeffs);
    cert.e6 = e6_case_checks(e6_incidence(ws));
    cert.verified = cert.e6->verified;
  } else if (t == TypeLabel::E && rank == 7) {
    cert.kind = ObstructionKind::e7_hyperplane;
    cert.e7 = e7_obstruction(rs);
    cert.verified = cert.e7->verified;
  } else {
    // Exceptional minuscule weights exist only for E6 and E7.
    throw std::logic_error("classify: minuscule weight on unexpected type " + rs.name());
  }
  v.obstruction = std::move(cert);
  return v;
}

}  // namespace gandg

#pragma once

// Top-level classification: for a simple type and dominant weight, decide
// whether the group meets its Lie algebra inside End(V), and attach a fully
// verified certificate either way.
//
//   nonempty  <=>  classical type and minuscule weight
//
// with a wedge or +-i torus witness in the nonempty case, and a root-string,
// E6 case-analysis, or E7 hyperplane obstruction otherwise.

#include <optional>
#include <vector>

#include "gandg/obstruction.hpp"
#include "gandg/witness.hpp"

namespace gandg {

struct Verdict {
  TypeLabel type = TypeLabel::A;
  int rank = 0;
  std::vector<long> lambda_coeffs;

  bool minuscule = false;
  bool classical = false;
  bool intersection_nonempty = false;

  std::optional<Witness> witness;                   // set iff nonempty
  std::optional<ObstructionCertificate> obstruction;  // set iff empty

  bool certificate_verified() const {
    if (intersection_nonempty) return witness && witness->verified();
    return obstruction && obstruction->verified;
  }
};

// Coefficients must be nonnegative (dominant), not all zero, one per
// fundamental weight; anything else throws std::invalid_argument.
Verdict classify(TypeLabel t, int rank, const std::vector<long>& coeffs);

}  // namespace gandg

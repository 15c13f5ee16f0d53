#pragma once

// Membership witnesses: exact diagonal matrices realizing a point of the
// group that is simultaneously a point of its Lie algebra, acting on a
// minuscule representation. Two constructions cover the classical types:
//
//   wedge      exterior powers of the defining representation of sl_m,
//              over Q[t]/(t^m - j/(j-m)); the identity holds for every
//              root of the modulus at once.
//   torus_pm_i types B, C, D: a torus element with eigenvalues +-i paired
//              against the algebra element defined by the same vector.
//
// Every Witness carries both computation routes and the verification bits;
// nothing is trusted that was not recomputed.

#include <array>
#include <optional>
#include <vector>

#include "gandg/matrix.hpp"
#include "gandg/quotient_ring.hpp"
#include "gandg/root_system.hpp"

namespace gandg {

enum class WitnessKind { wedge, torus_pm_i };

struct Witness {
  WitnessKind kind = WitnessKind::wedge;
  TypeLabel type = TypeLabel::A;
  int rank = 0;
  std::vector<long> lambda_coeffs;

  // wedge case
  long m = 0, j = 0;
  QuotientModulus modulus;
  std::vector<QuotientRingElement> group_diag_q;    // t^j or t^(j-m) per basis tuple
  std::vector<QuotientRingElement> algebra_diag_q;  // (t^j/j) * j or (t^j/j) * (j-m)

  // torus case
  RatVec torus_vector;
  std::vector<GaussianRational> group_diag_g;
  std::vector<GaussianRational> algebra_diag_g;

  // Weights aligned entry-for-entry with the diagonal above. For the wedge
  // case this is the tuple order of the wedge basis, not the lex-descending
  // weight order; the set of vectors is the same.
  std::vector<RatVec> weights;

  // Canonical kernel basis of the (denominator-cleared) weight matrix: every
  // multiplicative relation among the diagonal entries that the weights
  // impose.
  std::vector<IntVec> relations;

  bool entrywise_equal = false;  // group route == algebra route, every entry
  bool trace_zero = false;       // algebra diagonal sums to zero
  bool relations_ok = false;     // every kernel vector: weight sum zero and diagonal product one

  bool verified() const { return entrywise_equal && trace_zero && relations_ok; }
};

// Witness on the j-th wedge power of the defining representation of sl_m
// (type A_{m-1}, highest weight w_j). Requires 0 < j < m, m >= 2.
Witness slm_wedge_witness(long m, long j);

// Vector v with <w, v> in {+1, -1} for every weight w of the minuscule
// system (types B, C, D). Depth-first search over the canonical weight order
// (+1 branch first) with exact consistency pruning; first solution wins.
// Throws std::runtime_error if the search exhausts (the listed cases never do).
RatVec pm_one_vector(const WeightSystem& ws);

// Witness from a +-1 pairing vector: diagonal entries eps_j * i over the
// Gaussian rationals. All multiplicative relations forced by the weight
// lattice are certified.
Witness pm_i_torus_witness(const WeightSystem& ws, const RatVec& v);

// Dispatch for any minuscule weight on a classical type: wedge for A, torus
// for B/C/D. Throws std::invalid_argument when the weight is not minuscule
// and std::domain_error for exceptional types (where no witness exists).
Witness classical_minuscule_witness(TypeLabel t, int rank, const std::vector<long>& coeffs);

// Recomputes every check bit of `w` from its stored content; structural
// defects (length or parameter mismatches, non +-i torus entries) throw.
// This is the whole verification path for deserialized witnesses.
void recheck_witness(Witness& w);

// Index quadruples (i, j, k, l) with w_i + w_j = w_k + w_l and {i,j} != {k,l},
// i < j, k < l, (i,j) lex-before (k,l). Exhaustive when the total count is at
// most `cap`; otherwise a deterministic sample of `cap` quadruples (mt19937
// seeded as given).
std::vector<std::array<int, 4>> equal_sum_quadruples(const std::vector<RatVec>& weights, size_t cap,
                                                     unsigned seed);

bool weights_negation_closed(const std::vector<RatVec>& weights);

// Checks v_i * v_j == v_k * v_l for a quadruple with w_i + w_j = w_k + w_l.
// The weight precondition is re-verified, not assumed.
template <class Scalar>
bool quadrangle_holds(const std::vector<RatVec>& weights, const std::vector<Scalar>& values,
                      const std::array<int, 4>& q) {
  if (vec_add(weights[q[0]], weights[q[1]]) != vec_add(weights[q[2]], weights[q[3]]))
    throw std::invalid_argument("quadrangle_holds: indices do not have equal weight sums");
  return values[q[0]] * values[q[1]] == values[q[2]] * values[q[3]];
}

}  // namespace gandg

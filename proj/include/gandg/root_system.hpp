#pragma once

// Root systems in the standard orthonormal coordinates (A_r in the sum-zero
// hyperplane of R^(r+1); B/C/D_r in R^r; E-series in R^8; F4 in R^4; G2 in
// R^3). Simple roots are tabulated; everything else (positive roots, Cartan
// matrix, fundamental weights, orbits) is computed and cross-checked at build
// time.

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "gandg/rational.hpp"

namespace gandg {

enum class TypeLabel { A, B, C, D, E, F, G };

char type_char(TypeLabel t);
TypeLabel type_from_char(char c);

struct RootSystem {
  TypeLabel type;
  int rank = 0;
  int ambient_dim = 0;
  // The invariant form is gram_scale times the standard dot product; all
  // built-in tables use scale 1, stored explicitly so pairings never pick up
  // an implicit convention.
  Rational gram_scale;
  std::vector<RatVec> simple_roots;        // tabulated, index i <-> alpha_{i+1}
  std::vector<RatVec> positive_roots;      // computed, lex-descending
  std::vector<RatVec> fundamental_weights; // computed, index i <-> w_{i+1}
  std::vector<std::vector<long>> cartan;   // C[i][j] = <alpha_i, alpha_j^vee>

  std::string name() const { return std::string(1, type_char(type)) + std::to_string(rank); }
};

// Builds and self-checks the system: positive-root count, Cartan matrix
// against the Dynkin-diagram table, fundamental-weight pairings.
RootSystem build_root_system(TypeLabel t, int rank);

Rational pairing(const RootSystem& rs, const RatVec& a, const RatVec& b);
RatVec coroot(const RootSystem& rs, const RatVec& root);
RatVec reflect(const RootSystem& rs, const RatVec& v, const RatVec& root);
bool is_dominant(const RootSystem& rs, const RatVec& v);
bool is_root(const RootSystem& rs, const RatVec& v);

RatVec weight_from_coeffs(const RootSystem& rs, const std::vector<long>& coeffs);

// Full Weyl orbit by breadth-first closure under simple reflections,
// returned lex-descending. Never enumerates the Weyl group itself.
std::vector<RatVec> weyl_orbit(const RootSystem& rs, const RatVec& v);

RatVec highest_root(const RootSystem& rs);

// Highest root of the dual system R^vee = {2a/(a,a)}, i.e. the unique
// maximal-height element in the simple-coroot basis. Pairing a dominant
// weight with it gives the maximal <lambda, alpha^vee> over all roots.
RatVec highest_root_dual(const RootSystem& rs);

// <lambda, alpha^vee> maximized over roots; lambda must be dominant.
long string_length(const RootSystem& rs, const RatVec& lambda);

// Exact Weyl dimension formula.
mpz_class weyl_dim(const RootSystem& rs, const RatVec& lambda);

// lambda != 0 and string_length == 1. When true, the orbit size is
// cross-checked against the Weyl dimension.
bool is_minuscule(const RootSystem& rs, const std::vector<long>& coeffs);

struct WeightSystem {
  std::shared_ptr<const RootSystem> rs;
  std::vector<long> lambda_coeffs;
  RatVec highest_weight;
  std::vector<RatVec> weights;  // lex-descending; for minuscule reps this is the whole weight system
};

// Weight system of the minuscule representation with the given highest
// weight: the single Weyl orbit. Throws for non-minuscule input.
WeightSystem weight_system(TypeLabel t, int rank, const std::vector<long>& coeffs);
WeightSystem weight_system(std::shared_ptr<const RootSystem> rs, const std::vector<long>& coeffs);

struct ShortRootCombination {
  RatVec target;                                 // a simple root
  std::vector<std::pair<mpz_class, int>> terms;  // coefficient, index into short_roots
};

// Every simple root written as an integer combination of positive short
// roots; each combination is re-verified by plain vector arithmetic.
struct ShortRootCertificate {
  bool all_roots_short = false;  // simply-laced case: the expressions are trivial
  std::vector<RatVec> short_roots;
  std::vector<ShortRootCombination> combos;  // one per simple root, in order
  bool verified = false;
};

ShortRootCertificate short_roots_generate(const RootSystem& rs);

}  // namespace gandg

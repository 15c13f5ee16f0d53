#pragma once

// Exact linear algebra: integer matrices with Hermite-normal-form kernels and
// rational matrices with Gaussian elimination. Kernel bases are canonicalized
// (row HNF: positive pivots, entries above each pivot reduced into [0, pivot))
// so independent computations of the same lattice agree entry for entry.

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "gandg/rational.hpp"

namespace gandg {

using IntVec = std::vector<mpz_class>;

class IntMatrix {
 public:
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static IntMatrix from_rows(const std::vector<IntVec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  mpz_class& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const mpz_class& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  IntVec mul_vec(const IntVec& v) const;

 private:
  int rows_, cols_;
  std::vector<mpz_class> a_;
};

// Canonical basis of the integer kernel {v : A v = 0}. Column elimination with
// a tracked unimodular transform yields a basis; row HNF makes it unique.
// Every returned vector is re-checked against A before returning.
std::vector<IntVec> hnf_kernel(const IntMatrix& a);

// Row Hermite normal form of a full-row-rank integer row set (used to
// canonicalize kernel bases; rows must be independent).
std::vector<IntVec> row_hnf(std::vector<IntVec> rows);

// One integer solution of A x = b, or nullopt when none exists.
std::optional<IntVec> int_solve(const IntMatrix& a, const IntVec& b);

class RatMatrix {
 public:
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static RatMatrix from_rows(const std::vector<RatVec>& rows);
  static RatMatrix from_cols(const std::vector<RatVec>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  RatMatrix transpose() const;
  RatVec mul_vec(const RatVec& v) const;

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

long rational_rank(RatMatrix a);

// Solves A x = b. Deterministic: free variables are set to zero. nullopt when
// the system is inconsistent.
std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b);

// Canonical basis of {x : A x = 0} read off the reduced row echelon form, one
// vector per free column in column order.
std::vector<RatVec> nullspace(const RatMatrix& a);

}  // namespace gandg

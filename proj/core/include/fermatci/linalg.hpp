#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "fermatci/numeric.hpp"

namespace fermatci {

/// Dense row-major matrix over arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

/// Dense row-major matrix over exact rationals (entries kept canonical).
class RatMatrix {
 public:
  RatMatrix(std::size_t rows, std::size_t cols);
  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatMatrix operator*(const RatMatrix& rhs) const;
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> data_;
};

/// U * M * V = D with U, V unimodular and D diagonal with nonnegative entries
/// satisfying the divisibility chain D(0,0) | D(1,1) | ... (zeros trailing).
struct SnfResult {
  IntMatrix U, D, V;
};

/// Deterministic Smith normal form. Pivot choice at every step: the nonzero
/// entry of smallest absolute value in the remaining submatrix, ties broken by
/// lowest (row, col).
SnfResult smith_normal_form(const IntMatrix& m);

/// The kernel of M viewed as a map (Z/d)^cols -> (Z/d)^rows, described by
/// generators (as residue tuples) with their orders; never materialized by
/// enumeration. cardinality == product of the orders.
struct KernelDescription {
  std::int64_t modulus = 0;
  std::vector<ResidueVec> generators;
  std::vector<std::int64_t> orders;  // order of each generator, > 1
  Int cardinality = 1;
};

/// Solves M x == 0 (mod d) structurally via the Smith normal form.
KernelDescription kernel_mod(const IntMatrix& m, std::int64_t modulus);

/// Deterministic basis of the right nullspace of M over Q, derived from the
/// reduced row echelon form (one basis vector per free column, free columns
/// ascending; the free coordinate is set to 1).
std::vector<RatVec> rational_nullspace(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Determinant via exact fraction-free-ish Gaussian elimination.
Rat determinant(const RatMatrix& m);

/// Convenience: exact M * v over Q.
RatVec apply(const RatMatrix& m, const RatVec& v);

}  // namespace fermatci

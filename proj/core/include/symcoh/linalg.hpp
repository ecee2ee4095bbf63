#pragma once

#include <cstddef>
#include <vector>

#include "symcoh/rational.hpp"

namespace symcoh {

using RationalVector = std::vector<Rational>;

/// Dense row-major rational matrix.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank by fraction-free (Bareiss) elimination: each row is scaled to integers,
/// then eliminated with exact integer division only.
std::size_t rank(const RationalMatrix& m);

/// Rank read off the reduced row echelon form; independent route used to cross-check `rank`.
std::size_t rank_rref(const RationalMatrix& m);

struct EchelonForm {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form over the rationals.
EchelonForm rref(const RationalMatrix& m);

/// Basis of {x : m x = 0}. One vector per free column, in increasing column
/// order; each has a 1 in its free column and zeros in the other free columns.
std::vector<RationalVector> nullspace(const RationalMatrix& m);

/// Inverse of a square matrix; throws DomainError when singular.
RationalMatrix inverse(const RationalMatrix& m);

}  // namespace symcoh

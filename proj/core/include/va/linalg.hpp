#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "va/rational.hpp"

namespace va {

/// Dense row-major matrix over the rationals.
class MatrixQ {
 public:
  MatrixQ() = default;
  MatrixQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  MatrixQ(std::size_t rows, std::size_t cols, VectorQ entries);

  static MatrixQ identity(std::size_t k);
  static MatrixQ from_rows(const std::vector<VectorQ>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  VectorQ row(std::size_t r) const;
  void append_row(const VectorQ& row);

  MatrixQ transposed() const;
  MatrixQ operator*(const MatrixQ& rhs) const;
  VectorQ operator*(const VectorQ& v) const;

  friend bool operator==(const MatrixQ&, const MatrixQ&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  VectorQ data_;
};

std::ostream& operator<<(std::ostream& os, const MatrixQ& m);

struct RrefResult {
  /// Reduced row echelon form with the zero rows dropped (rank x cols).
  MatrixQ rref;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  std::size_t cols = 0;

  /// Columns without a pivot, ascending. Their order fixes the canonical
  /// basis of the quotient space.
  std::vector<std::size_t> free_columns() const;
};

/// Fraction-free (Bareiss) forward elimination on the row-cleared integer
/// matrix, followed by rational back substitution.
RrefResult rref(const MatrixQ& m);
std::size_t rank(const MatrixQ& m);
std::vector<VectorQ> kernel_basis(const MatrixQ& m);
Rational determinant(const MatrixQ& m);
MatrixQ inverse(const MatrixQ& m);

/// Coordinates of `v` modulo the row space of `l`, read off at the free
/// columns. Zero exactly when `v` lies in the row space.
VectorQ quotient_coords(const VectorQ& v, const RrefResult& l);
bool in_row_space(const VectorQ& v, const RrefResult& l);

/// Rank of the integer-cleared matrix reduced modulo `prime`. Throws
/// PreconditionError when a denominator vanishes modulo the prime.
std::size_t rank_mod_p(const MatrixQ& m, std::uint64_t prime);

bool is_zero(const VectorQ& v);

}  // namespace va

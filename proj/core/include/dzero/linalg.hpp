#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "dzero/polynomial.hpp"

namespace dzero {

/// Row-major sparse matrix over Q, used for degreewise linear algebra.
class SparseRationalMatrix {
 public:
  using Row = std::vector<std::pair<std::size_t, Rational>>;

  SparseRationalMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}

  std::size_t rows() const noexcept { return data_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  /// Adds `value` to entry (row, col).
  void add(std::size_t row, std::size_t col, const Rational& value);

  Rational at(std::size_t row, std::size_t col) const;

  /// Nonzero entries of one row, sorted by column.
  Row row(std::size_t r) const;

 private:
  std::size_t cols_;
  std::vector<std::map<std::size_t, Rational>> data_;
};

/// Rank over Q by exact sparse Gaussian elimination.
std::size_t rank(const SparseRationalMatrix& m);

}  // namespace dzero

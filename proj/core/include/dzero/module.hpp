#pragma once

#include <cstddef>
#include <vector>

#include "dzero/linalg.hpp"
#include "dzero/polynomial.hpp"

namespace dzero {

/// Graded free module  ⊕_j R(−a_j): generator j sits in internal degree a_j.
class GradedFreeModule {
 public:
  GradedFreeModule(RingPtr ring, std::vector<int> twists);

  static GradedFreeModule zero(RingPtr ring) { return {std::move(ring), {}}; }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<int>& twists() const noexcept { return twists_; }
  std::size_t rank() const noexcept { return twists_.size(); }

  /// Hom(−, R): twists negated.
  GradedFreeModule dual() const;

  /// dim_Q of the degree-d piece, Σ_j dim R_{d − a_j}.
  std::size_t dimension_in_degree(long d) const;

  friend bool operator==(const GradedFreeModule& a, const GradedFreeModule& b) {
    return same_ring(a.ring_, b.ring_) && a.twists_ == b.twists_;
  }

 private:
  RingPtr ring_;
  std::vector<int> twists_;
};

GradedFreeModule direct_sum(const GradedFreeModule& a, const GradedFreeModule& b);

/// Homogeneous map of graded free modules, stored as a dense matrix of
/// polynomials with target-rank rows and source-rank columns.
///
/// Entry (i, j) is zero or homogeneous of degree a_j − b_i, where a are the
/// source twists and b the target twists; the constructor enforces this.
class PolyMatrix {
 public:
  /// `entries` is row-major, size target.rank() * source.rank().
  PolyMatrix(GradedFreeModule source, GradedFreeModule target,
             std::vector<Polynomial> entries);

  static PolyMatrix zero(GradedFreeModule source, GradedFreeModule target);
  static PolyMatrix identity(const GradedFreeModule& m);

  const GradedFreeModule& source() const noexcept { return source_; }
  const GradedFreeModule& target() const noexcept { return target_; }
  const RingPtr& ring() const noexcept { return source_.ring(); }
  std::size_t rows() const noexcept { return target_.rank(); }
  std::size_t cols() const noexcept { return source_.rank(); }

  const Polynomial& at(std::size_t row, std::size_t col) const {
    return entries_[row * cols() + col];
  }
  const std::vector<Polynomial>& entries() const noexcept { return entries_; }

  bool is_zero() const;

  /// Transposed matrix viewed as target∨ → source∨, scaled by `sign`.
  PolyMatrix dual(int sign = 1) const;

  PolyMatrix scaled(const Rational& c) const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.entries_ == b.entries_;
  }

 private:
  GradedFreeModule source_;
  GradedFreeModule target_;
  std::vector<Polynomial> entries_;
};

/// Composite `a ∘ b`; requires b.target() == a.source().
PolyMatrix compose(const PolyMatrix& a, const PolyMatrix& b);

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);

/// Matrix over Q of the degree-d component source_d → target_d, with rows and
/// columns laid out generator by generator, each block in the monomial order
/// of `graded_piece_basis`.
SparseRationalMatrix matrix_in_degree(const PolyMatrix& m, long d);

/// Rank over Q of the degree-d component of `m`.
std::size_t matrix_rank_in_degree(const PolyMatrix& m, long d);

}  // namespace dzero

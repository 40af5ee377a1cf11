#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dzero {

/// Exponent vector of a monomial, one entry per ring variable.
using Monomial = std::vector<std::uint32_t>;

/// Polynomial ring Q[x_1, ..., x_n] with positive integer variable weights.
///
/// Every variable weight is >= 1, so each graded piece R_d is a finite
/// dimensional Q-vector space. Rings are shared between the values built
/// over them through `RingPtr`; two rings are interchangeable when their
/// names and weights coincide.
class GradedRing {
 public:
  GradedRing(std::vector<std::string> variable_names,
             std::vector<int> variable_degrees);

  std::size_t num_variables() const noexcept { return names_.size(); }
  const std::vector<std::string>& variable_names() const noexcept {
    return names_;
  }
  const std::vector<int>& variable_degrees() const noexcept { return degrees_; }

  /// Index of the named variable, if any.
  std::optional<std::size_t> variable_index(const std::string& name) const;

  /// Weighted degree of an exponent vector.
  long weighted_degree(const Monomial& m) const;

  friend bool operator==(const GradedRing& a, const GradedRing& b) {
    return a.names_ == b.names_ && a.degrees_ == b.degrees_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> degrees_;
};

using RingPtr = std::shared_ptr<const GradedRing>;

RingPtr make_ring(std::vector<std::string> variable_names,
                  std::vector<int> variable_degrees);

/// True when both pointers denote the same ring (pointer or content equality).
bool same_ring(const RingPtr& a, const RingPtr& b);

/// Throws RingMismatch unless `same_ring(a, b)`.
void require_same_ring(const RingPtr& a, const RingPtr& b);

/// All monomials of weighted degree `d`, in descending lexicographic order of
/// exponent vectors (x^2, xy, y^2 for Q[x,y]). Empty for d < 0; [1] for d = 0.
std::vector<Monomial> graded_piece_basis(const GradedRing& ring, long d);

/// Number of monomials of weighted degree `d`, counted without enumerating.
std::size_t graded_piece_dimension(const GradedRing& ring, long d);

/// Basis of one graded piece together with a reverse lookup table.
class DegreePiece {
 public:
  DegreePiece(const GradedRing& ring, long d);

  std::size_t size() const noexcept { return basis_.size(); }
  const std::vector<Monomial>& basis() const noexcept { return basis_; }
  std::size_t index_of(const Monomial& m) const { return index_.at(m); }

 private:
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> index_;
};

}  // namespace dzero

#pragma once

#include <map>
#include <vector>

#include "dzero/module.hpp"

namespace dzero {

/// Bounded cochain complex of graded free modules (cohomological indexing).
///
/// Only nonzero terms are stored, and a differential C^i → C^{i+1} is stored
/// exactly when both of its ends are nonzero. Construction checks the
/// homogeneity of every differential and d^{i+1} ∘ d^i = 0 exactly; a
/// violation throws InvariantError.
class Complex {
 public:
  /// The zero complex over `ring`.
  explicit Complex(RingPtr ring);

  /// Missing differentials are zero maps.
  Complex(RingPtr ring, std::map<int, GradedFreeModule> terms,
          std::map<int, PolyMatrix> differentials = {});

  /// `m` placed in cohomological degree `degree`.
  static Complex concentrated(const GradedFreeModule& m, int degree = 0);
  /// The ring itself in degree 0.
  static Complex unit(const RingPtr& ring);

  const RingPtr& ring() const noexcept { return ring_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Lowest and highest nonzero degree; both 0 for the zero complex.
  int min_degree() const noexcept;
  int max_degree() const noexcept;

  /// Nonzero terms keyed by cohomological degree.
  const std::map<int, GradedFreeModule>& terms() const noexcept { return terms_; }
  GradedFreeModule term(int i) const;
  /// d^i : C^i → C^{i+1}.
  PolyMatrix differential(int i) const;

  /// Ranks of the nonzero terms keyed by degree.
  std::map<int, std::size_t> ranks() const;
  std::size_t total_rank() const;

  friend bool operator==(const Complex& a, const Complex& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_ &&
           a.differentials_ == b.differentials_;
  }

 private:
  RingPtr ring_;
  std::map<int, GradedFreeModule> terms_;
  std::map<int, PolyMatrix> differentials_;
};

/// Degreewise map of complexes. Construction checks
/// d_target^i ∘ f^i = f^{i+1} ∘ d_source^i in every degree.
class ChainMap {
 public:
  ChainMap(Complex source, Complex target, std::map<int, PolyMatrix> components);

  static ChainMap identity(const Complex& c);

  const Complex& source() const noexcept { return source_; }
  const Complex& target() const noexcept { return target_; }
  PolyMatrix component(int i) const;

 private:
  Complex source_;
  Complex target_;
  std::map<int, PolyMatrix> components_;
};

/// (c[n])^i = c^{i+n}, differentials multiplied by (−1)^n.
Complex shift(const Complex& c, int n);

/// Mapping cone: degree i is source^{i+1} ⊕ target^i with differential
/// [[−d_source, 0], [f, d_target]].
Complex cone(const ChainMap& f);

/// Total complex of c ⊗ d with d(a⊗b) = da⊗b + (−1)^{|a|} a⊗db.
///
/// In each total degree the summands c^p ⊗ d^q are ordered by increasing p;
/// inside a summand the basis element (j, k) has index j·rank(d^q) + k.
Complex tensor(const Complex& c, const Complex& d);

Complex direct_sum(const Complex& a, const Complex& b);

/// Degree-i term (c^{−i})∨, differential (−1)^{i+1} times the transpose of
/// d^{−i−1}.
Complex dual(const Complex& c);

/// ⊕_{n ≤ min(max_power, rank)} Λ^n F∨ placed in degree −n, zero differential.
/// Generators of Λ^n are the n-subsets of the generators of `f_dual` in
/// lexicographic order, with the sum of the chosen twists.
Complex exterior_algebra(const GradedFreeModule& f_dual, unsigned max_power);

/// n-th symmetric power (characteristic 0) of a complex a concentrated in
/// degrees {−1, 0} whose degree-0 term has rank ≤ 1:
///   Sym^n(a) = ⊕_i Λ^i(a^{−1})[i] ⊗ Sym^{n−i}(a^0).
/// The differential is the derivation induced by a^{−1} → a^0. Throws
/// UnsupportedError for any other shape.
Complex sym_two_term(const Complex& a, unsigned n);

/// Lexicographically ordered k-subsets of {0, ..., n−1}.
std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k);

}  // namespace dzero

#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "dzero/ring.hpp"

namespace dzero {

using Rational = mpq_class;
using Integer = mpz_class;

/// Sparse polynomial with exact rational coefficients over a GradedRing.
///
/// Terms are kept in descending lexicographic order of exponent vectors and
/// zero coefficients are never stored, so the zero polynomial has no terms.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, std::greater<>>;

  explicit Polynomial(RingPtr ring);
  Polynomial(RingPtr ring, Terms terms);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, Monomial m, const Rational& c);

  const RingPtr& ring() const noexcept { return ring_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t num_terms() const noexcept { return terms_.size(); }

  Rational coefficient(const Monomial& m) const;

  /// The zero polynomial counts as homogeneous of every degree.
  bool is_homogeneous() const;
  bool is_homogeneous_of(long d) const;
  /// Weighted degree of a nonzero homogeneous polynomial.
  std::optional<long> degree() const;

  Polynomial derivative(std::size_t variable) const;
  Polynomial pow(unsigned exponent) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }

 private:
  void add_scaled(const Polynomial& other, const Rational& scale);

  RingPtr ring_;
  Terms terms_;
};

/// Canonical text form, e.g. "x^2*y - 3/2*y"; "0" for the zero polynomial.
/// The output is accepted by `parse_poly`.
std::string to_string(const Polynomial& p);

/// Parses the polynomial grammar: rational literals (n or n/m), variable
/// names, + - * ^ with nonnegative integer exponents, and parentheses.
/// Whitespace is insignificant. Throws ParseError with a 0-based position.
Polynomial parse_poly(std::string_view text, const RingPtr& ring);

}  // namespace dzero

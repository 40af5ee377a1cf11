#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dzero/polynomial.hpp"

namespace dzero {

/// Laurent polynomial in t with integer coefficients: the K-polynomial
/// numerator of a graded object. The free module R(−a) has class t^a.
class KClass {
 public:
  KClass() = default;
  explicit KClass(std::map<int, Integer> coefficients);

  static KClass one() { return monomial(0, 1); }
  static KClass monomial(int power, const Integer& coefficient);

  const std::map<int, Integer>& coefficients() const noexcept { return coeffs_; }
  Integer coefficient(int power) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Drops every power above `max_power`.
  KClass truncated(long max_power) const;

  KClass& operator+=(const KClass& other);
  KClass& operator-=(const KClass& other);
  friend KClass operator+(KClass a, const KClass& b) { return a += b; }
  friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
  friend KClass operator*(const KClass& a, const KClass& b);
  friend bool operator==(const KClass& a, const KClass& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::map<int, Integer> coeffs_;
};

/// Ascending powers, e.g. "1 - 2*t + t^2" or "t^-1 + 3"; "0" for zero.
std::string to_string(const KClass& k);

/// Inverse of `to_string`; also accepts any ordering of terms and repeated
/// powers. Throws ParseError.
KClass parse_kclass(std::string_view text);

/// Π_ℓ (1 − t^{d_ℓ}); the empty product is 1.
KClass lambda_minus_one(const std::vector<int>& degrees);

}  // namespace dzero

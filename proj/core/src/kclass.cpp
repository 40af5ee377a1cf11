#include "dzero/kclass.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include "dzero/error.hpp"

namespace dzero {

KClass::KClass(std::map<int, Integer> coefficients) {
  for (auto& [power, c] : coefficients) {
    if (c != 0) coeffs_.emplace(power, std::move(c));
  }
}

KClass KClass::monomial(int power, const Integer& coefficient) {
  return KClass({{power, coefficient}});
}

Integer KClass::coefficient(int power) const {
  auto it = coeffs_.find(power);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

KClass KClass::truncated(long max_power) const {
  KClass out;
  for (const auto& [power, c] : coeffs_) {
    if (power <= max_power) out.coeffs_.emplace(power, c);
  }
  return out;
}

KClass& KClass::operator+=(const KClass& other) {
  for (const auto& [power, c] : other.coeffs_) {
    auto [it, inserted] = coeffs_.try_emplace(power, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

KClass& KClass::operator-=(const KClass& other) {
  for (const auto& [power, c] : other.coeffs_) {
    auto [it, inserted] = coeffs_.try_emplace(power, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

KClass operator*(const KClass& a, const KClass& b) {
  std::map<int, Integer> out;
  for (const auto& [pa, ca] : a.coeffs_) {
    for (const auto& [pb, cb] : b.coeffs_) out[pa + pb] += ca * cb;
  }
  return KClass(std::move(out));
}

std::string to_string(const KClass& k) {
  if (k.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [power, c] : k.coefficients()) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    Integer magnitude = abs(c);
    if (power == 0) {
      os << magnitude.get_str();
      continue;
    }
    if (magnitude != 1) os << magnitude.get_str() << '*';
    os << 't';
    if (power != 1) os << '^' << power;
  }
  return os.str();
}

namespace {

class KClassParser {
 public:
  explicit KClassParser(std::string_view text) : text_(text) {}

  KClass parse() {
    KClass acc;
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    acc += term(negative);
    for (;;) {
      skip_space();
      if (pos_ == text_.size()) return acc;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      acc += term(c == '-');
    }
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Integer integer() {
    skip_space();
    const auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(pos_ == text_.size() ? "unexpected end of input" : "expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  KClass term(bool negative) {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    Integer coeff = 1;
    int power = 0;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = integer();
      skip_space();
      if (pos_ < text_.size() && peek() == '*') {
        ++pos_;
        power = variable_power();
      }
    } else {
      power = variable_power();
    }
    return KClass::monomial(power, negative ? Integer(-coeff) : coeff);
  }

  int variable_power() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    if (peek() != 't') fail("expected 't'");
    ++pos_;
    skip_space();
    if (pos_ == text_.size() || peek() != '^') return 1;
    ++pos_;
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && peek() == '-') {
      negative = true;
      ++pos_;
    }
    const auto start = pos_;
    Integer e = integer();
    if (e > std::numeric_limits<int>::max()) {
      pos_ = start;
      fail("exponent too large");
    }
    const int v = static_cast<int>(e.get_si());
    return negative ? -v : v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

KClass parse_kclass(std::string_view text) { return KClassParser(text).parse(); }

KClass lambda_minus_one(const std::vector<int>& degrees) {
  KClass out = KClass::one();
  for (int d : degrees) out = out * (KClass::one() - KClass::monomial(d, 1));
  return out;
}

}  // namespace dzero

#include "dzero/polynomial.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include "dzero/error.hpp"

namespace dzero {

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw InvariantError("polynomial: null ring");
}

Polynomial::Polynomial(RingPtr ring, Terms terms) : Polynomial(std::move(ring)) {
  const auto n = ring_->num_variables();
  for (auto& [mono, coeff] : terms) {
    if (mono.size() != n) {
      throw InvariantError("polynomial: exponent vector length must equal the number of variables");
    }
    if (coeff != 0) terms_.emplace(mono, coeff);
  }
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Monomial one(ring->num_variables(), 0);
  return monomial(std::move(ring), std::move(one), c);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Monomial m(ring->num_variables(), 0);
  m.at(index) = 1;
  return monomial(std::move(ring), std::move(m), Rational(1));
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const Rational& c) {
  Terms t;
  t.emplace(std::move(m), c);
  return Polynomial(std::move(ring), std::move(t));
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const long d = ring_->weighted_degree(terms_.begin()->first);
  return is_homogeneous_of(d);
}

bool Polynomial::is_homogeneous_of(long d) const {
  for (const auto& [mono, coeff] : terms_) {
    if (ring_->weighted_degree(mono) != d) return false;
  }
  return true;
}

std::optional<long> Polynomial::degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return ring_->weighted_degree(terms_.begin()->first);
}

Polynomial Polynomial::derivative(std::size_t variable) const {
  Terms out;
  for (const auto& [mono, coeff] : terms_) {
    if (mono.at(variable) == 0) continue;
    Monomial m = mono;
    --m[variable];
    out.emplace(std::move(m), coeff * Rational(mono[variable]));
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(ring_, Rational(1));
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

void Polynomial::add_scaled(const Polynomial& other, const Rational& scale) {
  require_same_ring(ring_, other.ring_);
  for (const auto& [mono, coeff] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(mono, coeff * scale);
    if (!inserted) {
      it->second += coeff * scale;
      if (it->second == 0) terms_.erase(it);
    }
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  add_scaled(other, Rational(1));
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  add_scaled(other, Rational(-1));
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [mono, coeff] : terms_) coeff *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  Polynomial out(a.ring_);
  const auto n = a.ring_->num_variables();
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m(n);
      for (std::size_t i = 0; i < n; ++i) m[i] = ma[i] + mb[i];
      Rational c = ca * cb;
      auto [it, inserted] = out.terms_.try_emplace(std::move(m), c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const auto& names = p.ring()->variable_names();
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, coeff] : p.terms()) {
    const bool negative = sgn(coeff) < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    Rational magnitude = abs(coeff);

    std::string mono_text;
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] == 0) continue;
      if (!mono_text.empty()) mono_text += '*';
      mono_text += names[i];
      if (mono[i] > 1) mono_text += '^' + std::to_string(mono[i]);
    }
    if (mono_text.empty()) {
      os << magnitude.get_str();
    } else if (magnitude == 1) {
      os << mono_text;
    } else {
      os << magnitude.get_str() << '*' << mono_text;
    }
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skip_space();
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_space();
      const auto start = pos_;
      Integer e = digits();
      if (e > std::numeric_limits<unsigned>::max()) {
        pos_ = start;
        fail("exponent too large");
      }
      return base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Integer digits() {
    skip_space();
    const auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(pos_ == text_.size() ? "unexpected end of input" : "expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial primary() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) {
        skip_space();
        fail(pos_ == text_.size() ? "unexpected end of input" : "expected ')'");
      }
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = digits();
      Integer den = 1;
      if (accept('/')) {
        skip_space();
        const auto den_pos = pos_;
        den = digits();
        if (den == 0) {
          pos_ = den_pos;
          fail("zero denominator");
        }
      }
      Rational q(num, den);
      q.canonicalize();
      return Polynomial::constant(ring_, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const auto start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      auto index = ring_->variable_index(name);
      if (!index) throw ParseError("unknown variable '" + name + "'", start);
      return Polynomial::variable(ring_, *index);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const RingPtr& ring) {
  return PolyParser(text, ring).parse();
}

}  // namespace dzero

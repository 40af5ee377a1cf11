#include "dzero/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "dzero/error.hpp"

namespace dzero {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s.front());
  if (!std::isalpha(head) && s.front() != '_') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

void enumerate(const GradedRing& ring, std::size_t var, long remaining,
               Monomial& current, std::vector<Monomial>& out) {
  const auto n = ring.num_variables();
  if (var == n) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  const long w = ring.variable_degrees()[var];
  if (var + 1 == n) {
    if (remaining % w == 0) {
      current[var] = static_cast<std::uint32_t>(remaining / w);
      out.push_back(current);
      current[var] = 0;
    }
    return;
  }
  for (long e = remaining / w; e >= 0; --e) {
    current[var] = static_cast<std::uint32_t>(e);
    enumerate(ring, var + 1, remaining - e * w, current, out);
  }
  current[var] = 0;
}

}  // namespace

GradedRing::GradedRing(std::vector<std::string> variable_names,
                       std::vector<int> variable_degrees)
    : names_(std::move(variable_names)), degrees_(std::move(variable_degrees)) {
  if (names_.size() != degrees_.size()) {
    throw InvariantError("ring: one degree per variable is required");
  }
  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (!is_identifier(name)) {
      throw InvariantError("ring: variable names must be nonempty identifiers, got '" +
                           name + "'");
    }
    if (!seen.insert(name).second) {
      throw InvariantError("ring: duplicate variable name '" + name + "'");
    }
  }
  for (int deg : degrees_) {
    if (deg < 1) {
      throw InvariantError("ring: variable degrees must be >= 1");
    }
  }
}

std::optional<std::size_t> GradedRing::variable_index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

long GradedRing::weighted_degree(const Monomial& m) const {
  long d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<long>(m[i]) * degrees_[i];
  return d;
}

RingPtr make_ring(std::vector<std::string> variable_names,
                  std::vector<int> variable_degrees) {
  return std::make_shared<const GradedRing>(std::move(variable_names),
                                            std::move(variable_degrees));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw RingMismatch();
}

std::vector<Monomial> graded_piece_basis(const GradedRing& ring, long d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (ring.num_variables() == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Monomial current(ring.num_variables(), 0);
  enumerate(ring, 0, d, current, out);
  return out;
}

std::size_t graded_piece_dimension(const GradedRing& ring, long d) {
  if (d < 0) return 0;
  // Coefficient of t^d in prod_i 1/(1 - t^{w_i}).
  std::vector<std::size_t> counts(static_cast<std::size_t>(d) + 1, 0);
  counts[0] = 1;
  for (int w : ring.variable_degrees()) {
    for (long k = w; k <= d; ++k) counts[k] += counts[k - w];
  }
  return counts[d];
}

DegreePiece::DegreePiece(const GradedRing& ring, long d)
    : basis_(graded_piece_basis(ring, d)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
}

}  // namespace dzero

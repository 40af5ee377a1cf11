#include "dzero/module.hpp"

#include <map>
#include <string>

#include "dzero/error.hpp"

namespace dzero {

GradedFreeModule::GradedFreeModule(RingPtr ring, std::vector<int> twists)
    : ring_(std::move(ring)), twists_(std::move(twists)) {
  if (!ring_) throw InvariantError("module: null ring");
}

GradedFreeModule GradedFreeModule::dual() const {
  std::vector<int> negated(twists_.size());
  for (std::size_t j = 0; j < twists_.size(); ++j) negated[j] = -twists_[j];
  return {ring_, std::move(negated)};
}

std::size_t GradedFreeModule::dimension_in_degree(long d) const {
  std::size_t total = 0;
  for (int a : twists_) total += graded_piece_dimension(*ring_, d - a);
  return total;
}

GradedFreeModule direct_sum(const GradedFreeModule& a, const GradedFreeModule& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<int> twists = a.twists();
  twists.insert(twists.end(), b.twists().begin(), b.twists().end());
  return {a.ring(), std::move(twists)};
}

PolyMatrix::PolyMatrix(GradedFreeModule source, GradedFreeModule target,
                       std::vector<Polynomial> entries)
    : source_(std::move(source)), target_(std::move(target)), entries_(std::move(entries)) {
  require_same_ring(source_.ring(), target_.ring());
  if (entries_.size() != rows() * cols()) {
    throw InvariantError("matrix: entry count does not match target rank x source rank");
  }
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) {
      const Polynomial& e = at(i, j);
      require_same_ring(e.ring(), source_.ring());
      const long expected = static_cast<long>(source_.twists()[j]) - target_.twists()[i];
      if (!e.is_homogeneous_of(expected)) {
        throw InvariantError("matrix homogeneity: entry (" + std::to_string(i) + ", " +
                             std::to_string(j) + ") = " + to_string(e) +
                             " is not homogeneous of degree " + std::to_string(expected));
      }
    }
  }
}

PolyMatrix PolyMatrix::zero(GradedFreeModule source, GradedFreeModule target) {
  std::vector<Polynomial> entries(source.rank() * target.rank(), Polynomial(source.ring()));
  return {std::move(source), std::move(target), std::move(entries)};
}

PolyMatrix PolyMatrix::identity(const GradedFreeModule& m) {
  std::vector<Polynomial> entries(m.rank() * m.rank(), Polynomial(m.ring()));
  for (std::size_t i = 0; i < m.rank(); ++i) {
    entries[i * m.rank() + i] = Polynomial::constant(m.ring(), Rational(1));
  }
  return {m, m, std::move(entries)};
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

PolyMatrix PolyMatrix::dual(int sign) const {
  std::vector<Polynomial> t;
  t.reserve(entries_.size());
  for (std::size_t j = 0; j < cols(); ++j) {
    for (std::size_t i = 0; i < rows(); ++i) t.push_back(at(i, j) * Rational(sign));
  }
  return {target_.dual(), source_.dual(), std::move(t)};
}

PolyMatrix PolyMatrix::scaled(const Rational& c) const {
  std::vector<Polynomial> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e * c);
  return {source_, target_, std::move(out)};
}

PolyMatrix compose(const PolyMatrix& a, const PolyMatrix& b) {
  if (!(b.target() == a.source())) {
    throw InvariantError("compose: target of the right factor differs from source of the left");
  }
  std::vector<Polynomial> out;
  out.reserve(a.rows() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Polynomial acc(a.ring());
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
        acc += a.at(i, k) * b.at(k, j);
      }
      out.push_back(std::move(acc));
    }
  }
  return {b.source(), a.target(), std::move(out)};
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target())) {
    throw InvariantError("matrix sum: shapes differ");
  }
  std::vector<Polynomial> out;
  out.reserve(a.entries().size());
  for (std::size_t k = 0; k < a.entries().size(); ++k) out.push_back(a.entries()[k] + b.entries()[k]);
  return {a.source(), a.target(), std::move(out)};
}

SparseRationalMatrix matrix_in_degree(const PolyMatrix& m, long d) {
  const GradedRing& ring = *m.ring();
  std::map<long, DegreePiece> pieces;
  auto piece = [&](long degree) -> const DegreePiece& {
    auto it = pieces.find(degree);
    if (it == pieces.end()) it = pieces.emplace(degree, DegreePiece(ring, degree)).first;
    return it->second;
  };

  std::vector<std::size_t> row_offset(m.rows() + 1, 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    row_offset[i + 1] = row_offset[i] + piece(d - m.target().twists()[i]).size();
  }
  std::vector<std::size_t> col_offset(m.cols() + 1, 0);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    col_offset[j + 1] = col_offset[j] + piece(d - m.source().twists()[j]).size();
  }

  SparseRationalMatrix out(row_offset.back(), col_offset.back());
  const auto n = ring.num_variables();
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const auto& source_basis = piece(d - m.source().twists()[j]).basis();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const Polynomial& entry = m.at(i, j);
      if (entry.is_zero()) continue;
      const DegreePiece& target_piece = piece(d - m.target().twists()[i]);
      for (std::size_t s = 0; s < source_basis.size(); ++s) {
        for (const auto& [mono, coeff] : entry.terms()) {
          Monomial product(n);
          for (std::size_t v = 0; v < n; ++v) product[v] = source_basis[s][v] + mono[v];
          out.add(row_offset[i] + target_piece.index_of(product), col_offset[j] + s, coeff);
        }
      }
    }
  }
  return out;
}

std::size_t matrix_rank_in_degree(const PolyMatrix& m, long d) {
  return rank(matrix_in_degree(m, d));
}

}  // namespace dzero

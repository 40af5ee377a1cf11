#include "dzero/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace dzero {

void SparseRationalMatrix::add(std::size_t row, std::size_t col, const Rational& value) {
  if (row >= data_.size() || col >= cols_) throw std::out_of_range("sparse matrix index");
  if (value == 0) return;
  auto& r = data_[row];
  auto [it, inserted] = r.try_emplace(col, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) r.erase(it);
  }
}

Rational SparseRationalMatrix::at(std::size_t row, std::size_t col) const {
  const auto& r = data_.at(row);
  auto it = r.find(col);
  return it == r.end() ? Rational(0) : it->second;
}

SparseRationalMatrix::Row SparseRationalMatrix::row(std::size_t r) const {
  const auto& src = data_.at(r);
  return Row(src.begin(), src.end());
}

namespace {

using Row = SparseRationalMatrix::Row;

// target -= factor * pivot, both sorted by column.
Row subtract_scaled(const Row& target, const Row& pivot, const Rational& factor) {
  Row out;
  out.reserve(target.size() + pivot.size());
  auto a = target.begin();
  auto b = pivot.begin();
  while (a != target.end() || b != pivot.end()) {
    if (b == pivot.end() || (a != target.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == target.end() || b->first < a->first) {
      out.emplace_back(b->first, -factor * b->second);
      ++b;
    } else {
      Rational v = a->second - factor * b->second;
      if (v != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

}  // namespace

std::size_t rank(const SparseRationalMatrix& m) {
  std::vector<Row> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Row row = m.row(r);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const Row& a, const Row& b) { return a.size() < b.size(); });

  // Pivot rows keyed by their leading column; each is normalized to lead 1.
  std::unordered_map<std::size_t, Row> pivots;
  for (auto& row : rows) {
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      Rational factor = row.front().second;
      row = subtract_scaled(row, it->second, factor);
    }
    if (row.empty()) continue;
    Rational lead = row.front().second;
    for (auto& entry : row) entry.second /= lead;
    const auto col = row.front().first;
    pivots.emplace(col, std::move(row));
  }
  return pivots.size();
}

}  // namespace dzero

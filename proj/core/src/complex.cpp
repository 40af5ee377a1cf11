#include "dzero/complex.hpp"

#include <set>
#include <string>

#include "dzero/error.hpp"

namespace dzero {

namespace {

int sign_of_parity(long k) { return (k % 2 == 0) ? 1 : -1; }

// Dense assembly of a block-structured PolyMatrix.
class BlockAssembler {
 public:
  BlockAssembler(GradedFreeModule source, GradedFreeModule target)
      : source_(std::move(source)),
        target_(std::move(target)),
        entries_(source_.rank() * target_.rank(), Polynomial(source_.ring())) {}

  void place(std::size_t row0, std::size_t col0, const PolyMatrix& block, int sign = 1) {
    for (std::size_t i = 0; i < block.rows(); ++i) {
      for (std::size_t j = 0; j < block.cols(); ++j) {
        const Polynomial& e = block.at(i, j);
        if (e.is_zero()) continue;
        entries_[(row0 + i) * source_.rank() + col0 + j] = sign == 1 ? e : e * Rational(sign);
      }
    }
  }

  void set(std::size_t row, std::size_t col, Polynomial value) {
    entries_[row * source_.rank() + col] = std::move(value);
  }

  PolyMatrix finish() && {
    return {std::move(source_), std::move(target_), std::move(entries_)};
  }

 private:
  GradedFreeModule source_;
  GradedFreeModule target_;
  std::vector<Polynomial> entries_;
};

std::set<int> support_union(const Complex& a, const Complex& b) {
  std::set<int> out;
  for (const auto& [i, m] : a.terms()) out.insert(i);
  for (const auto& [i, m] : b.terms()) out.insert(i);
  return out;
}

}  // namespace

Complex::Complex(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw InvariantError("complex: null ring");
}

Complex::Complex(RingPtr ring, std::map<int, GradedFreeModule> terms,
                 std::map<int, PolyMatrix> differentials)
    : Complex(std::move(ring)) {
  for (auto& [i, m] : terms) {
    require_same_ring(ring_, m.ring());
    if (m.rank() > 0) terms_.emplace(i, std::move(m));
  }
  for (auto& [i, d] : differentials) {
    if (!(d.source() == term(i)) || !(d.target() == term(i + 1))) {
      throw InvariantError("complex: differential d^" + std::to_string(i) +
                           " does not map C^" + std::to_string(i) + " to C^" +
                           std::to_string(i + 1));
    }
    if (d.rows() > 0 && d.cols() > 0) differentials_.emplace(i, std::move(d));
  }
  for (const auto& [i, d] : differentials_) {
    auto next = differentials_.find(i + 1);
    if (next == differentials_.end()) continue;
    if (!compose(next->second, d).is_zero()) {
      throw InvariantError("complex: d^" + std::to_string(i + 1) + " o d^" + std::to_string(i) +
                           " != 0");
    }
  }
}

Complex Complex::concentrated(const GradedFreeModule& m, int degree) {
  return Complex(m.ring(), {{degree, m}});
}

Complex Complex::unit(const RingPtr& ring) {
  return concentrated(GradedFreeModule(ring, {0}), 0);
}

int Complex::min_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.begin()->first;
}

int Complex::max_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

GradedFreeModule Complex::term(int i) const {
  auto it = terms_.find(i);
  return it == terms_.end() ? GradedFreeModule::zero(ring_) : it->second;
}

PolyMatrix Complex::differential(int i) const {
  auto it = differentials_.find(i);
  if (it != differentials_.end()) return it->second;
  return PolyMatrix::zero(term(i), term(i + 1));
}

std::map<int, std::size_t> Complex::ranks() const {
  std::map<int, std::size_t> out;
  for (const auto& [i, m] : terms_) out.emplace(i, m.rank());
  return out;
}

std::size_t Complex::total_rank() const {
  std::size_t total = 0;
  for (const auto& [i, m] : terms_) total += m.rank();
  return total;
}

ChainMap::ChainMap(Complex source, Complex target, std::map<int, PolyMatrix> components)
    : source_(std::move(source)), target_(std::move(target)) {
  require_same_ring(source_.ring(), target_.ring());
  for (auto& [i, f] : components) {
    if (!(f.source() == source_.term(i)) || !(f.target() == target_.term(i))) {
      throw InvariantError("chain map: component f^" + std::to_string(i) +
                           " does not map source^i to target^i");
    }
    if (f.rows() > 0 && f.cols() > 0) components_.emplace(i, std::move(f));
  }
  std::set<int> degrees = support_union(source_, target_);
  std::set<int> checked;
  for (int i : degrees) {
    for (int k : {i - 1, i}) {
      if (!checked.insert(k).second) continue;
      PolyMatrix lhs = compose(target_.differential(k), component(k));
      PolyMatrix rhs = compose(component(k + 1), source_.differential(k));
      if (!(lhs + rhs.scaled(Rational(-1))).is_zero()) {
        throw InvariantError("chain map: d o f != f o d in degree " + std::to_string(k));
      }
    }
  }
}

ChainMap ChainMap::identity(const Complex& c) {
  std::map<int, PolyMatrix> comps;
  for (const auto& [i, m] : c.terms()) comps.emplace(i, PolyMatrix::identity(m));
  return {c, c, std::move(comps)};
}

PolyMatrix ChainMap::component(int i) const {
  auto it = components_.find(i);
  if (it != components_.end()) return it->second;
  return PolyMatrix::zero(source_.term(i), target_.term(i));
}

Complex shift(const Complex& c, int n) {
  std::map<int, GradedFreeModule> terms;
  for (const auto& [i, m] : c.terms()) terms.emplace(i - n, m);
  std::map<int, PolyMatrix> diffs;
  const int sign = sign_of_parity(n);
  for (const auto& [i, m] : c.terms()) {
    diffs.emplace(i - n, c.differential(i).scaled(Rational(sign)));
  }
  return {c.ring(), std::move(terms), std::move(diffs)};
}

Complex cone(const ChainMap& f) {
  const Complex& s = f.source();
  const Complex& t = f.target();
  std::set<int> degrees;
  for (const auto& [i, m] : s.terms()) degrees.insert(i - 1);
  for (const auto& [i, m] : t.terms()) degrees.insert(i);

  std::map<int, GradedFreeModule> terms;
  for (int i : degrees) terms.emplace(i, direct_sum(s.term(i + 1), t.term(i)));

  auto term_at = [&](int i) {
    auto it = terms.find(i);
    return it == terms.end() ? GradedFreeModule::zero(s.ring()) : it->second;
  };

  std::map<int, PolyMatrix> diffs;
  for (int i : degrees) {
    GradedFreeModule src = term_at(i);
    GradedFreeModule dst = term_at(i + 1);
    const std::size_t s_rank_src = s.term(i + 1).rank();
    const std::size_t s_rank_dst = s.term(i + 2).rank();
    BlockAssembler block(src, dst);
    block.place(0, 0, s.differential(i + 1), -1);
    block.place(s_rank_dst, 0, f.component(i + 1));
    block.place(s_rank_dst, s_rank_src, t.differential(i));
    diffs.emplace(i, std::move(block).finish());
  }
  return {s.ring(), std::move(terms), std::move(diffs)};
}

Complex tensor(const Complex& c, const Complex& d) {
  require_same_ring(c.ring(), d.ring());
  const RingPtr& ring = c.ring();
  if (c.is_zero() || d.is_zero()) return Complex(ring);

  // Layout of each total degree: (p, offset) for every summand c^p ⊗ d^{n−p}.
  std::map<int, std::map<int, std::size_t>> layout;
  std::map<int, GradedFreeModule> terms;
  for (int n = c.min_degree() + d.min_degree(); n <= c.max_degree() + d.max_degree(); ++n) {
    std::vector<int> twists;
    std::map<int, std::size_t> offsets;
    for (const auto& [p, cp] : c.terms()) {
      GradedFreeModule dq = d.term(n - p);
      if (dq.rank() == 0) continue;
      offsets.emplace(p, twists.size());
      for (int a : cp.twists()) {
        for (int b : dq.twists()) twists.push_back(a + b);
      }
    }
    if (twists.empty()) continue;
    layout.emplace(n, std::move(offsets));
    terms.emplace(n, GradedFreeModule(ring, std::move(twists)));
  }

  std::map<int, PolyMatrix> diffs;
  for (const auto& [n, offsets] : layout) {
    auto next = layout.find(n + 1);
    if (next == layout.end()) continue;
    BlockAssembler block(terms.at(n), terms.at(n + 1));
    for (const auto& [p, src_off] : offsets) {
      const int q = n - p;
      const std::size_t rank_cp = c.term(p).rank();
      const std::size_t rank_dq = d.term(q).rank();
      // dc ⊗ id into (p+1, q)
      if (auto it = next->second.find(p + 1); it != next->second.end()) {
        const PolyMatrix dc = c.differential(p);
        for (std::size_t j2 = 0; j2 < dc.rows(); ++j2) {
          for (std::size_t j = 0; j < rank_cp; ++j) {
            const Polynomial& e = dc.at(j2, j);
            if (e.is_zero()) continue;
            for (std::size_t k = 0; k < rank_dq; ++k) {
              block.set(it->second + j2 * rank_dq + k, src_off + j * rank_dq + k, e);
            }
          }
        }
      }
      // (−1)^p id ⊗ dd into (p, q+1)
      if (auto it = next->second.find(p); it != next->second.end()) {
        const PolyMatrix dd = d.differential(q);
        const std::size_t rank_dq1 = dd.rows();
        const Rational sign(sign_of_parity(p));
        for (std::size_t j = 0; j < rank_cp; ++j) {
          for (std::size_t k2 = 0; k2 < rank_dq1; ++k2) {
            for (std::size_t k = 0; k < rank_dq; ++k) {
              const Polynomial& e = dd.at(k2, k);
              if (e.is_zero()) continue;
              block.set(it->second + j * rank_dq1 + k2, src_off + j * rank_dq + k, e * sign);
            }
          }
        }
      }
    }
    diffs.emplace(n, std::move(block).finish());
  }
  return {ring, std::move(terms), std::move(diffs)};
}

Complex direct_sum(const Complex& a, const Complex& b) {
  require_same_ring(a.ring(), b.ring());
  std::set<int> degrees = support_union(a, b);
  std::map<int, GradedFreeModule> terms;
  for (int i : degrees) terms.emplace(i, direct_sum(a.term(i), b.term(i)));
  std::map<int, PolyMatrix> diffs;
  for (int i : degrees) {
    BlockAssembler block(direct_sum(a.term(i), b.term(i)),
                         direct_sum(a.term(i + 1), b.term(i + 1)));
    block.place(0, 0, a.differential(i));
    block.place(a.term(i + 1).rank(), a.term(i).rank(), b.differential(i));
    diffs.emplace(i, std::move(block).finish());
  }
  return {a.ring(), std::move(terms), std::move(diffs)};
}

Complex dual(const Complex& c) {
  std::map<int, GradedFreeModule> terms;
  for (const auto& [i, m] : c.terms()) terms.emplace(-i, m.dual());
  std::map<int, PolyMatrix> diffs;
  for (const auto& [i, m] : c.terms()) {
    // dual degree j = −i receives from dual degree j − 1 = −(i+1), i.e. d^i transposed.
    const int j = -i - 1;
    diffs.emplace(j, c.differential(i).dual(sign_of_parity(j + 1)));
  }
  return {c.ring(), std::move(terms), std::move(diffs)};
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> current(k);
  for (std::size_t i = 0; i < k; ++i) current[i] = i;
  for (;;) {
    out.push_back(current);
    std::size_t i = k;
    while (i > 0 && current[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t j = i; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

Complex exterior_algebra(const GradedFreeModule& f_dual, unsigned max_power) {
  const std::size_t top = std::min<std::size_t>(max_power, f_dual.rank());
  std::map<int, GradedFreeModule> terms;
  for (std::size_t n = 0; n <= top; ++n) {
    std::vector<int> twists;
    for (const auto& subset : subsets_of_size(f_dual.rank(), n)) {
      int sum = 0;
      for (std::size_t g : subset) sum += f_dual.twists()[g];
      twists.push_back(sum);
    }
    terms.emplace(-static_cast<int>(n), GradedFreeModule(f_dual.ring(), std::move(twists)));
  }
  return {f_dual.ring(), std::move(terms)};
}

Complex sym_two_term(const Complex& a, unsigned n) {
  for (const auto& [i, m] : a.terms()) {
    if (i != -1 && i != 0) {
      throw UnsupportedError("sym_two_term: complex must be concentrated in degrees -1 and 0");
    }
  }
  const GradedFreeModule f = a.term(-1);
  const GradedFreeModule base = a.term(0);
  if (base.rank() > 1) {
    throw UnsupportedError("sym_two_term: degree-0 term must have rank <= 1");
  }
  const RingPtr& ring = a.ring();
  const std::size_t r = f.rank();
  const bool has_base = base.rank() == 1;
  const int base_twist = has_base ? base.twists()[0] : 0;
  const PolyMatrix sigma = a.differential(-1);

  // Λ^i F ⊗ Sym^{n−i}(a^0) sits in degree −i; without a^0 only i = n survives.
  const std::size_t lowest = has_base ? 0 : n;
  const std::size_t highest = std::min<std::size_t>(n, r);
  std::map<int, GradedFreeModule> terms;
  std::map<std::size_t, std::vector<std::vector<std::size_t>>> subsets;
  for (std::size_t i = lowest; i <= highest; ++i) {
    subsets[i] = subsets_of_size(r, i);
    std::vector<int> twists;
    for (const auto& s : subsets[i]) {
      int sum = static_cast<int>(n - i) * base_twist;
      for (std::size_t g : s) sum += f.twists()[g];
      twists.push_back(sum);
    }
    terms.emplace(-static_cast<int>(i), GradedFreeModule(ring, std::move(twists)));
  }

  std::map<int, PolyMatrix> diffs;
  if (has_base) {
    for (std::size_t i = std::max<std::size_t>(lowest, 1); i <= highest; ++i) {
      const auto& src = subsets[i];
      const auto& dst = subsets[i - 1];
      std::map<std::vector<std::size_t>, std::size_t> dst_index;
      for (std::size_t k = 0; k < dst.size(); ++k) dst_index.emplace(dst[k], k);
      BlockAssembler block(terms.at(-static_cast<int>(i)), terms.at(-static_cast<int>(i) + 1));
      for (std::size_t col = 0; col < src.size(); ++col) {
        for (std::size_t m = 0; m < src[col].size(); ++m) {
          const Polynomial& s = sigma.at(0, src[col][m]);
          if (s.is_zero()) continue;
          std::vector<std::size_t> rest = src[col];
          rest.erase(rest.begin() + static_cast<long>(m));
          block.set(dst_index.at(rest), col, m % 2 == 0 ? s : -s);
        }
      }
      diffs.emplace(-static_cast<int>(i), std::move(block).finish());
    }
  }
  return {ring, std::move(terms), std::move(diffs)};
}

}  // namespace dzero

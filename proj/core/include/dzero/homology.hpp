#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "dzero/complex.hpp"
#include "dzero/zerolocus.hpp"

namespace dzero {

/// dim_Q H^i(C)_d for every cohomological degree i and 0 ≤ d ≤ cutoff.
/// Zero dimensions are not stored.
struct HilbertTable {
  long cutoff = 0;
  std::map<std::pair<int, long>, std::size_t> entries;

  std::size_t at(int i, long d) const;
  /// Nonzero dimensions of H^i keyed by internal degree.
  std::map<long, std::size_t> row(int i) const;
  /// Cohomological degrees with some nonzero entry.
  std::set<int> degrees() const;

  friend bool operator==(const HilbertTable& a, const HilbertTable& b) {
    return a.cutoff == b.cutoff && a.entries == b.entries;
  }
};

/// Exact homology dimensions, each cell from two degreewise ranks:
/// dim H^i_d = dim C^i_d − rank(d^i)_d − rank(d^{i−1})_d.
/// `threads` = 0 uses every hardware thread; the result does not depend on it.
HilbertTable homology_dimensions(const Complex& c, long cutoff, unsigned threads = 1);

/// First cell, in lexicographic (i, d) order, where two tables differ.
struct TableDiscrepancy {
  int degree;
  long internal_degree;
  std::size_t dim_a;
  std::size_t dim_b;
};

struct TableComparison {
  bool pass;
  std::optional<TableDiscrepancy> witness;
  HilbertTable table_a;
  HilbertTable table_b;
};

TableComparison compare_tables(HilbertTable a, HilbertTable b);

/// PASS when the Hilbert tables of a and b agree up to `cutoff`.
TableComparison same_homology_dims(const Complex& a, const Complex& b, long cutoff,
                                   unsigned threads = 1);

struct RegularityWitness {
  int degree;
  long internal_degree;
  std::size_t dim;
};

/// REGULAR_UP_TO_CUTOFF when no negative-degree Koszul homology appears in
/// internal degrees ≤ cutoff. This is not a proof of regularity.
struct RegularityVerdict {
  bool regular_up_to_cutoff;
  std::optional<RegularityWitness> witness;
  HilbertTable table;
};

RegularityVerdict is_regular_up_to(const ZeroLocusPresentation& p, long cutoff,
                                   unsigned threads = 1);

/// 2 × the sum of every declared degree of p.
long default_cutoff(const ZeroLocusPresentation& p);

/// Σ_i (−1)^i dim (C^i)_d.
long euler_characteristic_of_terms(const Complex& c, long d);

/// Σ_i (−1)^i dim H^i_d.
long euler_characteristic_of_table(const HilbertTable& t, long d);

}  // namespace dzero

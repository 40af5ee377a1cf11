#pragma once

// Test-only reference computations. Nothing here calls the degreewise
// assembly (matrix_in_degree) or the sparse elimination of the library.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "dzero/dzero.hpp"

namespace dzero::oracle {

/// Monomials of weighted degree d found by scanning the exponent box
/// [0, d]^n, unordered.
std::vector<Monomial> brute_force_monomials(const GradedRing& ring, long d);

/// Rank of a dense rational matrix by fraction-free Bareiss elimination over
/// the integers (rows are scaled to integers first).
std::size_t bareiss_rank(std::vector<std::vector<Rational>> rows);

/// Rank of the degree-d piece of m, assembled by multiplying basis monomials
/// with the polynomial entries and reading off coefficients.
std::size_t rank_in_degree(const PolyMatrix& m, long d);

/// dim H^i_d for all i and 0 ≤ d ≤ cutoff, from `rank_in_degree`.
std::map<std::pair<int, long>, std::size_t> homology(const Complex& c, long cutoff);

/// dim_Q (R / (f_1, ..., f_r))_d for homogeneous generators.
std::size_t quotient_dimension(const RingPtr& ring, const std::vector<SectionEntry>& gens, long d);

}  // namespace dzero::oracle

#pragma once

#include <string>
#include <vector>

#include "dzero/complex.hpp"
#include "dzero/homology.hpp"
#include "dzero/kclass.hpp"
#include "dzero/zerolocus.hpp"

namespace dzero {

/// Σ_j t^{a_j} for ⊕_j R(−a_j).
KClass kclass_of_module(const GradedFreeModule& m);

/// Σ_i (−1)^i [C^i].
KClass kclass_of_complex(const Complex& c);

/// Π_k (1 − t^{deg x_k}), the numerator turning Hilbert series into
/// K-polynomials.
KClass hilbert_numerator_factor(const GradedRing& ring);

/// Homology route to the class of a complex: Σ_i (−1)^i HS(H^i) truncated at
/// the table cutoff, times Π_k(1 − t^{deg x_k}), truncated again. Equals the
/// K-class up to t^{cutoff} for complexes whose terms have nonnegative twists.
KClass kclass_via_homology(const HilbertTable& table, const GradedRing& ring);

/// Degreewise Euler characteristic check: for 0 ≤ d ≤ cutoff,
/// Σ_i (−1)^i dim H^i_d equals the t^d coefficient of [C]·Π_k 1/(1 − t^{deg x_k}),
/// the series side expanded from enumerated monomial bases.
bool chi_invariance_holds(const Complex& c, const HilbertTable& table);

/// [O^vir] = [Kos(p)].
KClass virtual_class(const ZeroLocusPresentation& p);

struct VirtualClassReport {
  KClass direct;
  KClass via_homology;
  long cutoff;
  HilbertTable table;
  /// direct and via_homology agree through t^cutoff.
  bool routes_agree;
};

VirtualClassReport virtual_class_checked(const ZeroLocusPresentation& p, long cutoff,
                                         unsigned threads = 1);

/// Outcome of an exact Laurent-polynomial identity lhs = rhs.
struct KIdentityVerdict {
  bool pass;
  KClass lhs;
  KClass rhs;
  std::string note;
};

/// [m ⊗ Kos(p)] = [m] · λ₋₁(all declared degrees of p).
KIdentityVerdict verify_quantum_lefschetz(const ZeroLocusPresentation& p, const Complex& m);

/// u*u_*O_T against O_T ⊗ Λ•F∨: compares the Hilbert tables of
/// Kos(p) ⊗ Kos(s) and Kos(p) ⊗ Λ•(⊕_ℓ R(−d_ℓ)) where s is the section
/// part of p (the ambient Kos(g) is the base of u).
TableComparison verify_excess(const ZeroLocusPresentation& p, long cutoff, unsigned threads = 1);

/// Hilbert tables of sym_cofib_invariants(p, rank) against Kos(p).
TableComparison verify_sym_ga(const ZeroLocusPresentation& p, long cutoff, unsigned threads = 1);

/// Virtual pullback along the zero locus of the section part of p:
/// κ ↦ κ · λ₋₁(section degrees).
KClass vpull(const ZeroLocusPresentation& p, const KClass& kappa);

/// Homology route to vpull: alternating Hilbert series of
/// H^*(representative ⊗ Kos(s)) times Π(1 − t^{deg x}), truncated at cutoff.
/// `representative` must have nonnegative twists.
KClass vpull_via_homology(const ZeroLocusPresentation& p, const Complex& representative,
                          long cutoff, unsigned threads = 1);

struct StrongFactorizationVerdict {
  bool pass;
  long cutoff;
  KClass total_direct;     ///< [Kos(g ∪ s)]
  KClass total_homology;   ///< Σ_i (−1)^i [π_i O_T] from homology
  KClass ambient_homology; ///< Σ_i (−1)^i [π_i O_M] from homology
  KClass euler;            ///< λ₋₁(section degrees)
  KClass product;          ///< ambient_homology · euler
};

/// Checks Σ(−1)^i[π_i O_T] = Σ(−1)^i[π_i O_M] · λ₋₁(F∨) for a derived
/// ambient M = Kos(g). Throws UnsupportedError when p has no ambient entries.
StrongFactorizationVerdict verify_strong_factorization(const ZeroLocusPresentation& p,
                                                       unsigned threads = 1);

}  // namespace dzero

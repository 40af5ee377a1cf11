#pragma once

#include <vector>

#include "dzero/complex.hpp"

namespace dzero {

/// One component s_ℓ of a section of the free bundle ⊕_ℓ R(d_ℓ), together
/// with its declared twist d_ℓ. Zero components carry their degree explicitly.
struct SectionEntry {
  Polynomial poly;
  int degree;
};

/// Affine presentation of a derived zero locus.
///
/// The ambient is Kos(ambient) over Spec R (the classical affine space when
/// `ambient` is empty); the zero locus is presented by Kos(ambient ∪ section)
/// and its truncation is R/(ambient, section).
class ZeroLocusPresentation {
 public:
  /// Throws InvariantError unless every entry is homogeneous of its declared
  /// degree and every declared degree is ≥ 1.
  ZeroLocusPresentation(RingPtr ring, std::vector<SectionEntry> ambient,
                        std::vector<SectionEntry> section);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<SectionEntry>& ambient() const noexcept { return ambient_; }
  const std::vector<SectionEntry>& section() const noexcept { return section_; }

  std::size_t section_rank() const noexcept { return section_.size(); }
  std::vector<int> section_degrees() const;
  std::vector<int> ambient_degrees() const;
  /// Ambient degrees followed by section degrees.
  std::vector<int> all_degrees() const;

  /// Presentation of the ambient alone (its entries become the section).
  ZeroLocusPresentation ambient_presentation() const;
  /// Same ambient, section followed by `more`.
  ZeroLocusPresentation with_appended_section(const std::vector<SectionEntry>& more) const;
  /// Ambient and section merged into a single section over affine space.
  ZeroLocusPresentation flattened() const;

 private:
  RingPtr ring_;
  std::vector<SectionEntry> ambient_;
  std::vector<SectionEntry> section_;
};

/// Two-term complex R(−d) → R in degrees −1, 0 with differential s.
Complex cofiber_of_entry(const RingPtr& ring, const SectionEntry& e);

/// Koszul complex of a list of entries: ⊗_ℓ [R(−d_ℓ) → R], factors taken in
/// list order. The empty list gives R in degree 0.
Complex koszul_complex(const RingPtr& ring, const std::vector<SectionEntry>& entries);

/// Kos(ambient ∪ section).
Complex koszul_complex(const ZeroLocusPresentation& p);

/// cofib(s̃) = [F∨ → R] in degrees −1, 0 for the section part of `p`.
Complex section_cofiber(const ZeroLocusPresentation& p);

struct SymCofibResult {
  Complex complex;
  /// True when n_max < rank(section): the colimit has not stabilized and the
  /// result is a truncated Koszul complex.
  bool truncated;
};

/// Model of Sym(cofib(s̃))^{G_a}.
///
/// Sym(cofib(s̃)) = Λ•F∨ ⊗ Q[t] with d(e_ℓ) = s_ℓ·t. Giving both e_ℓ and t
/// auxiliary weight 1, the weight-0 part of the localization at t is the
/// colimit of Sym^n(cofib(s̃))·t^{−n} along multiplication by t, which is
/// computed here from Sym^{n_max}. For n_max ≥ rank the result agrees term
/// by term with Kos(s). Ambient entries are handled by tensoring with Kos(g).
SymCofibResult sym_cofib_invariants(const ZeroLocusPresentation& p, unsigned n_max);

/// Multiplication by t as a chain map Sym^n(a) → Sym^{n+1}(a) for a two-term
/// complex a with rank-1 degree-0 part of twist 0; an isomorphism once
/// n ≥ rank a^{−1}.
ChainMap multiplication_by_t(const Complex& a, unsigned n);

/// Presentation of the critical locus of a homogeneous w of degree ≥ 2:
/// section (∂w/∂x_i) with declared degrees deg w − deg x_i.
ZeroLocusPresentation critical_locus(const Polynomial& w);

/// Jacobian ∂s_ℓ/∂x_i as a map ⊕_ℓ R(−d_ℓ) → ⊕_i R(−deg x_i); rows are
/// variables and columns are section entries.
PolyMatrix jacobian(const ZeroLocusPresentation& p);

/// [⊕_ℓ R(−d_ℓ) --J--> ⊕_i R(−deg x_i)] in degrees −1, 0, tensored with
/// Kos(s). Only smooth ambients (no ambient entries) are supported.
Complex cotangent_complex(const ZeroLocusPresentation& p);

/// Derived restriction u*m = m ⊗_R Kos(p).
Complex restrict(const Complex& m, const ZeroLocusPresentation& p);

}  // namespace dzero

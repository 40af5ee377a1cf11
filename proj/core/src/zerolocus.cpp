#include "dzero/zerolocus.hpp"

#include <string>

#include "dzero/error.hpp"

namespace dzero {

namespace {

void validate_entries(const RingPtr& ring, const std::vector<SectionEntry>& entries,
                      const char* block) {
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto& e = entries[k];
    require_same_ring(ring, e.poly.ring());
    const std::string where = std::string(block) + " entry " + std::to_string(k);
    if (e.degree < 1) {
      throw InvariantError(where + ": declared degree must be >= 1, got " +
                           std::to_string(e.degree));
    }
    if (!e.poly.is_homogeneous_of(e.degree)) {
      throw InvariantError(where + ": " + to_string(e.poly) +
                           " is not homogeneous of declared degree " + std::to_string(e.degree));
    }
  }
}

std::vector<int> degrees_of(const std::vector<SectionEntry>& entries) {
  std::vector<int> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.degree);
  return out;
}

}  // namespace

ZeroLocusPresentation::ZeroLocusPresentation(RingPtr ring, std::vector<SectionEntry> ambient,
                                             std::vector<SectionEntry> section)
    : ring_(std::move(ring)), ambient_(std::move(ambient)), section_(std::move(section)) {
  if (!ring_) throw InvariantError("presentation: null ring");
  validate_entries(ring_, ambient_, "ambient");
  validate_entries(ring_, section_, "section");
}

std::vector<int> ZeroLocusPresentation::section_degrees() const { return degrees_of(section_); }

std::vector<int> ZeroLocusPresentation::ambient_degrees() const { return degrees_of(ambient_); }

std::vector<int> ZeroLocusPresentation::all_degrees() const {
  std::vector<int> out = ambient_degrees();
  for (int d : section_degrees()) out.push_back(d);
  return out;
}

ZeroLocusPresentation ZeroLocusPresentation::ambient_presentation() const {
  return {ring_, {}, ambient_};
}

ZeroLocusPresentation ZeroLocusPresentation::with_appended_section(
    const std::vector<SectionEntry>& more) const {
  std::vector<SectionEntry> s = section_;
  s.insert(s.end(), more.begin(), more.end());
  return {ring_, ambient_, std::move(s)};
}

ZeroLocusPresentation ZeroLocusPresentation::flattened() const {
  std::vector<SectionEntry> s = ambient_;
  s.insert(s.end(), section_.begin(), section_.end());
  return {ring_, {}, std::move(s)};
}

Complex cofiber_of_entry(const RingPtr& ring, const SectionEntry& e) {
  GradedFreeModule source(ring, {e.degree});
  GradedFreeModule target(ring, {0});
  PolyMatrix d(source, target, {e.poly});
  return Complex(ring, {{-1, source}, {0, target}}, {{-1, d}});
}

Complex koszul_complex(const RingPtr& ring, const std::vector<SectionEntry>& entries) {
  Complex out = Complex::unit(ring);
  for (const auto& e : entries) out = tensor(out, cofiber_of_entry(ring, e));
  return out;
}

Complex koszul_complex(const ZeroLocusPresentation& p) {
  return koszul_complex(p.ring(), p.flattened().section());
}

Complex section_cofiber(const ZeroLocusPresentation& p) {
  const RingPtr& ring = p.ring();
  GradedFreeModule f_dual(ring, p.section_degrees());
  GradedFreeModule base(ring, {0});
  std::vector<Polynomial> row;
  for (const auto& e : p.section()) row.push_back(e.poly);
  PolyMatrix cosection(f_dual, base, std::move(row));
  return Complex(ring, {{-1, f_dual}, {0, base}}, {{-1, cosection}});
}

ChainMap multiplication_by_t(const Complex& a, unsigned n) {
  const GradedFreeModule base = a.term(0);
  if (base.rank() != 1 || base.twists()[0] != 0) {
    throw UnsupportedError("multiplication_by_t: degree-0 term must be R");
  }
  Complex source = sym_two_term(a, n);
  Complex target = sym_two_term(a, n + 1);
  std::map<int, PolyMatrix> components;
  for (const auto& [i, m] : source.terms()) {
    // Λ^{-i}F ⊗ t^{n+i} ↦ Λ^{-i}F ⊗ t^{n+1+i}: same subset basis on both sides.
    components.emplace(i, PolyMatrix(m, target.term(i), PolyMatrix::identity(m).entries()));
  }
  return {std::move(source), std::move(target), std::move(components)};
}

SymCofibResult sym_cofib_invariants(const ZeroLocusPresentation& p, unsigned n_max) {
  const Complex cofib = section_cofiber(p);
  // The directed system Sym^0 → Sym^1 → ... → Sym^{n_max} along ·t; each map
  // is checked to be a chain map on construction, and its colimit (weight 0
  // after inverting t) is the last stage.
  for (unsigned n = 0; n < n_max; ++n) (void)multiplication_by_t(cofib, n);
  Complex invariants = sym_two_term(cofib, n_max);
  if (!p.ambient().empty()) {
    invariants = tensor(koszul_complex(p.ring(), p.ambient()), invariants);
  }
  return {std::move(invariants), n_max < p.section_rank()};
}

ZeroLocusPresentation critical_locus(const Polynomial& w) {
  const auto deg = w.degree();
  if (!deg) {
    throw InvariantError("critical_locus: potential " + to_string(w) +
                         " is not a nonzero homogeneous polynomial");
  }
  if (*deg < 2) {
    throw InvariantError("critical_locus: potential must have degree >= 2");
  }
  const RingPtr& ring = w.ring();
  std::vector<SectionEntry> section;
  for (std::size_t i = 0; i < ring->num_variables(); ++i) {
    const int d = static_cast<int>(*deg) - ring->variable_degrees()[i];
    if (d < 1) {
      throw InvariantError("critical_locus: partial derivative by " + ring->variable_names()[i] +
                           " would have degree " + std::to_string(d) + " < 1");
    }
    section.push_back({w.derivative(i), d});
  }
  return {ring, {}, std::move(section)};
}

PolyMatrix jacobian(const ZeroLocusPresentation& p) {
  const RingPtr& ring = p.ring();
  GradedFreeModule source(ring, p.section_degrees());
  GradedFreeModule target(ring, ring->variable_degrees());
  std::vector<Polynomial> entries;
  entries.reserve(source.rank() * target.rank());
  for (std::size_t i = 0; i < ring->num_variables(); ++i) {
    for (const auto& e : p.section()) entries.push_back(e.poly.derivative(i));
  }
  return {std::move(source), std::move(target), std::move(entries)};
}

Complex cotangent_complex(const ZeroLocusPresentation& p) {
  if (!p.ambient().empty()) {
    throw UnsupportedError("cotangent_complex: derived ambients are not supported");
  }
  PolyMatrix j = jacobian(p);
  Complex relative(p.ring(), {{-1, j.source()}, {0, j.target()}}, {{-1, j}});
  return tensor(relative, koszul_complex(p));
}

Complex restrict(const Complex& m, const ZeroLocusPresentation& p) {
  require_same_ring(m.ring(), p.ring());
  return tensor(m, koszul_complex(p));
}

}  // namespace dzero

#include <gtest/gtest.h>

#include <algorithm>

#include "dzero/dzero.hpp"
#include "generators.hpp"

namespace dzero {
namespace {

Polynomial P(const char* text, const RingPtr& ring) { return parse_poly(text, ring); }

Complex kos(const RingPtr& ring, std::vector<std::pair<const char*, int>> entries) {
  std::vector<SectionEntry> s;
  for (auto [text, d] : entries) s.push_back({P(text, ring), d});
  return koszul_complex(ring, s);
}

// c(−k): every twist raised by k, differentials unchanged.
Complex twisted(const Complex& c, int k) {
  std::map<int, GradedFreeModule> terms;
  std::map<int, PolyMatrix> diffs;
  auto raise = [k](const GradedFreeModule& m) {
    std::vector<int> t = m.twists();
    for (int& v : t) v += k;
    return GradedFreeModule(m.ring(), t);
  };
  for (const auto& [i, m] : c.terms()) terms.emplace(i, raise(m));
  for (const auto& [i, m] : c.terms()) {
    PolyMatrix d = c.differential(i);
    diffs.emplace(i, PolyMatrix(raise(d.source()), raise(d.target()), d.entries()));
  }
  return {c.ring(), terms, diffs};
}

// Multiplication by a homogeneous g of degree k: c(−k) → c.
ChainMap multiplication(const Complex& c, const Polynomial& g, int k) {
  Complex source = twisted(c, k);
  std::map<int, PolyMatrix> comps;
  for (const auto& [i, m] : c.terms()) {
    std::vector<Polynomial> e(m.rank() * m.rank(), Polynomial(c.ring()));
    for (std::size_t j = 0; j < m.rank(); ++j) e[j * m.rank() + j] = g;
    comps.emplace(i, PolyMatrix(source.term(i), m, e));
  }
  return {source, c, comps};
}

std::map<int, std::vector<int>> sorted_twists(const Complex& c) {
  std::map<int, std::vector<int>> out;
  for (const auto& [i, m] : c.terms()) {
    auto t = m.twists();
    std::sort(t.begin(), t.end());
    out.emplace(i, t);
  }
  return out;
}

TEST(Complex, RejectsNonzeroSquare) {
  auto ring = make_ring({"x"}, {1});
  GradedFreeModule r0(ring, {0}), r1(ring, {1}), r2(ring, {2});
  PolyMatrix a(r2, r1, {P("x", ring)});
  PolyMatrix b(r1, r0, {P("x", ring)});
  EXPECT_THROW(Complex(ring, {{-2, r2}, {-1, r1}, {0, r0}}, {{-2, a}, {-1, b}}), InvariantError);
  EXPECT_THROW(Complex(ring, {{-1, r1}, {0, r0}}, {{-1, a}}), InvariantError);
}

TEST(ChainMap, RejectsNonCommutingSquare) {
  auto ring = make_ring({"x"}, {1});
  Complex k = kos(ring, {{"x", 1}});
  std::map<int, PolyMatrix> comps;
  comps.emplace(0, PolyMatrix::identity(k.term(0)));
  EXPECT_THROW(ChainMap(k, k, comps), InvariantError);
  EXPECT_NO_THROW(ChainMap::identity(k));
}

TEST(Shift, Examples) {
  auto ring = make_ring({"x"}, {1});
  Complex c = kos(ring, {{"x", 1}});
  EXPECT_EQ(shift(c, 0), c);
  EXPECT_EQ(shift(shift(c, 1), -1), c);
  Complex r = shift(Complex::unit(ring), -1);
  EXPECT_EQ(r.ranks(), (std::map<int, std::size_t>{{1, 1}}));
  Complex s = shift(c, 1);
  EXPECT_EQ(s.ranks(), (std::map<int, std::size_t>{{-2, 1}, {-1, 1}}));
  EXPECT_EQ(s.differential(-2).at(0, 0), P("-x", ring));
}

TEST(Cone, OfCosection) {
  auto ring = make_ring({"x"}, {1});
  GradedFreeModule f(ring, {1}), o(ring, {0});
  ChainMap s(Complex::concentrated(f), Complex::concentrated(o), {{0, PolyMatrix(f, o, {P("x", ring)})}});
  Complex c = cone(s);
  EXPECT_EQ(c, kos(ring, {{"x", 1}}));
}

TEST(Cone, OfZeroMapSplits) {
  auto ring = make_ring({"x", "y"}, {1, 1});
  GradedFreeModule f(ring, {1, 2}), o(ring, {0});
  ChainMap zero(Complex::concentrated(f), Complex::concentrated(o), {});
  Complex c = cone(zero);
  EXPECT_EQ(c, direct_sum(Complex::concentrated(o), shift(Complex::concentrated(f), 1)));
  EXPECT_TRUE(c.differential(-1).is_zero());
}

TEST(Cone, OfIdentityIsExact) {
  gen::Rng rng(5);
  for (int trial = 0; trial < 15; ++trial) {
    RingPtr ring = gen::small_ring(rng);
    Complex c = gen::complex(rng, ring);
    HilbertTable h = homology_dimensions(cone(ChainMap::identity(c)), 6);
    EXPECT_TRUE(h.entries.empty()) << "trial " << trial;
  }
}

TEST(Cone, KClassIsAdditiveProperty) {
  gen::Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    RingPtr ring = gen::small_ring(rng);
    Complex c = gen::complex(rng, ring);
    std::uniform_int_distribution<int> deg(0, 2);
    const int k = deg(rng);
    ChainMap f = multiplication(c, gen::homogeneous(rng, ring, k, 2, true), k);
    EXPECT_EQ(kclass_of_complex(cone(f)),
              kclass_of_complex(f.target()) - kclass_of_complex(f.source()));
  }
}

TEST(Tensor, KoszulFactorsMultiply) {
  auto ring = make_ring({"x", "y"}, {1, 1});
  Complex kx = kos(ring, {{"x", 1}});
  Complex ky = kos(ring, {{"y", 1}});
  Complex t = tensor(kx, ky);
  EXPECT_EQ(t.ranks(), (std::map<int, std::size_t>{{-2, 1}, {-1, 2}, {0, 1}}));
  EXPECT_EQ(t, kos(ring, {{"x", 1}, {"y", 1}}));
  EXPECT_EQ(t.differential(-1).at(0, 0), P("x", ring));
  EXPECT_EQ(t.differential(-1).at(0, 1), P("y", ring));
  EXPECT_EQ(t.differential(-2).at(0, 0), P("-y", ring));
  EXPECT_EQ(t.differential(-2).at(1, 0), P("x", ring));
}

TEST(Tensor, UnitLaw) {
  gen::Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    RingPtr ring = gen::small_ring(rng);
    Complex c = gen::complex(rng, ring);
    EXPECT_EQ(tensor(c, Complex::unit(ring)), c);
    EXPECT_EQ(tensor(Complex::unit(ring), c), c);
    EXPECT_TRUE(tensor(c, Complex(ring)).is_zero());
  }
}

TEST(Tensor, SignRuleGivesSquareZero) {
  auto ring = make_ring({"x", "y"}, {1, 1});
  EXPECT_NO_THROW(tensor(kos(ring, {{"x*y", 2}}), kos(ring, {{"x^2", 2}})));
}

TEST(Tensor, AssociativeOnTwistsProperty) {
  gen::Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    RingPtr ring = gen::small_ring(rng);
    Complex a = gen::complex(rng, ring);
    Complex b = gen::complex(rng, ring);
    Complex c = gen::complex(rng, ring);
    EXPECT_EQ(sorted_twists(tensor(tensor(a, b), c)), sorted_twists(tensor(a, tensor(b, c))));
    EXPECT_EQ(kclass_of_complex(tensor(a, b)), kclass_of_complex(a) * kclass_of_complex(b));
  }
}

TEST(Tensor, RingMismatch) {
  auto r1 = make_ring({"x"}, {1});
  auto r2 = make_ring({"y"}, {1});
  EXPECT_THROW(tensor(Complex::unit(r1), Complex::unit(r2)), RingMismatch);
}

TEST(ExteriorAlgebra, Examples) {
  auto ring = make_ring({"x"}, {1});
  Complex e1 = exterior_algebra(GradedFreeModule(ring, {1}), 5);
  EXPECT_EQ(sorted_twists(e1), (std::map<int, std::vector<int>>{{-1, {1}}, {0, {0}}}));
  Complex e2 = exterior_algebra(GradedFreeModule(ring, {1, 2}), 5);
  EXPECT_EQ(sorted_twists(e2), (std::map<int, std::vector<int>>{{-2, {3}}, {-1, {1, 2}}, {0, {0}}}));
  Complex e0 = exterior_algebra(GradedFreeModule::zero(ring), 5);
  EXPECT_EQ(e0, Complex::unit(ring));
  Complex capped = exterior_algebra(GradedFreeModule(ring, {1, 2, 3}), 1);
  EXPECT_EQ(capped.ranks(), (std::map<int, std::size_t>{{-1, 3}, {0, 1}}));
}

TEST(ExteriorAlgebra, LexicographicSubsets) {
  EXPECT_EQ(subsets_of_size(4, 2),
            (std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(subsets_of_size(3, 0), (std::vector<std::vector<std::size_t>>{{}}));
  EXPECT_TRUE(subsets_of_size(2, 3).empty());
}

TEST(SymTwoTerm, FirstPowerIsIdentity) {
  auto ring = make_ring({"x"}, {1});
  Complex a = kos(ring, {{"x", 1}});
  EXPECT_EQ(sym_two_term(a, 1), a);
  EXPECT_EQ(sym_two_term(a, 0), Complex::unit(ring));
}

TEST(SymTwoTerm, ZeroSection) {
  auto ring = make_ring({"x"}, {1});
  Complex a = kos(ring, {{"0", 1}});
  Complex s = sym_two_term(a, 2);
  EXPECT_EQ(s.ranks(), (std::map<int, std::size_t>{{-1, 1}, {0, 1}}));
  EXPECT_TRUE(s.differential(-1).is_zero());
}

TEST(SymTwoTerm, RankTwoSquare) {
  auto ring = make_ring({"x", "y"}, {1, 1});
  Complex a = kos(ring, {{"x", 1}, {"y", 1}});
  // kos(x, y) is not two-term; the cofiber of the cosection (x y) is.
  GradedFreeModule f(ring, {1, 1}), o(ring, {0});
  Complex cofib(ring, {{-1, f}, {0, o}}, {{-1, PolyMatrix(f, o, {P("x", ring), P("y", ring)})}});
  Complex s2 = sym_two_term(cofib, 2);
  EXPECT_EQ(s2.ranks(), (std::map<int, std::size_t>{{-2, 1}, {-1, 2}, {0, 1}}));
  EXPECT_EQ(sorted_twists(s2), sorted_twists(a));
  EXPECT_THROW(sym_two_term(a, 2), UnsupportedError);
}

TEST(SymTwoTerm, BinomialRanksAndChiProperty) {
  gen::Rng rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    RingPtr ring = gen::small_ring(rng);
    auto entries = gen::section(rng, ring, 4, 2);
    std::vector<int> degs;
    std::vector<Polynomial> row;
    for (const auto& e : entries) {
      degs.push_back(e.degree);
      row.push_back(e.poly);
    }
    GradedFreeModule f(ring, degs), o(ring, {0});
    Complex cofib(ring, {{-1, f}, {0, o}}, {{-1, PolyMatrix(f, o, row)}});
    std::uniform_int_distribution<unsigned> pick(0, 5);
    const unsigned n = pick(rng);
    Complex s = sym_two_term(cofib, n);
    const std::size_t r = degs.size();
    for (std::size_t i = 0; i <= std::min<std::size_t>(n, r); ++i) {
      const auto expected = subsets_of_size(r, i).size();
      EXPECT_EQ(s.term(-static_cast<int>(i)).rank(), expected);
    }
    HilbertTable h = homology_dimensions(s, 5);
    EXPECT_TRUE(chi_invariance_holds(s, h));
  }
}

TEST(SymTwoTerm, RejectsUnsupportedShapes) {
  auto ring = make_ring({"x"}, {1});
  EXPECT_THROW(sym_two_term(Complex::concentrated(GradedFreeModule(ring, {0, 0})), 2),
               UnsupportedError);
  EXPECT_THROW(sym_two_term(Complex::concentrated(GradedFreeModule(ring, {0}), 1), 2),
               UnsupportedError);
}

TEST(Dual, Examples) {
  auto ring = make_ring({"x"}, {1});
  EXPECT_EQ(dual(Complex::concentrated(GradedFreeModule(ring, {2}))),
            Complex::concentrated(GradedFreeModule(ring, {-2})));
  Complex d = dual(kos(ring, {{"x", 1}}));
  EXPECT_EQ(sorted_twists(d), (std::map<int, std::vector<int>>{{0, {0}}, {1, {-1}}}));
}

// With the (−1)^{i+1} sign rule the double dual is c with every differential
// negated, which (−1)^i on C^i identifies with c.
TEST(Dual, InvolutionUpToCanonicalSign) {
  gen::Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    RingPtr ring = gen::small_ring(rng);
    Complex c = gen::complex(rng, ring);
    Complex dd = dual(dual(c));
    EXPECT_EQ(dd.terms(), c.terms());
    for (const auto& [i, m] : c.terms()) {
      EXPECT_EQ(dd.differential(i), c.differential(i).scaled(Rational(-1)));
    }
    std::map<int, PolyMatrix> signs;
    for (const auto& [i, m] : c.terms()) {
      signs.emplace(i, PolyMatrix::identity(m).scaled(Rational(i % 2 == 0 ? 1 : -1)));
    }
    EXPECT_NO_THROW(ChainMap(c, dd, signs));
  }
}

TEST(DirectSum, KClassAdds) {
  gen::Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    RingPtr ring = gen::small_ring(rng);
    Complex a = gen::complex(rng, ring);
    Complex b = gen::complex(rng, ring);
    EXPECT_EQ(kclass_of_complex(direct_sum(a, b)), kclass_of_complex(a) + kclass_of_complex(b));
  }
}

}  // namespace
}  // namespace dzero

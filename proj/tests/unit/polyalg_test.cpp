#include <gtest/gtest.h>

#include "dzero/dzero.hpp"
#include "generators.hpp"
#include "oracle.hpp"

namespace dzero {
namespace {

RingPtr qxy() { return make_ring({"x", "y"}, {1, 1}); }

TEST(GradedRing, RejectsBadVariables) {
  EXPECT_THROW(make_ring({"x", "x"}, {1, 1}), InvariantError);
  EXPECT_THROW(make_ring({""}, {1}), InvariantError);
  EXPECT_THROW(make_ring({"1x"}, {1}), InvariantError);
  EXPECT_THROW(make_ring({"x"}, {0}), InvariantError);
  EXPECT_THROW(make_ring({"x", "y"}, {1}), InvariantError);
}

TEST(ParsePoly, DirectDenotation) {
  auto ring = qxy();
  Polynomial p = parse_poly("x^2*y - 3/2*y", ring);
  Polynomial::Terms expected;
  expected.emplace(Monomial{2, 1}, Rational(1));
  expected.emplace(Monomial{0, 1}, Rational(-3, 2));
  EXPECT_EQ(p.terms(), expected);
}

TEST(ParsePoly, ZeroIsEmpty) {
  EXPECT_TRUE(parse_poly("0", qxy()).is_zero());
  EXPECT_TRUE(parse_poly("x - x", qxy()).is_zero());
}

TEST(ParsePoly, SyntaxErrorPosition) {
  auto ring = make_ring({"x"}, {1});
  try {
    parse_poly("x + ", ring);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(ParsePoly, UnknownVariable) {
  try {
    parse_poly("x + zz", qxy());
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
    EXPECT_NE(std::string(e.what()).find("zz"), std::string::npos);
  }
}

TEST(ParsePoly, GrammarCorners) {
  auto ring = qxy();
  EXPECT_EQ(parse_poly("(x + y)^2", ring), parse_poly("x^2 + 2*x*y + y^2", ring));
  EXPECT_EQ(parse_poly("-(-x)", ring), parse_poly("x", ring));
  EXPECT_EQ(parse_poly(" 4 / 6 * x ", ring), parse_poly("2/3*x", ring));
  EXPECT_EQ(parse_poly("x^0", ring), parse_poly("1", ring));
  EXPECT_THROW(parse_poly("1/0", ring), ParseError);
  EXPECT_THROW(parse_poly("x^-1", ring), ParseError);
  EXPECT_THROW(parse_poly("2x", ring), ParseError);
  EXPECT_THROW(parse_poly("(x + y", ring), ParseError);
  EXPECT_THROW(parse_poly("", ring), ParseError);
  EXPECT_THROW(parse_poly("x/2", ring), ParseError);
}

TEST(ParsePoly, PrintFormat) {
  auto ring = qxy();
  EXPECT_EQ(to_string(parse_poly("-3/2*y + y*x^2", ring)), "x^2*y - 3/2*y");
  EXPECT_EQ(to_string(parse_poly("-x + 1", ring)), "-x + 1");
  EXPECT_EQ(to_string(Polynomial(ring)), "0");
}

TEST(ParsePoly, PrintParseRoundTripProperty) {
  gen::Rng rng(1234);
  for (int trial = 0; trial < 300; ++trial) {
    RingPtr ring = gen::small_ring(rng);
    Polynomial p = gen::polynomial(rng, ring, 4, 5);
    const std::string text = to_string(p);
    Polynomial q = parse_poly(text, ring);
    ASSERT_EQ(p, q) << text;
    ASSERT_EQ(to_string(q), text);
  }
}

TEST(Polynomial, CommutativeRingAxiomsProperty) {
  gen::Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    RingPtr ring = gen::small_ring(rng);
    Polynomial a = gen::polynomial(rng, ring, 3, 3);
    Polynomial b = gen::polynomial(rng, ring, 3, 3);
    Polynomial c = gen::polynomial(rng, ring, 3, 3);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a - a, Polynomial(ring));
    ASSERT_EQ(a * Polynomial::constant(ring, Rational(1)), a);
  }
}

TEST(Polynomial, HomogeneityAndDerivative) {
  auto ring = make_ring({"x", "y"}, {1, 2});
  Polynomial p = parse_poly("x^2 + y", ring);
  EXPECT_TRUE(p.is_homogeneous_of(2));
  EXPECT_EQ(p.degree(), 2);
  EXPECT_FALSE(parse_poly("x + y", ring).is_homogeneous());
  EXPECT_EQ(p.derivative(0), parse_poly("2*x", ring));
  EXPECT_EQ(p.derivative(1), parse_poly("1", ring));
  EXPECT_TRUE(Polynomial(ring).is_homogeneous_of(7));
}

TEST(GradedPieceBasis, Enumeration) {
  auto ring = qxy();
  EXPECT_EQ(graded_piece_basis(*ring, 2), (std::vector<Monomial>{{2, 0}, {1, 1}, {0, 2}}));
  auto weighted = make_ring({"x", "y"}, {1, 2});
  EXPECT_EQ(graded_piece_basis(*weighted, 2), (std::vector<Monomial>{{2, 0}, {0, 1}}));
  EXPECT_EQ(graded_piece_basis(*ring, 0), (std::vector<Monomial>{{0, 0}}));
  EXPECT_TRUE(graded_piece_basis(*ring, -1).empty());
}

TEST(GradedPieceBasis, GeneratingFunctionProperty) {
  // Σ_d #basis_d t^d = Π_i 1/(1 − t^{w_i}), expanded by repeated series
  // multiplication with 1 + t^w + t^{2w} + ...
  const std::vector<std::vector<int>> weights = {{1}, {1, 1}, {1, 2}, {2, 3}, {1, 1, 2}, {1, 2, 3, 5}};
  const long cutoff = 25;
  for (const auto& w : weights) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < w.size(); ++i) names.push_back("v" + std::to_string(i));
    auto ring = make_ring(names, w);
    std::vector<long> series(cutoff + 1, 0);
    series[0] = 1;
    for (int wi : w) {
      std::vector<long> next(cutoff + 1, 0);
      for (long d = 0; d <= cutoff; ++d) {
        for (long k = 0; d + k * wi <= cutoff; ++k) next[d + k * wi] += series[d];
      }
      series = next;
    }
    for (long d = 0; d <= cutoff; ++d) {
      const auto basis = graded_piece_basis(*ring, d);
      ASSERT_EQ(static_cast<long>(basis.size()), series[d]) << "degree " << d;
      ASSERT_EQ(graded_piece_dimension(*ring, d), basis.size());
      ASSERT_TRUE(std::is_sorted(basis.begin(), basis.end(), std::greater<>()));
    }
  }
}

TEST(PolyMatrix, RejectsInhomogeneousEntry) {
  auto ring = qxy();
  GradedFreeModule src(ring, {1});
  GradedFreeModule dst(ring, {0});
  EXPECT_THROW(PolyMatrix(src, dst, {parse_poly("x^2", ring)}), InvariantError);
  EXPECT_THROW(PolyMatrix(src, dst, {}), InvariantError);
  EXPECT_NO_THROW(PolyMatrix(src, dst, {parse_poly("x - 2*y", ring)}));
}

TEST(MatrixRank, HandElimination) {
  // (x x): R(−1)^2 → R in degree 1 maps Q^2 → Q by [1 1].
  auto ring = make_ring({"x"}, {1});
  PolyMatrix m(GradedFreeModule(ring, {1, 1}), GradedFreeModule(ring, {0}),
               {parse_poly("x", ring), parse_poly("x", ring)});
  EXPECT_EQ(matrix_rank_in_degree(m, 1), 1u);
  EXPECT_EQ(matrix_rank_in_degree(m, 0), 0u);
  EXPECT_EQ(matrix_rank_in_degree(m, -3), 0u);
}

TEST(MatrixRank, IdentityAndZero) {
  auto ring = make_ring({"x", "y"}, {1, 2});
  GradedFreeModule m(ring, {2, 2, 3});
  for (long d = -1; d <= 8; ++d) {
    EXPECT_EQ(matrix_rank_in_degree(PolyMatrix::identity(m), d), m.dimension_in_degree(d));
    EXPECT_EQ(matrix_rank_in_degree(PolyMatrix::zero(m, m), d), 0u);
  }
}

TEST(MatrixRank, BoundedByDimensionsAndMatchesOracleProperty) {
  gen::Rng rng(7);
  for (int trial = 0; trial < 120; ++trial) {
    RingPtr ring = gen::small_ring(rng);
    std::uniform_int_distribution<int> rank(1, 3);
    std::uniform_int_distribution<int> twist(0, 3);
    std::vector<int> t(rank(rng)), s(rank(rng));
    for (int& v : t) v = twist(rng);
    for (int& v : s) v = 3 + twist(rng);
    GradedFreeModule src(ring, s), dst(ring, t);
    std::vector<Polynomial> entries;
    for (int b : t) {
      for (int a : s) entries.push_back(gen::homogeneous(rng, ring, a - b, 3, true));
    }
    PolyMatrix m(src, dst, entries);
    for (long d = 0; d <= 8; ++d) {
      const auto r = matrix_rank_in_degree(m, d);
      ASSERT_LE(r, std::min(src.dimension_in_degree(d), dst.dimension_in_degree(d)));
      ASSERT_EQ(r, oracle::rank_in_degree(m, d)) << "trial " << trial << " degree " << d;
    }
  }
}

TEST(SparseRank, SmallCases) {
  SparseRationalMatrix m(3, 3);
  m.add(0, 0, Rational(1));
  m.add(0, 1, Rational(2));
  m.add(1, 0, Rational(2));
  m.add(1, 1, Rational(4));
  m.add(2, 2, Rational(1, 3));
  EXPECT_EQ(rank(m), 2u);
  m.add(2, 2, Rational(-1, 3));
  EXPECT_EQ(rank(m), 1u);
  EXPECT_EQ(rank(SparseRationalMatrix(0, 5)), 0u);
}

}  // namespace
}  // namespace dzero

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "quadgenus/family.hpp"
#include "support.hpp"

using namespace quadgenus;
using Kind = FamilyAtom::Kind;

TEST(FamilyExpr, ParsesProducts) {
  const FamilyExpr e = parse_family_expr("K(4,4) x C(6)");
  ASSERT_EQ(e.factors.size(), 2u);
  EXPECT_EQ(e.factors[0], (FamilyAtom{Kind::complete_bipartite, 4, 4}));
  EXPECT_EQ(e.factors[1], (FamilyAtom{Kind::cycle, 6, 0}));

  const FamilyExpr three = parse_family_expr("Q(2,4)xP(4)xP(4)");
  ASSERT_EQ(three.factors.size(), 3u);
  EXPECT_EQ(three.factors[0], (FamilyAtom{Kind::cube, 2, 4}));
  EXPECT_EQ(three.factors[2], (FamilyAtom{Kind::path, 4, 0}));
}

TEST(FamilyExpr, WhitespaceAndUppercaseSeparator) {
  EXPECT_EQ(parse_family_expr("  K( 4 , 4 )X C(6) "), parse_family_expr("K(4,4)xC(6)"));
}

TEST(FamilyExpr, RoundTripsThroughToString) {
  std::mt19937_64 rng(21);
  const char* names = "KCPQ";
  for (int trial = 0; trial < 100; ++trial) {
    std::string text;
    const auto len = testkit::pick(rng, 1, 4);
    for (std::uint64_t k = 0; k < len; ++k) {
      const char c = names[testkit::pick(rng, 0, 3)];
      text += (k ? "x" : "") + std::string(1, c) + "(" + std::to_string(testkit::pick(rng, 1, 9));
      if (c == 'K' || c == 'Q') text += "," + std::to_string(testkit::pick(rng, 1, 9));
      text += ")";
    }
    const FamilyExpr e = parse_family_expr(text);
    EXPECT_EQ(parse_family_expr(to_string(e)), e) << text;
  }
}

TEST(FamilyExpr, ParseErrorsCarryOffsets) {
  auto offset_of = [](const char* text) -> std::size_t {
    try {
      parse_family_expr(text);
    } catch (const ParseError& e) {
      EXPECT_EQ(e.kind(), ErrorKind::parse);
      return e.offset();
    }
    ADD_FAILURE() << "no parse error for " << text;
    return 0;
  };
  EXPECT_EQ(offset_of("Z(4)"), 0u);
  EXPECT_EQ(offset_of("K(4)"), 3u);
  EXPECT_EQ(offset_of("C(6) + C(4)"), 5u);
  EXPECT_EQ(offset_of("C(6"), 3u);
  EXPECT_EQ(offset_of("C()"), 2u);
  EXPECT_EQ(offset_of(""), 0u);
  EXPECT_EQ(offset_of("C(6)x"), 5u);
  EXPECT_EQ(offset_of("C(99999999)"), 2u);
}

TEST(FamilyExpr, OddCycleParsesButDoesNotBuild) {
  const FamilyExpr e = parse_family_expr("C(5)");
  EXPECT_EQ(e.factors[0].first, 5);
  try {
    build_family(e);
    FAIL() << "C(5) built";
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::invalid_parameter);
  }
}

TEST(BuildFamily, Examples) {
  EXPECT_EQ(build_family("Q(1,4)").edges(), make_complete_bipartite(4, 4).edges());
  const Graph q24 = build_family("Q(2,4)");
  EXPECT_EQ(q24.vertex_count(), 64u);
  EXPECT_EQ(q24.edge_count(), 256u);
  const Graph g = build_family("K(4,4) x C(6)");
  EXPECT_EQ(g.vertex_count(), 48u);
  EXPECT_EQ(g.edge_count(), 144u);
}

TEST(BuildFamily, HypercubeFromQ1) {
  // Q(n,1) is the n-cube: 2^n vertices, n 2^(n-1) edges
  for (int n = 1; n <= 6; ++n) {
    const Graph g = build_family("Q(" + std::to_string(n) + ",1)");
    EXPECT_EQ(g.vertex_count(), std::size_t{1} << n);
    EXPECT_EQ(g.edge_count(), static_cast<std::size_t>(n) << (n - 1));
  }
}

TEST(BuildFamily, CubeCounts) {
  // n = 2^{2i} r^i and m = i 2^{2i} r^{i+1} for Q_i^{(2r)}
  for (int i = 1; i <= 3; ++i)
    for (int r = 1; r <= 2; ++r) {
      const Graph g = build_family("Q(" + std::to_string(i) + "," + std::to_string(2 * r) + ")");
      std::size_t n = 1, m = static_cast<std::size_t>(i);
      for (int k = 0; k < i; ++k) n *= 4 * static_cast<std::size_t>(r);
      m *= n * static_cast<std::size_t>(r);
      EXPECT_EQ(g.vertex_count(), n);
      EXPECT_EQ(g.edge_count(), m);
    }
}

TEST(BuildFamily, RejectsBadAtoms) {
  EXPECT_THROW(build_family("Q(0,4)"), Error);
  EXPECT_THROW(build_family("P(1)"), Error);
  EXPECT_THROW(build_family("K(0,2)"), Error);
  EXPECT_THROW(build_family(FamilyExpr{}), Error);
}

TEST(FamilyParams, Aggregates) {
  const FamilyParams p{1, 2, {2, 3, 4}};
  EXPECT_EQ(p.j(), 3);
  EXPECT_EQ(p.product_m(), 24);
  EXPECT_EQ(p.inverse_sum(), Rational(13, 12));
}

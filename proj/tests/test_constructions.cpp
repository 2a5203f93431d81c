#include <gtest/gtest.h>

#include <random>

#include "quadgenus/constructions.hpp"
#include "quadgenus/family.hpp"
#include "support.hpp"

using namespace quadgenus;

namespace {

// 1 + m/4 - n/2 from vertex and edge counts worked out in the test, along
// with an independent re-trace of the faces.
void expect_minimal_quadrilateral(const ConstructionResult& res, std::int64_t n, std::int64_t m) {
  ASSERT_EQ(4 + m - 2 * n >= 0, true);
  ASSERT_EQ((4 + m - 2 * n) % 4, 0);
  const std::int64_t genus = (4 + m - 2 * n) / 4;
  EXPECT_EQ(static_cast<std::int64_t>(res.embedding.vertex_count()), n);
  EXPECT_EQ(static_cast<std::int64_t>(res.embedding.edge_count()), m);
  const auto lengths = testkit::face_lengths(res.embedding.rotations());
  EXPECT_EQ(lengths, std::vector<std::size_t>(static_cast<std::size_t>(m / 2), 4));
  EXPECT_EQ(testkit::genus_by_hand(res.embedding), genus);
  EXPECT_EQ(res.certificate.genus, genus);
  EXPECT_TRUE(res.certificate.quadrilateral);
  EXPECT_TRUE(res.certificate.minimal);
  EXPECT_EQ(res.certificate.f, m / 2);
}

testkit::Counts cube_counts(int i, int r) {
  testkit::Counts c{1, 0};
  for (int k = 0; k < i; ++k) c = testkit::product_counts(c, {4 * r, 4 * r * r});
  return c;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::internal;
}

}  // namespace

TEST(EmbedK2r2r, Examples) {
  const std::int64_t genus[] = {0, 1, 4};
  for (int r = 1; r <= 3; ++r) {
    const ConstructionResult res = embed_K2r2r(r);
    expect_minimal_quadrilateral(res, 4 * r, 4 * r * r);
    EXPECT_EQ(res.certificate.genus, genus[r - 1]);
    EXPECT_EQ(res.reservoir.families.size(), static_cast<std::size_t>(2 * r));
    EXPECT_TRUE(res.trace.empty());
  }
}

TEST(EmbedK2r2r, LargerPartsStillQuadrilateral) {
  for (int r = 4; r <= 6; ++r) {
    const Embedding e = k2r2r_rotation_scheme(r);
    EXPECT_EQ(testkit::face_lengths(e.rotations()), std::vector<std::size_t>(static_cast<std::size_t>(2 * r * r), 4));
  }
  EXPECT_EQ(kind_of([] { embed_K2r2r(0); }), ErrorKind::invalid_parameter);
}

TEST(EmbedCube, Examples) {
  expect_minimal_quadrilateral(embed_cube(1, 2), 8, 16);
  const ConstructionResult torus = embed_cube(2, 1);
  expect_minimal_quadrilateral(torus, 16, 32);
  EXPECT_EQ(torus.certificate.genus, 1);
  const ConstructionResult q = embed_cube(2, 2);
  expect_minimal_quadrilateral(q, 64, 256);
  EXPECT_EQ(q.certificate.genus, 33);
  EXPECT_EQ(q.certificate.f, 128);
  EXPECT_EQ(q.reservoir.families.size(), 4u);
  for (const auto& fam : q.reservoir.families) {
    EXPECT_EQ(fam.faces.size(), 16u);
    EXPECT_TRUE(covers_exactly(fam, all_vertices(64)));
  }
}

TEST(EmbedCube, DeeperCubes) {
  for (auto [i, r] : {std::pair{3, 1}, std::pair{4, 1}, std::pair{3, 2}, std::pair{2, 3}}) {
    const auto c = cube_counts(i, r);
    const ConstructionResult res = embed_cube(i, r);
    expect_minimal_quadrilateral(res, c.n, c.m);
    const std::string expr = "Q(" + std::to_string(i) + "," + std::to_string(2 * r) + ")";
    EXPECT_EQ(res.embedding.graph().edges(), build_family(expr).edges()) << expr;
    // each step copies the trace into 4r copies and adds (2r)^2 links of n_prev/4 handles
    std::size_t handles = 0;
    std::int64_t n_prev = 4 * r;
    for (int k = 1; k < i; ++k) {
      handles = static_cast<std::size_t>(4 * r) * handles + static_cast<std::size_t>(4 * r * r * n_prev / 4);
      n_prev *= 4 * r;
    }
    EXPECT_EQ(res.trace.size(), handles);
  }
  EXPECT_EQ(kind_of([] { embed_cube(0, 1); }), ErrorKind::invalid_parameter);
}

TEST(EmbedCubeCycle, Examples) {
  const ConstructionResult a = embed_cube_cycle(1, 1, 2);
  expect_minimal_quadrilateral(a, 16, 32);
  EXPECT_EQ(a.certificate.genus, 1);
  const ConstructionResult b = embed_cube_cycle(1, 2, 2);
  expect_minimal_quadrilateral(b, 32, 96);
  EXPECT_EQ(b.certificate.genus, 9);
  const ConstructionResult c = embed_cube_cycle(2, 2, 2);
  expect_minimal_quadrilateral(c, 256, 1280);
  EXPECT_EQ(c.certificate.genus, 193);
  const ConstructionResult d = embed_cube_cycle(1, 2, 3);
  EXPECT_EQ(d.certificate.genus, 13);
  EXPECT_EQ(d.embedding.graph().edges(), build_family("K(4,4)xC(6)").edges());
  EXPECT_EQ(kind_of([] { embed_cube_cycle(1, 1, 1); }), ErrorKind::invalid_parameter);
}

TEST(EmbedCubeCycles, Examples) {
  const ConstructionResult a = embed_cube_cycles(1, 2, {2});
  EXPECT_EQ(a.certificate.genus, 9);
  EXPECT_TRUE(a.certificate.same_counts(embed_cube_cycle(1, 2, 2).certificate));
  EXPECT_EQ(a.embedding, embed_cube_cycle(1, 2, 2).embedding);
  const ConstructionResult b = embed_cube_cycles(1, 1, {2, 2});
  expect_minimal_quadrilateral(b, 64, 192);
  EXPECT_EQ(b.certificate.genus, 17);
  const ConstructionResult c = embed_cube_cycles(1, 2, {2, 2});
  expect_minimal_quadrilateral(c, 128, 512);
  EXPECT_EQ(c.certificate.genus, 65);
  EXPECT_EQ(kind_of([] { embed_cube_cycles(1, 1, {}); }), ErrorKind::invalid_parameter);
  EXPECT_EQ(kind_of([] { embed_cube_cycles(1, 1, {2, 1}); }), ErrorKind::invalid_parameter);
}

TEST(EmbedCubePath, Examples) {
  const ConstructionResult a = embed_cube_path(1, 2, 2);
  expect_minimal_quadrilateral(a, 32, 88);
  EXPECT_EQ(a.certificate.genus, 7);
  const ConstructionResult b = embed_cube_path(1, 1, 2);
  expect_minimal_quadrilateral(b, 16, 28);
  EXPECT_EQ(b.certificate.genus, 0);
  const ConstructionResult c = embed_cube_path(1, 2, 1);
  expect_minimal_quadrilateral(c, 16, 40);
  EXPECT_EQ(c.certificate.genus, 3);
  EXPECT_EQ(kind_of([] { embed_cube_path(1, 1, 0); }), ErrorKind::invalid_parameter);
}

TEST(EmbedCubePath, RemovalRouteMatchesDirectRoute) {
  for (int s = 1; s <= 3; ++s)
    for (auto [i, r] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 1}}) {
      const ConstructionResult removal = embed_cube_path(i, r, s);
      const ConstructionResult direct = embed_cube_paths(i, r, {s});
      EXPECT_TRUE(removal.certificate.same_counts(direct.certificate));
      EXPECT_EQ(removal.embedding.graph(), direct.embedding.graph());
      // every recorded handle is still present in the embedding
      for (const auto& h : removal.trace)
        for (const auto& [u, v] : h.added_edges) EXPECT_TRUE(removal.embedding.graph().has_edge(u, v));
    }
}

TEST(EmbedCubePaths, Examples) {
  const ConstructionResult a = embed_cube_paths(1, 2, {2, 2});
  expect_minimal_quadrilateral(a, 128, 448);
  EXPECT_EQ(a.certificate.genus, 49);
  const ConstructionResult b = embed_cube_paths(1, 2, {1});
  EXPECT_EQ(b.certificate.genus, 3);
  EXPECT_TRUE(b.certificate.same_counts(embed_cube_path(1, 2, 1).certificate));
  const ConstructionResult c = embed_cube_paths(1, 1, {2});
  EXPECT_EQ(c.certificate.genus, 0);
  EXPECT_EQ(kind_of([] { embed_cube_paths(1, 1, {0}); }), ErrorKind::invalid_parameter);
}

TEST(EmbedCubeProduct, RandomShapesAreMinimal) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const int i = static_cast<int>(testkit::pick(rng, 1, 2));
    const int r = static_cast<int>(testkit::pick(rng, 1, 2));
    std::vector<FactorStep> steps;
    std::string expr = "Q(" + std::to_string(i) + "," + std::to_string(2 * r) + ")";
    auto c = cube_counts(i, r);
    const auto len = testkit::pick(rng, 0, 2);
    for (std::uint64_t k = 0; k < len; ++k) {
      const bool cycle = testkit::pick(rng, 0, 1) == 1;
      const int half = static_cast<int>(testkit::pick(rng, cycle ? 2 : 1, 3));
      steps.push_back({cycle ? FactorStep::Kind::cycle : FactorStep::Kind::path, half});
      expr += std::string(cycle ? "xC(" : "xP(") + std::to_string(2 * half) + ")";
      c = testkit::product_counts(c, {2 * half, cycle ? 2 * half : 2 * half - 1});
    }
    if (c.n > 1100) continue;
    const ConstructionResult res = embed_cube_product(i, r, steps);
    expect_minimal_quadrilateral(res, c.n, c.m);
    EXPECT_EQ(res.embedding.graph().edges(), build_family(expr).edges()) << expr;
    for (const auto& fam : res.reservoir.families)
      EXPECT_TRUE(covers_exactly(fam, all_vertices(res.embedding.vertex_count()))) << expr;
  }
}

TEST(Constructions, Deterministic) {
  const ConstructionResult a = embed_cube_cycles(1, 2, {2, 3});
  const ConstructionResult b = embed_cube_cycles(1, 2, {2, 3});
  EXPECT_EQ(a.embedding.rotations(), b.embedding.rotations());
  EXPECT_EQ(a.certificate, b.certificate);
}

TEST(Constructions, WithoutMirrorTheLinkFails) {
  ConstructionOptions broken;
  broken.mirror_copies = false;
  EXPECT_EQ(kind_of([&] { embed_cube(2, 2, broken); }), ErrorKind::invalid_link);
  EXPECT_EQ(kind_of([&] { embed_cube_cycle(1, 2, 3, broken); }), ErrorKind::invalid_link);
  EXPECT_EQ(kind_of([&] { embed_cube_paths(1, 2, {2}, broken); }), ErrorKind::invalid_link);
}

TEST(Constructions, SearchFallbackFindsQuadrilateralRotations) {
  for (const Graph& g : {make_complete_bipartite(2, 2), make_complete_bipartite(4, 4), build_family("C(4)xC(4)")}) {
    const auto e = detail::find_quadrilateral_rotation(g);
    ASSERT_TRUE(e.has_value());
    EXPECT_TRUE(is_quadrilateral(trace_faces(*e)));
  }
  EXPECT_FALSE(detail::find_quadrilateral_rotation(make_cycle(6)).has_value());
  EXPECT_FALSE(detail::find_quadrilateral_rotation(make_complete_bipartite(3, 3)).has_value());
}

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "quadgenus/constructions.hpp"
#include "quadgenus/family.hpp"
#include "quadgenus/oracle.hpp"
#include "support.hpp"

using namespace quadgenus;

namespace {

// Minimum genus over every rotation system, no symmetry reduction.
std::int64_t brute_force_genus(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<std::vector<VertexId>> rot(n);
  for (VertexId v = 0; v < n; ++v) rot[v] = g.neighbors(v);
  std::int64_t best = -1;
  std::function<void(VertexId)> rec = [&](VertexId v) {
    if (v == n) {
      const auto f = static_cast<std::int64_t>(testkit::face_lengths(rot).size());
      best = std::max(best, f);
      return;
    }
    std::sort(rot[v].begin() + (rot[v].empty() ? 0 : 1), rot[v].end());
    do rec(v + 1);
    while (!rot[v].empty() && std::next_permutation(rot[v].begin() + 1, rot[v].end()));
  };
  rec(0);
  return (2 - static_cast<std::int64_t>(n) + static_cast<std::int64_t>(g.edge_count()) - best) / 2;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::internal;
}

void expect_valid_witness(const OracleResult& r, const Graph& g) {
  EXPECT_TRUE(validate(r.witness).empty());
  EXPECT_EQ(r.witness.graph().edges(), g.edges());
  EXPECT_EQ(testkit::genus_by_hand(r.witness), r.best_genus);
}

}  // namespace

TEST(CyclicOrders, Counts) {
  EXPECT_EQ(detail::cyclic_orders(1).size(), 1u);
  EXPECT_EQ(detail::cyclic_orders(3).size(), 2u);
  EXPECT_EQ(detail::cyclic_orders(5).size(), 24u);
  EXPECT_EQ(detail::cyclic_orders_up_to_reflection(2).size(), 1u);
  EXPECT_EQ(detail::cyclic_orders_up_to_reflection(3).size(), 1u);
  EXPECT_EQ(detail::cyclic_orders_up_to_reflection(5).size(), 12u);
  for (const auto& next : detail::cyclic_orders(4)) {
    // a single cycle through all four positions
    std::size_t k = 0, steps = 0;
    do {
      k = next[k];
      ++steps;
    } while (k != 0);
    EXPECT_EQ(steps, 4u);
  }
}

TEST(RotationSpace, Sizes) {
  EXPECT_EQ(rotation_space_size(make_complete(4)), 8u);
  EXPECT_EQ(rotation_space_size(make_complete_bipartite(3, 3)), 32u);
  EXPECT_EQ(rotation_space_size(make_complete(5)), 3888u);
  EXPECT_EQ(rotation_space_size(make_cycle(8)), 1u);
  EXPECT_EQ(rotation_space_size(make_complete(40)), std::numeric_limits<std::uint64_t>::max());
}

TEST(Exhaustive, SmallGraphs) {
  const auto k4 = exhaustive_min_genus(make_complete(4));
  EXPECT_EQ(k4.best_genus, 0);
  EXPECT_TRUE(k4.exhaustive);
  expect_valid_witness(k4, make_complete(4));

  const auto k33 = exhaustive_min_genus(make_complete_bipartite(3, 3));
  EXPECT_EQ(k33.best_genus, 1);
  EXPECT_EQ(k33.explored, 32u);  // 64 systems, halved by reflection
  expect_valid_witness(k33, make_complete_bipartite(3, 3));

  const auto k5 = exhaustive_min_genus(make_complete(5));
  EXPECT_EQ(k5.best_genus, 1);
  EXPECT_EQ(k5.explored, 3888u);
  expect_valid_witness(k5, make_complete(5));
}

TEST(Exhaustive, AgreesWithBruteForce) {
  EXPECT_EQ(brute_force_genus(make_complete(4)), 0);
  EXPECT_EQ(brute_force_genus(make_complete_bipartite(3, 3)), 1);
  std::mt19937_64 rng(12);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 40; ++trial) {
    const Graph g = testkit::random_graph(rng, static_cast<int>(testkit::pick(rng, 4, 7)), 0.55);
    if (!is_connected(g) || rotation_space_size(g) > 3000) continue;
    EXPECT_EQ(exhaustive_min_genus(g).best_genus, brute_force_genus(g));
    ++checked;
  }
  EXPECT_EQ(checked, 40);
}

TEST(Exhaustive, Deterministic) {
  const Graph g = make_complete(5);
  const auto a = exhaustive_min_genus(g);
  const auto b = exhaustive_min_genus(g);
  EXPECT_EQ(a.witness.rotations(), b.witness.rotations());
}

TEST(Exhaustive, Errors) {
  SearchBudget tiny;
  tiny.max_rotation_systems = 100;
  EXPECT_EQ(kind_of([&] { exhaustive_min_genus(make_complete(5), tiny); }), ErrorKind::budget_exceeded);
  EXPECT_EQ(kind_of([] { exhaustive_min_genus(disjoint_union(make_cycle(4), make_cycle(4))); }),
            ErrorKind::invalid_parameter);
  EXPECT_EQ(kind_of([] { exhaustive_min_genus(Graph(0)); }), ErrorKind::invalid_parameter);
}

TEST(Exhaustive, TreesAndCycles) {
  EXPECT_EQ(exhaustive_min_genus(make_path(5)).best_genus, 0);
  EXPECT_EQ(exhaustive_min_genus(make_cycle(6)).best_genus, 0);
  EXPECT_EQ(exhaustive_min_genus(Graph(1)).best_genus, 0);
}

TEST(Stochastic, FindsKnownMinima) {
  SearchBudget b;
  b.target_genus = 1;
  b.max_rotation_systems = 5'000'000;
  const Graph k44 = make_complete_bipartite(4, 4);
  const auto r44 = stochastic_search(k44, b);
  EXPECT_EQ(r44.best_genus, 1);
  EXPECT_FALSE(r44.exhaustive);
  expect_valid_witness(r44, k44);

  const Graph torus = cartesian_product(make_cycle(4), make_cycle(4));
  const auto rt = stochastic_search(torus, b);
  EXPECT_EQ(rt.best_genus, 1);
  expect_valid_witness(rt, torus);

  const auto c4 = stochastic_search(make_cycle(4));
  EXPECT_EQ(c4.best_genus, 0);
  EXPECT_LE(c4.explored, 1u);
}

TEST(Stochastic, SameSeedSameResult) {
  SearchBudget b;
  b.seed = 42;
  b.max_rotation_systems = 20000;
  const Graph g = build_family("C(4)xC(6)");
  const auto x = stochastic_search(g, b);
  const auto y = stochastic_search(g, b);
  EXPECT_EQ(x.best_genus, y.best_genus);
  EXPECT_EQ(x.explored, y.explored);
  EXPECT_EQ(x.witness.rotations(), y.witness.rotations());
}

TEST(Stochastic, NeverBelowTheExhaustiveMinimum) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 15; ++trial) {
    const Graph g = testkit::random_graph(rng, 7, 0.6);
    if (!is_connected(g) || rotation_space_size(g) > 200000) continue;
    SearchBudget b;
    b.seed = trial;
    b.max_rotation_systems = 3000;
    EXPECT_GE(stochastic_search(g, b).best_genus, exhaustive_min_genus(g).best_genus);
  }
}

TEST(CertifyMinimum, Examples) {
  const auto k66 = certify_minimum(make_complete_bipartite(6, 6), embed_K2r2r(3).embedding);
  EXPECT_TRUE(k66.minimal);
  EXPECT_EQ(k66.genus, 4);
  const auto grid = embed_cube_path(1, 2, 2);
  const auto c = certify_minimum(grid.embedding.graph(), grid.embedding);
  EXPECT_TRUE(c.minimal);
  EXPECT_EQ(c.genus, 7);
}

TEST(CertifyMinimum, ScrambledK44IsNotMinimal) {
  const Graph k44 = make_complete_bipartite(4, 4);
  std::mt19937_64 rng(1);
  Embedding e;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    e = testkit::random_rotation(rng, k44);
    if (testkit::genus_by_hand(e) == 3) break;
  }
  ASSERT_EQ(testkit::genus_by_hand(e), 3);
  const auto cert = certify_minimum(k44, e);
  EXPECT_EQ(cert.genus, 3);
  EXPECT_EQ(cert.lower_bound, 1);
  EXPECT_FALSE(cert.minimal);
  EXPECT_EQ(kind_of([&] { certify_minimum(make_complete_bipartite(3, 5), e); }), ErrorKind::invalid_embedding);
}

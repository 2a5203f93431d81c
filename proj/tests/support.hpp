#pragma once

// Test-side oracles written independently of the library: face tracing over
// a plain edge map, brute-force two-colouring, and counting formulas for
// products. Plus small deterministic generators for property tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "quadgenus/embedding.hpp"
#include "quadgenus/graph.hpp"

namespace testkit {

using quadgenus::Embedding;
using quadgenus::Graph;
using quadgenus::VertexId;

/// Face lengths by walking darts: after (u,v) comes (v, successor of u at v).
inline std::vector<std::size_t> face_lengths(const std::vector<std::vector<VertexId>>& rot) {
  std::map<std::pair<VertexId, VertexId>, VertexId> succ;
  for (VertexId v = 0; v < rot.size(); ++v)
    for (std::size_t k = 0; k < rot[v].size(); ++k) succ[{v, rot[v][k]}] = rot[v][(k + 1) % rot[v].size()];
  std::set<std::pair<VertexId, VertexId>> seen;
  std::vector<std::size_t> lengths;
  for (const auto& [dart, unused] : succ) {
    if (seen.count(dart)) continue;
    std::size_t len = 0;
    auto d = dart;
    while (!seen.count(d)) {
      seen.insert(d);
      ++len;
      d = {d.second, succ.at({d.second, d.first})};
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

inline std::int64_t genus_by_hand(const Embedding& e) {
  const auto f = static_cast<std::int64_t>(face_lengths(e.rotations()).size());
  const auto n = static_cast<std::int64_t>(e.vertex_count());
  const auto m = static_cast<std::int64_t>(e.edge_count());
  return (2 - n + m - f) / 2;
}

/// Tries every colouring; only for graphs with at most 20 vertices.
inline bool bipartite_by_brute_force(const Graph& g) {
  const auto n = g.vertex_count();
  const auto edges = g.edges();
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    bool ok = true;
    for (const auto& [u, v] : edges)
      if (((mask >> u) & 1U) == ((mask >> v) & 1U)) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return n == 0;
}

struct Counts {
  std::int64_t n, m;
};

inline Counts product_counts(Counts g, Counts h) { return {g.n * h.n, g.n * h.m + h.n * g.m}; }

inline std::uint64_t pick(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return lo + rng() % (hi - lo + 1);
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  Graph g(static_cast<std::size_t>(n));
  std::uniform_real_distribution<double> coin(0, 1);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < p) g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
  return g;
}

inline Embedding random_rotation(std::mt19937_64& rng, const Graph& g) {
  std::vector<std::vector<VertexId>> rot(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    rot[v] = g.neighbors(v);
    std::shuffle(rot[v].begin(), rot[v].end(), rng);
  }
  return Embedding(g, rot);
}

}  // namespace testkit

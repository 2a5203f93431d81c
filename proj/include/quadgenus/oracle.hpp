#pragma once

// Ground truth for small graphs, independent of the constructions: exhaustive
// enumeration of rotation systems and a seeded local search that maximises
// the face count.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <future>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "quadgenus/embedding.hpp"
#include "quadgenus/error.hpp"
#include "quadgenus/graph.hpp"

namespace quadgenus {

struct SearchBudget {
  std::uint64_t max_rotation_systems = 10'000'000;
  std::uint64_t seed = 1;
  std::optional<std::int64_t> target_genus;
};

struct OracleResult {
  std::int64_t best_genus = 0;
  Embedding witness;
  bool exhaustive = false;
  std::uint64_t explored = 0;
};

namespace detail {

/// Face counting over rotation systems given as per-vertex orders of the
/// sorted neighbour list; darts are (v, index into neighbours(v)).
class FaceCounter {
 public:
  explicit FaceCounter(const Graph& g) : g_(g) {
    const auto n = g.vertex_count();
    offset_.assign(n + 1, 0);
    for (VertexId v = 0; v < n; ++v) offset_[v + 1] = offset_[v] + g.degree(v);
    head_.resize(offset_[n]);
    back_.resize(offset_[n]);
    for (VertexId u = 0; u < n; ++u) {
      const auto& nb = g.neighbors(u);
      for (std::size_t k = 0; k < nb.size(); ++k) {
        const VertexId v = nb[k];
        head_[offset_[u] + k] = v;
        const auto& nv = g.neighbors(v);
        back_[offset_[u] + k] = static_cast<std::size_t>(std::lower_bound(nv.begin(), nv.end(), u) - nv.begin());
      }
    }
    seen_.assign(offset_[n], 0);
  }

  std::size_t dart_count() const { return head_.size(); }

  /// `next[v][k]` is the neighbour index following index k in the rotation at v.
  std::int64_t count(const std::vector<std::vector<std::uint8_t>>& next) {
    ++stamp_;
    if (stamp_ == 0) {
      std::fill(seen_.begin(), seen_.end(), 0);
      stamp_ = 1;
    }
    std::int64_t faces = 0;
    const auto n = g_.vertex_count();
    for (VertexId u = 0; u < n; ++u) {
      for (std::size_t k = 0; k < g_.degree(u); ++k) {
        std::size_t d = offset_[u] + k;
        if (seen_[d] == stamp_) continue;
        ++faces;
        VertexId tail = u;
        std::size_t idx = k;
        while (seen_[d] != stamp_) {
          seen_[d] = stamp_;
          const VertexId v = head_[d];
          const std::size_t at_v = back_[d];
          idx = next[v][at_v];
          tail = v;
          d = offset_[tail] + idx;
        }
      }
    }
    return faces;
  }

 private:
  const Graph& g_;
  std::vector<std::size_t> offset_;
  std::vector<VertexId> head_;
  std::vector<std::size_t> back_;
  std::vector<std::uint32_t> seen_;
  std::uint32_t stamp_ = 0;
};

/// Cyclic orders of 0..d-1 with 0 first, as successor tables.
inline std::vector<std::vector<std::uint8_t>> cyclic_orders(std::size_t d) {
  std::vector<std::vector<std::uint8_t>> out;
  if (d == 0) return {{}};
  std::vector<std::uint8_t> perm(d);
  for (std::size_t k = 0; k < d; ++k) perm[k] = static_cast<std::uint8_t>(k);
  do {
    std::vector<std::uint8_t> next(d);
    for (std::size_t k = 0; k < d; ++k) next[perm[k]] = perm[(k + 1) % d];
    out.push_back(std::move(next));
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return out;
}

/// One representative of each mirror pair: the element after 0 is smaller
/// than the element before it.
inline std::vector<std::vector<std::uint8_t>> cyclic_orders_up_to_reflection(std::size_t d) {
  if (d < 3) return cyclic_orders(d);
  std::vector<std::vector<std::uint8_t>> out;
  for (auto& next : cyclic_orders(d)) {
    std::uint8_t before = 0;
    for (std::size_t k = 0; k < d; ++k)
      if (next[k] == 0) before = static_cast<std::uint8_t>(k);
    if (next[0] < before) out.push_back(std::move(next));
  }
  return out;
}

inline Embedding to_embedding(const Graph& g, const std::vector<std::vector<std::uint8_t>>& next) {
  std::vector<Rotation> rot(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& nb = g.neighbors(v);
    std::size_t k = 0;
    for (std::size_t step = 0; step < nb.size(); ++step) {
      rot[v].push_back(nb[k]);
      k = next[v][k];
    }
  }
  return Embedding(g, std::move(rot));
}

inline std::int64_t genus_from_faces(const Graph& g, std::int64_t faces) {
  return (2 - static_cast<std::int64_t>(g.vertex_count()) + static_cast<std::int64_t>(g.edge_count()) - faces) / 2;
}

/// Uniform draw in [0, bound) from the raw engine output, identical on every
/// standard library.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

}  // namespace detail

/// Number of rotation systems exhaustive_min_genus visits, saturating at max.
inline std::uint64_t rotation_space_size(const Graph& g) {
  std::uint64_t total = 1;
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max() / 1024;
  bool first = true;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto d = g.degree(v);
    std::uint64_t c = 1;
    for (std::size_t k = 2; k < d; ++k) c *= k;
    if (first && d >= 3) {
      c /= 2;
      first = false;
    }
    if (total > cap / std::max<std::uint64_t>(c, 1)) return std::numeric_limits<std::uint64_t>::max();
    total *= c;
  }
  return total;
}

/// Enumerates every rotation system, modulo reversing all rotations at once
/// (the first vertex of degree >= 3 takes one order of each mirror pair).
/// Refuses graphs whose space exceeds the budget. The enumeration is split
/// into chunks by the choice at one vertex and run in parallel; the merged
/// result does not depend on scheduling.
inline OracleResult exhaustive_min_genus(const Graph& g, const SearchBudget& budget = {}) {
  require(g.vertex_count() > 0 && is_connected(g), ErrorKind::invalid_parameter, "oracle needs a connected graph");
  const auto space = rotation_space_size(g);
  require(space <= budget.max_rotation_systems, ErrorKind::budget_exceeded,
          "rotation space " + std::to_string(space) + " exceeds budget " + std::to_string(budget.max_rotation_systems));
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    require(g.degree(v) <= 255, ErrorKind::invalid_parameter, "degree too large for enumeration");

  const auto n = g.vertex_count();
  std::vector<std::vector<std::vector<std::uint8_t>>> options(n);
  bool reflected = false;
  for (VertexId v = 0; v < n; ++v) {
    if (!reflected && g.degree(v) >= 3) {
      options[v] = detail::cyclic_orders_up_to_reflection(g.degree(v));
      reflected = true;
    } else {
      options[v] = detail::cyclic_orders(g.degree(v));
    }
  }
  // chunk on the vertex with the most options
  VertexId split = 0;
  for (VertexId v = 0; v < n; ++v)
    if (options[v].size() > options[split].size()) split = v;

  struct Chunk {
    std::int64_t best_faces = -1;
    std::vector<std::vector<std::uint8_t>> best;
    std::uint64_t explored = 0;
  };
  auto run_chunk = [&](std::size_t choice) {
    Chunk out;
    detail::FaceCounter counter(g);
    std::vector<std::size_t> digit(n, 0);
    std::vector<std::vector<std::uint8_t>> next(n);
    for (VertexId v = 0; v < n; ++v) next[v] = options[v][v == split ? choice : 0];
    while (true) {
      const auto f = counter.count(next);
      ++out.explored;
      if (f > out.best_faces) {
        out.best_faces = f;
        out.best = next;
      }
      // odometer over every vertex except the split vertex
      VertexId v = 0;
      for (; v < n; ++v) {
        if (v == split) continue;
        if (++digit[v] < options[v].size()) {
          next[v] = options[v][digit[v]];
          break;
        }
        digit[v] = 0;
        next[v] = options[v][0];
      }
      if (v == n) break;
    }
    return out;
  };

  const auto chunks = options[split].size();
  std::vector<Chunk> results(chunks);
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), chunks));
  std::vector<std::future<void>> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t c = w; c < chunks; c += workers) results[c] = run_chunk(c);
    }));
  for (auto& f : pool) f.get();

  OracleResult res;
  res.exhaustive = true;
  std::size_t best_chunk = 0;
  for (std::size_t c = 0; c < chunks; ++c) {
    res.explored += results[c].explored;
    if (results[c].best_faces > results[best_chunk].best_faces) best_chunk = c;
  }
  res.best_genus = detail::genus_from_faces(g, results[best_chunk].best_faces);
  res.witness = detail::to_embedding(g, results[best_chunk].best);
  return res;
}

/// Seeded hill climbing on the face count with random restarts. A move
/// reorders the rotation at one vertex (swap of two neighbours or a reversal
/// of a segment); moves that keep the face count are accepted up to a plateau
/// cap. Stops at the target genus, at the Euler lower bound, or when
/// max_rotation_systems evaluations are spent. The best genus is an upper
/// bound, and exact when it meets the lower bound.
inline OracleResult stochastic_search(const Graph& g, const SearchBudget& budget = {}) {
  require(g.vertex_count() > 0 && is_connected(g), ErrorKind::invalid_parameter, "oracle needs a connected graph");
  const auto n = g.vertex_count();
  std::mt19937_64 rng(budget.seed);
  detail::FaceCounter counter(g);

  std::vector<VertexId> movable;
  for (VertexId v = 0; v < n; ++v)
    if (g.degree(v) >= 3) movable.push_back(v);

  auto orders_to_next = [&](const std::vector<std::vector<std::uint8_t>>& order) {
    std::vector<std::vector<std::uint8_t>> next(n);
    for (VertexId v = 0; v < n; ++v) {
      const auto d = order[v].size();
      next[v].resize(d);
      for (std::size_t k = 0; k < d; ++k) next[v][order[v][k]] = order[v][(k + 1) % d];
    }
    return next;
  };

  OracleResult res;
  std::int64_t best_faces = -1;
  std::vector<std::vector<std::uint8_t>> best_next;
  const std::int64_t plateau_cap = 200 + 20 * static_cast<std::int64_t>(counter.dart_count());
  const std::int64_t target_faces =
      budget.target_genus ? 2 - static_cast<std::int64_t>(n) + static_cast<std::int64_t>(g.edge_count()) - 2 * *budget.target_genus
                          : std::numeric_limits<std::int64_t>::max();

  // reaching the Euler bound settles the question, whatever the target
  const std::int64_t floor_genus = is_bipartite(g) ? genus_lower_bound(g) : triangle_genus_lower_bound(g);
  const std::int64_t bound_faces =
      2 - static_cast<std::int64_t>(n) + static_cast<std::int64_t>(g.edge_count()) - 2 * floor_genus;
  const std::int64_t stop_faces = std::min(target_faces, bound_faces);

  while (res.explored < budget.max_rotation_systems && best_faces < stop_faces) {
    // random restart
    std::vector<std::vector<std::uint8_t>> order(n);
    for (VertexId v = 0; v < n; ++v) {
      const auto d = g.degree(v);
      order[v].resize(d);
      for (std::size_t k = 0; k < d; ++k) order[v][k] = static_cast<std::uint8_t>(k);
      for (std::size_t k = d; k > 1; --k) std::swap(order[v][k - 1], order[v][detail::draw(rng, k)]);
    }
    auto next = orders_to_next(order);
    std::int64_t faces = counter.count(next);
    ++res.explored;
    if (faces > best_faces) {
      best_faces = faces;
      best_next = next;
    }
    std::int64_t stale = 0;
    if (movable.empty()) break;  // the rotation system is unique
    while (stale < plateau_cap && res.explored < budget.max_rotation_systems && best_faces < stop_faces) {
      const VertexId v = movable[detail::draw(rng, movable.size())];
      const auto d = order[v].size();
      auto saved = order[v];
      auto a = detail::draw(rng, d), b = detail::draw(rng, d);
      if (a == b) b = (a + 1) % d;
      if (detail::draw(rng, 2) == 0) {
        std::swap(order[v][a], order[v][b]);
      } else {
        if (a > b) std::swap(a, b);
        std::reverse(order[v].begin() + static_cast<std::ptrdiff_t>(a), order[v].begin() + static_cast<std::ptrdiff_t>(b) + 1);
      }
      for (std::size_t k = 0; k < d; ++k) next[v][order[v][k]] = order[v][(k + 1) % d];
      const auto f = counter.count(next);
      ++res.explored;
      if (f >= faces) {
        stale = f > faces ? 0 : stale + 1;
        faces = f;
        if (f > best_faces) {
          best_faces = f;
          best_next = next;
        }
      } else {
        order[v] = std::move(saved);
        for (std::size_t k = 0; k < d; ++k) next[v][order[v][k]] = order[v][(k + 1) % d];
        ++stale;
      }
    }
  }

  res.best_genus = detail::genus_from_faces(g, best_faces);
  res.witness = detail::to_embedding(g, best_next);
  if (is_bipartite(g))
    require(res.best_genus >= genus_lower_bound(g), ErrorKind::internal, "search beat the Euler lower bound");
  return res;
}

/// Upper bound from the given embedding meets the Euler lower bound.
inline EmbeddingCertificate certify_minimum(const Graph& g, const Embedding& e, std::string tag = "certify_minimum") {
  require(e.graph() == g || (e.graph().edges() == g.edges() && e.vertex_count() == g.vertex_count()),
          ErrorKind::invalid_embedding, "embedding is not an embedding of the given graph");
  if (auto issues = validate(e); !issues.empty()) fail(ErrorKind::invalid_embedding, issues.front());
  return euler_genus(e, std::move(tag));
}

}  // namespace quadgenus

#pragma once

// Simple undirected graphs, the graph families used throughout the library,
// and the Cartesian product that assembles them.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "quadgenus/error.hpp"

namespace quadgenus {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;
using Label = std::vector<int>;

/// Labeled simple undirected graph. Adjacency lists are kept sorted, so two
/// graphs compare equal exactly when they have the same edge set.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adjacency_(n) {}

  Graph(std::size_t n, const std::vector<Edge>& edges) : adjacency_(n) {
    for (const auto& [u, v] : edges) add_edge(u, v);
  }

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }

  bool has_edge(VertexId u, VertexId v) const {
    if (u >= vertex_count() || v >= vertex_count()) return false;
    const auto& nb = adjacency_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  void add_edge(VertexId u, VertexId v) {
    require(u < vertex_count() && v < vertex_count(), ErrorKind::invalid_parameter,
            "edge endpoint out of range");
    require(u != v, ErrorKind::invalid_parameter, "loop at vertex " + std::to_string(u));
    require(!has_edge(u, v), ErrorKind::invalid_parameter,
            "parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    insert_sorted(adjacency_[u], v);
    insert_sorted(adjacency_[v], u);
    ++edge_count_;
  }

  void remove_edge(VertexId u, VertexId v) {
    require(has_edge(u, v), ErrorKind::invalid_parameter,
            "no edge " + std::to_string(u) + "-" + std::to_string(v));
    erase_sorted(adjacency_[u], v);
    erase_sorted(adjacency_[v], u);
    --edge_count_;
  }

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < vertex_count(); ++u)
      for (VertexId v : adjacency_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  const std::vector<Label>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<Label> labels) {
    require(labels.empty() || labels.size() == vertex_count(), ErrorKind::invalid_parameter,
            "label count does not match vertex count");
    labels_ = std::move(labels);
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static void insert_sorted(std::vector<VertexId>& v, VertexId x) {
    v.insert(std::lower_bound(v.begin(), v.end(), x), x);
  }
  static void erase_sorted(std::vector<VertexId>& v, VertexId x) {
    v.erase(std::lower_bound(v.begin(), v.end(), x));
  }

  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<Label> labels_;
  std::size_t edge_count_ = 0;
};

inline std::size_t degree_sum(const Graph& g) {
  std::size_t sum = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) sum += g.degree(v);
  return sum;
}

inline Graph make_path(int n) {
  require(n >= 2, ErrorKind::invalid_parameter, "path needs at least 2 vertices, got " + std::to_string(n));
  Graph g(static_cast<std::size_t>(n));
  std::vector<Label> labels;
  for (int k = 0; k < n; ++k) {
    if (k + 1 < n) g.add_edge(static_cast<VertexId>(k), static_cast<VertexId>(k + 1));
    labels.push_back({k});
  }
  g.set_labels(std::move(labels));
  return g;
}

/// Any cycle of length >= 3 for control experiments; the families used by the
/// constructions go through make_cycle, which demands even length >= 4.
inline Graph make_any_cycle(int n) {
  require(n >= 3, ErrorKind::invalid_parameter, "cycle needs at least 3 vertices, got " + std::to_string(n));
  Graph g(static_cast<std::size_t>(n));
  std::vector<Label> labels;
  for (int k = 0; k < n; ++k) {
    g.add_edge(static_cast<VertexId>(k), static_cast<VertexId>((k + 1) % n));
    labels.push_back({k});
  }
  g.set_labels(std::move(labels));
  return g;
}

inline Graph make_cycle(int n) {
  require(n >= 4 && n % 2 == 0, ErrorKind::invalid_parameter,
          "cycle length must be even and >= 4, got " + std::to_string(n));
  return make_any_cycle(n);
}

/// Part A is 0..s-1, part B is s..s+t-1; labels are {part, index-in-part}.
inline Graph make_complete_bipartite(int s, int t) {
  require(s >= 1 && t >= 1, ErrorKind::invalid_parameter, "complete bipartite parts must be non-empty");
  Graph g(static_cast<std::size_t>(s + t));
  std::vector<Label> labels;
  for (int a = 0; a < s; ++a) labels.push_back({0, a});
  for (int b = 0; b < t; ++b) labels.push_back({1, b});
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < t; ++b) g.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(s + b));
  g.set_labels(std::move(labels));
  return g;
}

inline Graph make_complete(int n) {
  require(n >= 1, ErrorKind::invalid_parameter, "complete graph needs a vertex");
  Graph g(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
  return g;
}

/// Vertex (x, y) of the product gets index x * |V(h)| + y, so copy y of g is the
/// vertex set {x * |V(h)| + y} and copies differ by a pure index offset.
inline VertexId product_vertex(VertexId x, VertexId y, std::size_t h_order) {
  return static_cast<VertexId>(x * h_order + y);
}

inline Graph cartesian_product(const Graph& g, const Graph& h) {
  require(g.vertex_count() > 0 && h.vertex_count() > 0, ErrorKind::invalid_parameter,
          "cartesian product of an empty graph");
  const std::size_t ng = g.vertex_count(), nh = h.vertex_count();
  Graph p(ng * nh);
  for (VertexId x = 0; x < ng; ++x)
    for (const auto& [a, b] : h.edges()) p.add_edge(product_vertex(x, a, nh), product_vertex(x, b, nh));
  for (const auto& [a, b] : g.edges())
    for (VertexId y = 0; y < nh; ++y) p.add_edge(product_vertex(a, y, nh), product_vertex(b, y, nh));

  std::vector<Label> labels;
  labels.reserve(ng * nh);
  for (VertexId x = 0; x < ng; ++x) {
    for (VertexId y = 0; y < nh; ++y) {
      Label l = g.labels().empty() ? Label{static_cast<int>(x)} : g.labels()[x];
      const Label hl = h.labels().empty() ? Label{static_cast<int>(y)} : h.labels()[y];
      l.insert(l.end(), hl.begin(), hl.end());
      labels.push_back(std::move(l));
    }
  }
  p.set_labels(std::move(labels));
  return p;
}

/// Disjoint union with the vertices of b shifted past those of a.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph u(a.vertex_count() + b.vertex_count());
  for (const auto& [x, y] : a.edges()) u.add_edge(x, y);
  const auto shift = static_cast<VertexId>(a.vertex_count());
  for (const auto& [x, y] : b.edges()) u.add_edge(x + shift, y + shift);
  return u;
}

/// Component index per vertex, numbered in order of smallest vertex.
inline std::vector<std::size_t> connected_components(const Graph& g, std::size_t* count = nullptr) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(g.vertex_count(), unset);
  std::size_t next = 0;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] != unset) continue;
    std::queue<VertexId> q;
    q.push(s);
    comp[s] = next;
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (VertexId w : g.neighbors(v))
        if (comp[w] == unset) {
          comp[w] = next;
          q.push(w);
        }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

inline bool is_connected(const Graph& g) {
  std::size_t count = 0;
  connected_components(g, &count);
  return count <= 1;
}

/// Breadth-first two-colouring; nullopt when some component has an odd cycle.
inline std::optional<std::vector<int>> is_bipartite(const Graph& g) {
  std::vector<int> colour(g.vertex_count(), -1);
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<VertexId> q;
    q.push(s);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (VertexId w : g.neighbors(v)) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          q.push(w);
        } else if (colour[w] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

inline bool is_forest(const Graph& g) {
  std::size_t count = 0;
  connected_components(g, &count);
  return g.edge_count() + count == g.vertex_count();
}

}  // namespace quadgenus

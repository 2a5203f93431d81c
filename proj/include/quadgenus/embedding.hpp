#pragma once

// Orientable embeddings as rotation systems.
//
// Face tracing convention: the dart following (u, v) is (v, w) where w is the
// neighbour that follows u in the rotation at v. The opposite convention would
// only mirror every face.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "quadgenus/error.hpp"
#include "quadgenus/graph.hpp"

namespace quadgenus {

struct Dart {
  VertexId tail = 0;
  VertexId head = 0;

  friend auto operator<=>(const Dart&, const Dart&) = default;
};

using Rotation = std::vector<VertexId>;

class Embedding {
 public:
  Embedding() = default;
  Embedding(Graph graph, std::vector<Rotation> rotation)
      : graph_(std::move(graph)), rotation_(std::move(rotation)) {}

  /// Every rotation in increasing neighbour order.
  static Embedding with_sorted_rotation(Graph graph) {
    std::vector<Rotation> rot(graph.vertex_count());
    for (VertexId v = 0; v < graph.vertex_count(); ++v) rot[v] = graph.neighbors(v);
    return Embedding(std::move(graph), std::move(rot));
  }

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<Rotation>& rotations() const noexcept { return rotation_; }
  const Rotation& rotation(VertexId v) const { return rotation_.at(v); }
  std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }
  std::size_t edge_count() const noexcept { return graph_.edge_count(); }

  /// Neighbour after u in the rotation at v.
  VertexId next(VertexId v, VertexId u) const {
    const auto& rot = rotation_.at(v);
    const auto it = std::find(rot.begin(), rot.end(), u);
    require(it != rot.end(), ErrorKind::invalid_embedding,
            std::to_string(u) + " is not in the rotation at " + std::to_string(v));
    const auto pos = static_cast<std::size_t>(it - rot.begin());
    return rot[(pos + 1) % rot.size()];
  }

  VertexId prev(VertexId v, VertexId u) const {
    const auto& rot = rotation_.at(v);
    const auto it = std::find(rot.begin(), rot.end(), u);
    require(it != rot.end(), ErrorKind::invalid_embedding,
            std::to_string(u) + " is not in the rotation at " + std::to_string(v));
    const auto pos = static_cast<std::size_t>(it - rot.begin());
    return rot[(pos + rot.size() - 1) % rot.size()];
  }

  /// Adds edge u-v, placing v right after `after_at_u` in the rotation at u and
  /// u right after `after_at_v` at v. An isolated endpoint takes the edge as its
  /// only neighbour and ignores its anchor.
  void insert_edge(VertexId u, VertexId after_at_u, VertexId v, VertexId after_at_v) {
    graph_.add_edge(u, v);
    splice_after(u, after_at_u, v);
    splice_after(v, after_at_v, u);
  }

  void erase_edge(VertexId u, VertexId v) {
    graph_.remove_edge(u, v);
    auto& ru = rotation_.at(u);
    ru.erase(std::find(ru.begin(), ru.end(), v));
    auto& rv = rotation_.at(v);
    rv.erase(std::find(rv.begin(), rv.end(), u));
  }

  /// Cyclic sequences compare up to rotation but not reflection.
  friend bool operator==(const Embedding& a, const Embedding& b) {
    if (a.graph_ != b.graph_ || a.rotation_.size() != b.rotation_.size()) return false;
    for (std::size_t v = 0; v < a.rotation_.size(); ++v)
      if (!same_cyclic_order(a.rotation_[v], b.rotation_[v])) return false;
    return true;
  }

  static bool same_cyclic_order(const Rotation& a, const Rotation& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    const auto it = std::find(b.begin(), b.end(), a.front());
    if (it == b.end()) return false;
    const auto shift = static_cast<std::size_t>(it - b.begin());
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k] != b[(k + shift) % b.size()]) return false;
    return true;
  }

 private:
  void splice_after(VertexId v, VertexId anchor, VertexId x) {
    auto& rot = rotation_.at(v);
    if (rot.empty()) {
      rot.push_back(x);
      return;
    }
    const auto it = std::find(rot.begin(), rot.end(), anchor);
    require(it != rot.end(), ErrorKind::invalid_surgery,
            "anchor " + std::to_string(anchor) + " not in rotation at " + std::to_string(v));
    rot.insert(it + 1, x);
  }

  Graph graph_;
  std::vector<Rotation> rotation_;
};

/// Faces are stored as the sequence of tails of their darts, starting at the
/// lexicographically least dart; the set is sorted by that dart, so a face's
/// index is stable for a given embedding.
struct FaceSet {
  std::vector<std::vector<VertexId>> faces;

  std::size_t size() const noexcept { return faces.size(); }

  std::vector<std::size_t> lengths() const {
    std::vector<std::size_t> out;
    for (const auto& f : faces) out.push_back(f.size());
    return out;
  }

  std::size_t total_length() const {
    std::size_t s = 0;
    for (const auto& f : faces) s += f.size();
    return s;
  }
};

/// Rotates a closed walk so it starts at its least dart.
inline std::vector<VertexId> canonical_face(std::vector<VertexId> walk) {
  if (walk.size() < 2) return walk;
  std::size_t best = 0;
  const auto n = walk.size();
  for (std::size_t k = 1; k < n; ++k) {
    const Dart cand{walk[k], walk[(k + 1) % n]};
    const Dart cur{walk[best], walk[(best + 1) % n]};
    if (cand < cur) best = k;
  }
  std::rotate(walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(best), walk.end());
  return walk;
}

/// Problems with an embedding; an empty list means it is valid.
inline std::vector<std::string> validate(const Embedding& e) {
  std::vector<std::string> issues;
  const Graph& g = e.graph();
  if (e.rotations().size() != g.vertex_count()) {
    issues.push_back("rotation count " + std::to_string(e.rotations().size()) + " differs from vertex count " +
                     std::to_string(g.vertex_count()));
    return issues;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Rotation sorted = e.rotation(v);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      issues.push_back("vertex " + std::to_string(v) + ": rotation repeats a neighbour");
      continue;
    }
    const auto& nb = g.neighbors(v);
    std::vector<VertexId> missing, extra;
    std::set_difference(nb.begin(), nb.end(), sorted.begin(), sorted.end(), std::back_inserter(missing));
    std::set_difference(sorted.begin(), sorted.end(), nb.begin(), nb.end(), std::back_inserter(extra));
    if (!missing.empty()) issues.push_back("vertex " + std::to_string(v) + ": rotation misses neighbour " +
                                           std::to_string(missing.front()));
    if (!extra.empty()) issues.push_back("vertex " + std::to_string(v) + ": rotation lists non-neighbour " +
                                         std::to_string(extra.front()));
  }
  return issues;
}

namespace detail {

/// Dense dart numbering: dart (v, rotation[v][k]) has id offset[v] + k.
struct DartIndex {
  std::vector<std::size_t> offset;
  std::vector<VertexId> head;
  std::vector<VertexId> tail;
  std::vector<std::size_t> succ;  // face successor

  explicit DartIndex(const Embedding& e) {
    const auto n = e.vertex_count();
    offset.assign(n + 1, 0);
    for (VertexId v = 0; v < n; ++v) offset[v + 1] = offset[v] + e.rotation(v).size();
    const auto darts = offset[n];
    head.resize(darts);
    tail.resize(darts);
    // position of u inside rotation(v), looked up by sorted (neighbour, position) pairs
    std::vector<std::vector<std::pair<VertexId, std::size_t>>> pos(n);
    for (VertexId v = 0; v < n; ++v) {
      const auto& rot = e.rotation(v);
      for (std::size_t k = 0; k < rot.size(); ++k) {
        head[offset[v] + k] = rot[k];
        tail[offset[v] + k] = v;
        pos[v].emplace_back(rot[k], k);
      }
      std::sort(pos[v].begin(), pos[v].end());
    }
    succ.resize(darts);
    for (std::size_t d = 0; d < darts; ++d) {
      const VertexId u = tail[d], v = head[d];
      const auto& pv = pos[v];
      const auto it = std::lower_bound(pv.begin(), pv.end(), std::make_pair(u, std::size_t{0}));
      const auto deg = e.rotation(v).size();
      succ[d] = offset[v] + (it->second + 1) % deg;
    }
  }
};

}  // namespace detail

inline FaceSet trace_faces(const Embedding& e) {
  if (auto issues = validate(e); !issues.empty()) fail(ErrorKind::invalid_embedding, issues.front());
  const detail::DartIndex index(e);
  const auto darts = index.head.size();
  std::vector<char> seen(darts, 0);
  FaceSet fs;
  for (std::size_t start = 0; start < darts; ++start) {
    if (seen[start]) continue;
    std::vector<VertexId> walk;
    for (std::size_t d = start; !seen[d]; d = index.succ[d]) {
      seen[d] = 1;
      walk.push_back(index.tail[d]);
    }
    fs.faces.push_back(canonical_face(std::move(walk)));
  }
  std::sort(fs.faces.begin(), fs.faces.end(), [](const auto& a, const auto& b) {
    return Dart{a[0], a[1]} < Dart{b[0], b[1]};
  });
  return fs;
}

/// Index of the face starting with dart (tail, head), or npos.
inline std::size_t face_index(const FaceSet& fs, Dart first) {
  const auto it = std::lower_bound(fs.faces.begin(), fs.faces.end(), first, [](const auto& f, const Dart& d) {
    return Dart{f[0], f[1]} < d;
  });
  if (it == fs.faces.end() || Dart{(*it)[0], (*it)[1]} != first) return static_cast<std::size_t>(-1);
  return static_cast<std::size_t>(it - fs.faces.begin());
}

/// True when the closed walk `cycle` is exactly one traced face of e. Only the
/// rotations at the walk's vertices are inspected.
inline bool is_traced_face(const Embedding& e, const std::vector<VertexId>& cycle) {
  const auto n = cycle.size();
  if (n < 2) return false;
  for (std::size_t k = 0; k < n; ++k) {
    const VertexId prev = cycle[(k + n - 1) % n], cur = cycle[k], nxt = cycle[(k + 1) % n];
    if (!e.graph().has_edge(prev, cur) || !e.graph().has_edge(cur, nxt)) return false;
    if (e.next(cur, prev) != nxt) return false;
  }
  return true;
}

inline bool is_quadrilateral(const FaceSet& fs) {
  return std::all_of(fs.faces.begin(), fs.faces.end(), [](const auto& f) { return f.size() == 4; });
}

/// Every rotation reversed; the faces become the reversed faces of e.
inline Embedding mirror(const Embedding& e) {
  std::vector<Rotation> rot = e.rotations();
  for (auto& r : rot) std::reverse(r.begin(), r.end());
  return Embedding(e.graph(), std::move(rot));
}

namespace detail {

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

}  // namespace detail

/// Smallest genus allowed by Euler's formula when every face has at least four
/// sides: ceil(1 + m/4 - n/2), never below zero. Forests get 0.
inline std::int64_t genus_lower_bound(const Graph& g) {
  require(is_bipartite(g).has_value(), ErrorKind::not_applicable,
          "quadrilateral lower bound needs a bipartite graph");
  if (is_forest(g)) return 0;
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  const auto m = static_cast<std::int64_t>(g.edge_count());
  return std::max<std::int64_t>(0, detail::ceil_div(4 + m - 2 * n, 4));
}

/// Same argument with faces of length >= 3, for graphs with odd cycles.
inline std::int64_t triangle_genus_lower_bound(const Graph& g) {
  if (is_forest(g)) return 0;
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  const auto m = static_cast<std::int64_t>(g.edge_count());
  return std::max<std::int64_t>(0, detail::ceil_div(6 + m - 3 * n, 6));
}

struct EmbeddingCertificate {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t f = 0;
  std::int64_t genus = 0;
  bool quadrilateral = false;
  bool bipartite = false;
  std::int64_t lower_bound = 0;
  bool minimal = false;
  std::string construction_tag;

  friend bool operator==(const EmbeddingCertificate&, const EmbeddingCertificate&) = default;

  /// Equality ignoring the provenance tag.
  bool same_counts(const EmbeddingCertificate& o) const {
    return n == o.n && m == o.m && f == o.f && genus == o.genus && quadrilateral == o.quadrilateral &&
           bipartite == o.bipartite && lower_bound == o.lower_bound && minimal == o.minimal;
  }
};

namespace detail {

inline EmbeddingCertificate certify_counts(const Graph& g, std::int64_t f, bool quad, std::string tag) {
  EmbeddingCertificate c;
  c.n = static_cast<std::int64_t>(g.vertex_count());
  c.m = static_cast<std::int64_t>(g.edge_count());
  // a graph without edges still sits on the sphere with one face
  c.f = c.m == 0 ? 1 : f;
  const std::int64_t twice = 2 - c.n + c.m - c.f;
  require(twice >= 0 && twice % 2 == 0, ErrorKind::internal,
          "Euler characteristic gives non-integral genus (n=" + std::to_string(c.n) + ", m=" + std::to_string(c.m) +
              ", f=" + std::to_string(c.f) + ")");
  c.genus = twice / 2;
  c.quadrilateral = quad && c.m > 0;
  c.bipartite = is_bipartite(g).has_value();
  c.lower_bound = c.bipartite ? genus_lower_bound(g) : triangle_genus_lower_bound(g);
  c.minimal = c.genus == c.lower_bound;
  c.construction_tag = std::move(tag);
  return c;
}

}  // namespace detail

/// Certificate for an embedding of a connected graph.
inline EmbeddingCertificate euler_genus(const Embedding& e, std::string tag = {}) {
  require(is_connected(e.graph()), ErrorKind::invalid_parameter,
          "euler_genus needs a connected graph; use components_certificate");
  const FaceSet fs = trace_faces(e);
  return detail::certify_counts(e.graph(), static_cast<std::int64_t>(fs.size()), is_quadrilateral(fs),
                                std::move(tag));
}

/// One certificate per connected component (ordered by smallest vertex). The
/// genus of the whole embedding is the sum of the component genera.
inline std::vector<EmbeddingCertificate> components_certificate(const Embedding& e) {
  const FaceSet fs = trace_faces(e);
  std::size_t count = 0;
  const auto comp = connected_components(e.graph(), &count);
  std::vector<std::vector<VertexId>> members(count);
  for (VertexId v = 0; v < e.vertex_count(); ++v) members[comp[v]].push_back(v);
  std::vector<std::int64_t> faces(count, 0);
  std::vector<char> quad(count, 1);
  for (const auto& f : fs.faces) {
    faces[comp[f[0]]] += 1;
    if (f.size() != 4) quad[comp[f[0]]] = 0;
  }

  std::vector<EmbeddingCertificate> out;
  for (std::size_t c = 0; c < count; ++c) {
    // induced subgraph, relabelled densely
    std::vector<VertexId> local(e.vertex_count(), 0);
    for (std::size_t k = 0; k < members[c].size(); ++k) local[members[c][k]] = static_cast<VertexId>(k);
    Graph sub(members[c].size());
    for (VertexId v : members[c])
      for (VertexId w : e.graph().neighbors(v))
        if (v < w) sub.add_edge(local[v], local[w]);
    out.push_back(detail::certify_counts(sub, faces[c], quad[c] != 0, {}));
  }
  return out;
}

inline std::int64_t euler_characteristic(const Embedding& e, const FaceSet& fs) {
  return static_cast<std::int64_t>(e.vertex_count()) - static_cast<std::int64_t>(e.edge_count()) +
         static_cast<std::int64_t>(fs.size());
}

inline std::size_t count_quadrilaterals(const FaceSet& fs) {
  return static_cast<std::size_t>(
      std::count_if(fs.faces.begin(), fs.faces.end(), [](const auto& f) { return f.size() == 4; }));
}

}  // namespace quadgenus

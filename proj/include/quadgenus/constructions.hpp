#pragma once

// Minimum-genus quadrilateral embeddings of Q_i^{(2r)} and of its products with
// even cycles and even paths, built by linking mirrored copies.
//
// Every product step takes k copies of the current embedding, one per vertex
// of the new factor H, embeds copy c plainly or mirrored according to the
// bipartition colour of c in H, and realises every edge ab of H by a link:
// |V(copy)|/4 handles joining a face family of copy a to the matching family of
// copy b. The faces the handles create seed the reservoir for the next step.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "quadgenus/embedding.hpp"
#include "quadgenus/error.hpp"
#include "quadgenus/family.hpp"
#include "quadgenus/graph.hpp"
#include "quadgenus/surgery.hpp"

namespace quadgenus {

struct ConstructionResult {
  Embedding embedding;
  FaceReservoir reservoir;
  EmbeddingCertificate certificate;
  std::vector<HandleRecord> trace;
};

/// Switches used by mutation tests; the defaults give the real constructions.
struct ConstructionOptions {
  bool mirror_copies = true;
};

/// A C(2*half) or P(2*half) factor.
struct FactorStep {
  enum class Kind { cycle, path };
  Kind kind = Kind::cycle;
  int half = 2;

  friend bool operator==(const FactorStep&, const FactorStep&) = default;
};

namespace detail {

struct LinkSpec {
  VertexId a = 0;
  VertexId b = 0;
  std::size_t family = 0;
};

struct StepOutput {
  Embedding embedding;
  std::vector<std::vector<HandleRecord>> links;
  std::vector<HandleRecord> trace;
};

inline QuadFace place_face(const QuadFace& f, std::size_t k, VertexId c, bool mirrored) {
  QuadFace out = mirrored ? f.reversed() : f;
  for (auto& v : out.vertices) v = product_vertex(v, c, k);
  out.face_id = no_face;
  return out;
}

inline HandleRecord place_record(const HandleRecord& h, std::size_t k, VertexId c, bool mirrored) {
  HandleRecord out = h;
  for (auto& f : out.consumed) f = place_face(f, k, c, mirrored);
  for (auto& f : out.created) f = place_face(f, k, c, mirrored);
  for (auto& [u, v] : out.added_edges) {
    u = product_vertex(u, c, k);
    v = product_vertex(v, c, k);
  }
  out.consumed_face_ids = {no_face, no_face};
  out.created_face_ids = {no_face, no_face, no_face, no_face};
  return out;
}

/// Disjoint copies of `base`, copy c on vertices x*k + c, mirrored where asked.
/// The graph already carries the labels of base x H.
inline Embedding place_copies(const Embedding& base, const std::vector<bool>& mirrored, const Graph& product) {
  const auto k = mirrored.size();
  const auto n = base.vertex_count();
  Graph g(n * k);
  for (const auto& [x, y] : base.graph().edges())
    for (VertexId c = 0; c < k; ++c) g.add_edge(product_vertex(x, c, k), product_vertex(y, c, k));
  g.set_labels(product.labels());
  std::vector<Rotation> rot(n * k);
  for (VertexId x = 0; x < n; ++x) {
    for (VertexId c = 0; c < k; ++c) {
      Rotation r;
      for (VertexId y : base.rotation(x)) r.push_back(product_vertex(y, c, k));
      if (mirrored[c]) std::reverse(r.begin(), r.end());
      rot[product_vertex(x, c, k)] = std::move(r);
    }
  }
  return Embedding(std::move(g), std::move(rot));
}

inline StepOutput product_step(const ConstructionResult& base, const Graph& factor, const std::vector<LinkSpec>& links,
                               const ConstructionOptions& opts) {
  const auto colouring = is_bipartite(factor);
  require(colouring.has_value(), ErrorKind::construction_failure, "factor graph must be bipartite");
  const auto k = factor.vertex_count();
  std::vector<bool> mirrored(k);
  for (std::size_t c = 0; c < k; ++c) mirrored[c] = opts.mirror_copies && (*colouring)[c] == 1;

  const Graph expected = cartesian_product(base.embedding.graph(), factor);
  StepOutput out;
  out.embedding = place_copies(base.embedding, mirrored, expected);
  for (VertexId c = 0; c < k; ++c)
    for (const auto& h : base.trace) out.trace.push_back(place_record(h, k, c, mirrored[c]));

  const auto n = base.embedding.vertex_count();
  for (const auto& link : links) {
    require(link.family < base.reservoir.families.size(), ErrorKind::construction_failure,
            "reservoir has no family " + std::to_string(link.family));
    const FaceFamily& fam = base.reservoir.families[link.family];
    FaceFamily fam_a, fam_b;
    for (const auto& f : fam.faces) {
      fam_a.faces.push_back(place_face(f, k, link.a, mirrored[link.a]));
      fam_b.faces.push_back(place_face(f, k, link.b, mirrored[link.b]));
    }
    VertexMap corr;
    for (VertexId x = 0; x < n; ++x) corr[product_vertex(x, link.a, k)] = product_vertex(x, link.b, k);
    LinkResult lr = link_copies(out.embedding, fam_a, fam_b, corr);
    out.embedding = std::move(lr.embedding);
    out.trace.insert(out.trace.end(), lr.handles.begin(), lr.handles.end());
    out.links.push_back(std::move(lr.handles));
  }
  require(out.embedding.graph() == expected, ErrorKind::construction_failure,
          "linked copies do not form the Cartesian product");
  return out;
}

inline std::int64_t face_count(const Embedding& e) { return static_cast<std::int64_t>(trace_faces(e).size()); }

inline void finish(ConstructionResult& res, const std::string& tag) {
  res.certificate = euler_genus(res.embedding, tag);
  require(res.certificate.quadrilateral, ErrorKind::construction_failure, tag + ": embedding is not quadrilateral");
  require(res.certificate.minimal, ErrorKind::construction_failure, tag + ": genus exceeds the lower bound");
}

/// Face-count bookkeeping: every copy keeps its faces and every handle adds two.
inline void check_face_ledger(const ConstructionResult& base, std::size_t copies, const StepOutput& step) {
  std::int64_t handles = 0;
  for (const auto& l : step.links) handles += static_cast<std::int64_t>(l.size());
  const std::int64_t want = static_cast<std::int64_t>(copies) * base.certificate.f + 2 * handles;
  require(face_count(step.embedding) == want, ErrorKind::construction_failure,
          "face count after product step differs from the ledger");
}

/// Backtracking over rotations of a bipartite graph, pruning any partial face
/// walk that closes before four darts or fails to close after four.
inline std::optional<Embedding> find_quadrilateral_rotation(const Graph& g, std::uint64_t node_budget = 50'000'000) {
  const auto n = g.vertex_count();
  std::vector<Rotation> rot(n);
  std::vector<char> assigned(n, 0);
  std::uint64_t nodes = 0;

  auto succ = [&](Dart d) -> std::optional<Dart> {
    if (!assigned[d.head]) return std::nullopt;
    const auto& r = rot[d.head];
    const auto it = std::find(r.begin(), r.end(), d.tail);
    return Dart{d.head, r[(static_cast<std::size_t>(it - r.begin()) + 1) % r.size()]};
  };
  auto consistent = [&](VertexId last) {
    for (VertexId w = 0; w <= last; ++w) {
      for (VertexId u : g.neighbors(w)) {
        const Dart start{u, w};
        Dart d = start;
        for (int step = 1; step <= 4; ++step) {
          auto nd = succ(d);
          if (!nd) break;
          d = *nd;
          if (d == start) {
            if (step != 4) return false;
            break;
          }
          if (step == 4) return false;
        }
      }
    }
    return true;
  };

  std::function<bool(VertexId)> assign = [&](VertexId v) -> bool {
    if (v == n) return true;
    if (++nodes > node_budget) return false;
    Rotation r = g.neighbors(v);
    if (r.size() <= 2) {
      rot[v] = r;
      assigned[v] = 1;
      if (consistent(v) && assign(v + 1)) return true;
      assigned[v] = 0;
      return false;
    }
    // first neighbour fixed; permute the rest
    do {
      rot[v] = r;
      assigned[v] = 1;
      if (consistent(v) && assign(v + 1)) return true;
      assigned[v] = 0;
    } while (std::next_permutation(r.begin() + 1, r.end()));
    return false;
  };

  if (!assign(0)) return std::nullopt;
  Embedding e(g, rot);
  if (!is_quadrilateral(trace_faces(e))) return std::nullopt;
  return e;
}

}  // namespace detail

/// Even-index vertices of each part list the other part in increasing order,
/// odd-index vertices in decreasing order. The result is checked by face
/// tracing; a search takes over if it is not quadrilateral.
inline Embedding k2r2r_rotation_scheme(int r) {
  require(r >= 1, ErrorKind::invalid_parameter, "K_{2r,2r} needs r >= 1");
  const int t = 2 * r;
  Graph g = make_complete_bipartite(t, t);
  std::vector<Rotation> rot(static_cast<std::size_t>(2 * t));
  for (int idx = 0; idx < t; ++idx) {
    Rotation to_b, to_a;
    for (int j = 0; j < t; ++j) {
      to_b.push_back(static_cast<VertexId>(t + j));
      to_a.push_back(static_cast<VertexId>(j));
    }
    if (idx % 2 == 1) {
      std::reverse(to_b.begin(), to_b.end());
      std::reverse(to_a.begin(), to_a.end());
    }
    rot[static_cast<std::size_t>(idx)] = to_b;
    rot[static_cast<std::size_t>(t + idx)] = to_a;
  }
  return Embedding(std::move(g), std::move(rot));
}

inline ConstructionResult embed_K2r2r(int r) {
  ConstructionResult res;
  res.embedding = k2r2r_rotation_scheme(r);
  if (!is_quadrilateral(trace_faces(res.embedding))) {
    auto found = detail::find_quadrilateral_rotation(res.embedding.graph());
    require(found.has_value(), ErrorKind::construction_failure,
            "no quadrilateral embedding of K_{2r,2r} found for r=" + std::to_string(r));
    res.embedding = std::move(*found);
  }
  res.reservoir = partition_faces_K2r2r(res.embedding);
  detail::finish(res, "embed_K2r2r(r=" + std::to_string(r) + ")");
  return res;
}

namespace detail {

/// One more K_{2r,2r} factor. Copies indexed by part A stay plain, part B is
/// mirrored; left copy j links to right copy (j + k) mod 2r through family k
/// of both, so every family of every copy is used exactly once. Each k gives a
/// perfect matching of copies, and the first r matchings seed the 2r new
/// families.
inline ConstructionResult cube_step(const ConstructionResult& base, int r, const ConstructionOptions& opts) {
  const auto t = static_cast<VertexId>(2 * r);
  require(base.reservoir.families.size() == t, ErrorKind::construction_failure,
          "cube step needs 2r families in the reservoir");
  const Graph factor = make_complete_bipartite(static_cast<int>(t), static_cast<int>(t));
  std::vector<LinkSpec> links;
  for (VertexId k = 0; k < t; ++k)
    for (VertexId j = 0; j < t; ++j) links.push_back({j, t + (j + k) % t, k});

  StepOutput step = product_step(base, factor, links, opts);
  check_face_ledger(base, factor.vertex_count(), step);

  ConstructionResult res;
  res.embedding = std::move(step.embedding);
  res.trace = std::move(step.trace);
  for (VertexId k = 0; k < static_cast<VertexId>(r); ++k) {
    std::vector<std::size_t> matching;
    for (VertexId j = 0; j < t; ++j) matching.push_back(k * t + j);
    auto part = reservoir_from_links(step.links, matching, res.embedding.vertex_count());
    for (auto& fam : part.families) res.reservoir.families.push_back(std::move(fam));
  }
  res.certificate.f = face_count(res.embedding);
  return res;
}

/// One C(2m) or P(2m) factor. Copy c is mirrored for odd c; link l joins copy
/// l to copy l+1 (mod 2m for cycles) through family l mod 2 at both ends, so
/// each copy spends its two lowest families.
inline StepOutput factor_links(const ConstructionResult& base, FactorStep step, bool close_cycle,
                                const ConstructionOptions& opts) {
  require(step.half >= 1, ErrorKind::invalid_parameter, "factor half-length must be >= 1");
  require(base.reservoir.families.size() >= 2, ErrorKind::construction_failure,
          "product step needs two reservoir families");
  const int len = 2 * step.half;
  const Graph factor = close_cycle ? make_cycle(len) : make_path(len);
  std::vector<LinkSpec> links;
  const int link_count = close_cycle ? len : len - 1;
  for (int l = 0; l < link_count; ++l)
    links.push_back({static_cast<VertexId>(l), static_cast<VertexId>((l + 1) % len), static_cast<std::size_t>(l % 2)});
  StepOutput out = product_step(base, factor, links, opts);
  check_face_ledger(base, factor.vertex_count(), out);
  return out;
}

inline ConstructionResult factor_step(const ConstructionResult& base, FactorStep step, const ConstructionOptions& opts) {
  if (step.kind == FactorStep::Kind::cycle)
    require(step.half >= 2, ErrorKind::invalid_parameter, "cycle factor C(2m) needs m >= 2");
  StepOutput out = factor_links(base, step, step.kind == FactorStep::Kind::cycle, opts);
  ConstructionResult res;
  res.embedding = std::move(out.embedding);
  res.trace = std::move(out.trace);
  res.reservoir = reservoir_from_links(out.links, alternate_links(out.links.size()), res.embedding.vertex_count());
  res.certificate.f = face_count(res.embedding);
  return res;
}

inline std::string list_string(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + "]";
}

}  // namespace detail

/// Quadrilateral embedding of Q_i^{(2r)}, the i-fold product of K_{2r,2r}.
/// Its reservoir holds 2r full-cover families.
inline ConstructionResult embed_cube(int i, int r, const ConstructionOptions& opts = {}) {
  require(i >= 1, ErrorKind::invalid_parameter, "cube depth i must be >= 1");
  ConstructionResult res = embed_K2r2r(r);
  for (int step = 1; step < i; ++step) res = detail::cube_step(res, r, opts);
  res.reservoir.copy_tag = "Q(" + std::to_string(i) + "," + std::to_string(2 * r) + ")";
  detail::finish(res, "embed_cube(i=" + std::to_string(i) + ",r=" + std::to_string(r) + ")");
  return res;
}

/// Q_i^{(2r)} followed by the given cycle and path factors, in order.
inline ConstructionResult embed_cube_product(int i, int r, const std::vector<FactorStep>& steps,
                                             const ConstructionOptions& opts = {}) {
  ConstructionResult res = embed_cube(i, r, opts);
  std::string tag = "embed_cube_product(i=" + std::to_string(i) + ",r=" + std::to_string(r) + ",factors=";
  for (std::size_t k = 0; k < steps.size(); ++k) {
    res = detail::factor_step(res, steps[k], opts);
    tag += (k ? "x" : "") + std::string(steps[k].kind == FactorStep::Kind::cycle ? "C(" : "P(") +
           std::to_string(2 * steps[k].half) + ")";
  }
  detail::finish(res, tag + ")");
  return res;
}

inline ConstructionResult embed_cube_cycles(int i, int r, const std::vector<int>& m_list,
                                            const ConstructionOptions& opts = {}) {
  require(!m_list.empty(), ErrorKind::invalid_parameter, "need at least one cycle factor");
  std::vector<FactorStep> steps;
  for (int m : m_list) {
    require(m >= 2, ErrorKind::invalid_parameter, "cycle factors need m >= 2");
    steps.push_back({FactorStep::Kind::cycle, m});
  }
  ConstructionResult res = embed_cube_product(i, r, steps, opts);
  res.certificate.construction_tag = "embed_cube_cycles(i=" + std::to_string(i) + ",r=" + std::to_string(r) +
                                     ",m=" + detail::list_string(m_list) + ")";
  return res;
}

inline ConstructionResult embed_cube_cycle(int i, int r, int s, const ConstructionOptions& opts = {}) {
  require(s >= 2, ErrorKind::invalid_parameter, "C(2s) needs s >= 2");
  ConstructionResult res = embed_cube_product(i, r, {{FactorStep::Kind::cycle, s}}, opts);
  res.certificate.construction_tag =
      "embed_cube_cycle(i=" + std::to_string(i) + ",r=" + std::to_string(r) + ",s=" + std::to_string(s) + ")";
  return res;
}

inline ConstructionResult embed_cube_paths(int i, int r, const std::vector<int>& m_list,
                                           const ConstructionOptions& opts = {}) {
  require(!m_list.empty(), ErrorKind::invalid_parameter, "need at least one path factor");
  std::vector<FactorStep> steps;
  for (int m : m_list) {
    require(m >= 1, ErrorKind::invalid_parameter, "path factors need m >= 1");
    steps.push_back({FactorStep::Kind::path, m});
  }
  ConstructionResult res = embed_cube_product(i, r, steps, opts);
  res.certificate.construction_tag = "embed_cube_paths(i=" + std::to_string(i) + ",r=" + std::to_string(r) +
                                     ",m=" + detail::list_string(m_list) + ")";
  return res;
}

/// Q_i^{(2r)} x P(2s). For s >= 2 the cycle embedding with C(2s) is built and
/// the handles of the link closing the cycle are deleted, which gives back two
/// quadrilateral faces per handle. P(2) has no such cycle and is built
/// directly from two copies and one link.
inline ConstructionResult embed_cube_path(int i, int r, int s, const ConstructionOptions& opts = {}) {
  require(s >= 1, ErrorKind::invalid_parameter, "P(2s) needs s >= 1");
  const std::string tag =
      "embed_cube_path(i=" + std::to_string(i) + ",r=" + std::to_string(r) + ",s=" + std::to_string(s) + ")";
  const ConstructionResult cube = embed_cube(i, r, opts);
  if (s == 1) {
    ConstructionResult res = detail::factor_step(cube, {FactorStep::Kind::path, 1}, opts);
    detail::finish(res, tag);
    return res;
  }

  detail::StepOutput cyc = detail::factor_links(cube, {FactorStep::Kind::cycle, s}, true, opts);
  const auto closing = cyc.links.size() - 1;
  Embedding e = cyc.embedding;
  for (const auto& h : cyc.links[closing]) e = remove_handle(e, h);
  cyc.links.pop_back();

  ConstructionResult res;
  res.embedding = std::move(e);
  Graph expected = cartesian_product(cube.embedding.graph(), make_path(2 * s));
  require(res.embedding.graph() == expected, ErrorKind::construction_failure,
          "handle removal did not leave the path product");
  // the trace keeps only handles that survive
  for (const auto& h : cyc.trace) {
    bool removed = false;
    for (const auto& [u, v] : h.added_edges)
      if (!res.embedding.graph().has_edge(u, v)) removed = true;
    if (!removed) res.trace.push_back(h);
  }
  res.reservoir = reservoir_from_links(cyc.links, alternate_links(cyc.links.size()), res.embedding.vertex_count());
  detail::finish(res, tag);
  return res;
}

}  // namespace quadgenus

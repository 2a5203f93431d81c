#pragma once

// Handle surgery on quadrilateral faces and the bookkeeping of vertex-disjoint
// face families that the product constructions consume.
//
// A handle joins two quadrilateral faces F1 = (v0 v1 v2 v3) and F2 by four
// edges v_k - w_k. The new edge at v_k sits in the corner of F1 at v_k, the new
// edge at w_k in the corner of F2 at w_k. When F2 is traced as
// (w3 w2 w1 w0) up to rotation, the four new faces
//   face k = (v_k, v_{k+1}, w_{k+1}, w_k)
// are quadrilaterals: two faces lost, four gained, four edges added.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "quadgenus/embedding.hpp"
#include "quadgenus/error.hpp"

namespace quadgenus {

inline constexpr std::size_t no_face = static_cast<std::size_t>(-1);

struct QuadFace {
  std::array<VertexId, 4> vertices{};
  std::size_t face_id = no_face;

  std::vector<VertexId> cycle() const { return {vertices.begin(), vertices.end()}; }

  /// The same face as seen in the mirror image.
  QuadFace reversed() const { return {{vertices[3], vertices[2], vertices[1], vertices[0]}, no_face}; }

  std::array<VertexId, 4> sorted_vertices() const {
    auto s = vertices;
    std::sort(s.begin(), s.end());
    return s;
  }

  friend bool operator==(const QuadFace& a, const QuadFace& b) { return a.vertices == b.vertices; }
};

struct FaceFamily {
  std::vector<QuadFace> faces;
};

struct FaceReservoir {
  std::vector<FaceFamily> families;
  std::string copy_tag;
};

struct HandleRecord {
  std::array<std::size_t, 2> consumed_face_ids{no_face, no_face};
  std::array<QuadFace, 2> consumed{};
  std::array<Edge, 4> added_edges{};
  std::array<QuadFace, 4> created{};
  std::array<std::size_t, 4> created_face_ids{no_face, no_face, no_face, no_face};
  bool quadrilateral = false;
};

struct HandleResult {
  Embedding embedding;
  HandleRecord record;
};

/// Family faces pairwise vertex-disjoint.
inline bool vertex_disjoint(const FaceFamily& fam) {
  std::set<VertexId> seen;
  for (const auto& f : fam.faces)
    for (VertexId v : f.vertices)
      if (!seen.insert(v).second) return false;
  return true;
}

/// Faces pairwise vertex-disjoint and jointly covering exactly `vertices`.
inline bool covers_exactly(const FaceFamily& fam, const std::vector<VertexId>& vertices) {
  if (!vertex_disjoint(fam)) return false;
  std::vector<VertexId> got;
  for (const auto& f : fam.faces) got.insert(got.end(), f.vertices.begin(), f.vertices.end());
  std::sort(got.begin(), got.end());
  std::vector<VertexId> want = vertices;
  std::sort(want.begin(), want.end());
  return got == want;
}

inline std::vector<VertexId> all_vertices(std::size_t n) {
  std::vector<VertexId> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = static_cast<VertexId>(k);
  return v;
}

/// Looks a face up in a face set; the result carries the canonical rotation
/// used by the face set and its index.
inline QuadFace quad_face_of(const FaceSet& fs, std::size_t index) {
  require(index < fs.size() && fs.faces[index].size() == 4, ErrorKind::invalid_surgery,
          "face " + std::to_string(index) + " is not a quadrilateral");
  const auto& f = fs.faces[index];
  return {{f[0], f[1], f[2], f[3]}, index};
}

inline std::size_t locate_face(const FaceSet& fs, const QuadFace& q) {
  return face_index(fs, Dart{canonical_face(q.cycle())[0], canonical_face(q.cycle())[1]});
}

namespace detail {

inline void check_handle_faces(const Embedding& e, const QuadFace& f1, const QuadFace& f2) {
  for (const auto* f : {&f1, &f2}) {
    const auto s = f->sorted_vertices();
    require(std::adjacent_find(s.begin(), s.end()) == s.end(), ErrorKind::invalid_surgery,
            "face vertices must be pairwise distinct");
    require(is_traced_face(e, f->cycle()), ErrorKind::invalid_surgery, "given cycle is not a face of the embedding");
  }
  const auto a = f1.sorted_vertices(), b = f2.sorted_vertices();
  std::vector<VertexId> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  require(common.empty(), ErrorKind::invalid_surgery, "faces share vertex " + (common.empty() ? std::string() : std::to_string(common.front())));
}

/// Splices the four edges v_k - targets[k] in place. The targets must be the
/// vertices of f2 in some order; f1 and f2 must already be checked.
inline HandleRecord splice_handle(Embedding& e, const QuadFace& f1, const QuadFace& f2,
                                  const std::array<VertexId, 4>& targets) {
  HandleRecord rec;
  rec.consumed = {f1, f2};
  for (int k = 0; k < 4; ++k)
    require(!e.graph().has_edge(f1.vertices[k], targets[k]), ErrorKind::invalid_surgery,
            "edge " + std::to_string(f1.vertices[k]) + "-" + std::to_string(targets[k]) + " already present");

  // anchors are read before any edge is added so the corners are the original ones
  std::array<VertexId, 4> anchor_v{}, anchor_w{};
  for (int k = 0; k < 4; ++k) {
    anchor_v[k] = f1.vertices[(k + 3) % 4];
    const auto pos = static_cast<int>(std::find(f2.vertices.begin(), f2.vertices.end(), targets[k]) - f2.vertices.begin());
    require(pos < 4, ErrorKind::invalid_surgery, "target vertex is not on the second face");
    anchor_w[k] = f2.vertices[(pos + 3) % 4];
  }
  for (int k = 0; k < 4; ++k) {
    e.insert_edge(f1.vertices[k], anchor_v[k], targets[k], anchor_w[k]);
    rec.added_edges[k] = {f1.vertices[k], targets[k]};
  }
  rec.quadrilateral = true;
  for (int k = 0; k < 4; ++k) {
    const int k1 = (k + 1) % 4;
    rec.created[k] = {{f1.vertices[k], f1.vertices[k1], targets[k1], targets[k]}, no_face};
    if (!is_traced_face(e, rec.created[k].cycle())) rec.quadrilateral = false;
  }
  return rec;
}

inline std::array<VertexId, 4> aligned_targets(const QuadFace& f2, int offset) {
  std::array<VertexId, 4> t{};
  for (int k = 0; k < 4; ++k) t[k] = f2.vertices[static_cast<std::size_t>(((offset - k) % 4 + 4) % 4)];
  return t;
}

inline HandleResult checked_handle(const Embedding& e, const QuadFace& f1, const QuadFace& f2,
                                   const std::array<VertexId, 4>& targets) {
  check_handle_faces(e, f1, f2);
  const FaceSet before = trace_faces(e);
  HandleResult out{e, {}};
  out.record = splice_handle(out.embedding, f1, f2, targets);
  out.record.consumed_face_ids = {locate_face(before, f1), locate_face(before, f2)};
  const FaceSet after = trace_faces(out.embedding);

  const auto chi_before = euler_characteristic(e, before), chi_after = euler_characteristic(out.embedding, after);
  if (out.record.quadrilateral) {
    for (int k = 0; k < 4; ++k) out.record.created_face_ids[k] = locate_face(after, out.record.created[k]);
    const auto q_before = static_cast<std::int64_t>(count_quadrilaterals(before));
    const auto q_after = static_cast<std::int64_t>(count_quadrilaterals(after));
    require(chi_after - chi_before == -2, ErrorKind::internal, "handle changed the Euler characteristic by " +
                                                                   std::to_string(chi_after - chi_before));
    require(q_after - q_before == 2, ErrorKind::internal, "handle changed the quadrilateral count by " +
                                                              std::to_string(q_after - q_before));
    require(out.embedding.edge_count() == e.edge_count() + 4, ErrorKind::internal, "handle must add four edges");
  }
  return out;
}

}  // namespace detail

/// Handle between quadrilateral faces f1 and f2 with v_k joined to
/// f2.vertices[(offset - k) mod 4]. Reading f2 backwards makes every
/// alignment satisfy the mirror condition, so the four new faces are always
/// quadrilaterals. Every call re-traces the faces and checks that the Euler
/// characteristic drops by 2 and the quadrilateral count rises by 2.
inline HandleResult add_handle(const Embedding& e, const QuadFace& f1, const QuadFace& f2, int offset) {
  require(offset >= 0 && offset < 4, ErrorKind::invalid_surgery, "alignment offset must be 0..3");
  return detail::checked_handle(e, f1, f2, detail::aligned_targets(f2, offset));
}

/// Handle with an explicit pairing v_k -> targets[k]. Pairings that do not run
/// against f2's boundary leave non-quadrilateral faces; the record reports
/// this through `quadrilateral` and callers may try another pairing.
inline HandleResult add_handle_paired(const Embedding& e, const QuadFace& f1, const QuadFace& f2,
                                      const std::array<VertexId, 4>& targets) {
  auto sorted_t = targets;
  std::sort(sorted_t.begin(), sorted_t.end());
  require(sorted_t == f2.sorted_vertices(), ErrorKind::invalid_surgery, "pairing must be a bijection onto f2");
  return detail::checked_handle(e, f1, f2, targets);
}

/// Deletes the four edges of a handle; the two consumed faces come back.
inline Embedding remove_handle(const Embedding& e, const HandleRecord& rec) {
  Embedding out = e;
  for (const auto& [u, v] : rec.added_edges) out.erase_edge(u, v);
  for (const auto& f : rec.consumed)
    require(is_traced_face(out, f.cycle()), ErrorKind::internal, "removing a handle did not restore its faces");
  return out;
}

using VertexMap = std::map<VertexId, VertexId>;

struct LinkResult {
  Embedding embedding;
  std::vector<HandleRecord> handles;
};

/// Joins copy A to copy B along `correspondence` with one handle per face of
/// fam_a. The image of each fam_a face must be a fam_b face, traced in the
/// opposite direction, which is what a mirror-image copy provides. For each
/// face pair the four alignments are tried and the one whose edges realise
/// the correspondence is kept.
inline LinkResult link_copies(const Embedding& e, const FaceFamily& fam_a, const FaceFamily& fam_b,
                              const VertexMap& correspondence) {
  require(fam_a.faces.size() == fam_b.faces.size(), ErrorKind::invalid_link,
          "family sizes differ: " + std::to_string(fam_a.faces.size()) + " vs " + std::to_string(fam_b.faces.size()));
  require(fam_a.faces.size() * 4 == correspondence.size(), ErrorKind::invalid_link,
          "families must cover the copies exactly");
  std::vector<VertexId> domain, image;
  for (const auto& [a, b] : correspondence) {
    domain.push_back(a);
    image.push_back(b);
  }
  require(covers_exactly(fam_a, domain), ErrorKind::invalid_link, "family A does not cover copy A");
  require(covers_exactly(fam_b, image), ErrorKind::invalid_link, "family B does not cover copy B");

  std::map<std::array<VertexId, 4>, const QuadFace*> by_vertex_set;
  for (const auto& f : fam_b.faces) by_vertex_set[f.sorted_vertices()] = &f;

  LinkResult out{e, {}};
  for (const auto& fa : fam_a.faces) {
    std::array<VertexId, 4> want{};
    for (int k = 0; k < 4; ++k) want[k] = correspondence.at(fa.vertices[k]);
    auto key = want;
    std::sort(key.begin(), key.end());
    const auto hit = by_vertex_set.find(key);
    require(hit != by_vertex_set.end(), ErrorKind::invalid_link, "image of a family A face is not a family B face");
    const QuadFace& fb = *hit->second;

    int offset = -1;
    for (int p = 0; p < 4 && offset < 0; ++p)
      if (detail::aligned_targets(fb, p) == want) offset = p;
    require(offset >= 0, ErrorKind::invalid_link,
            "no alignment yields quadrilateral faces; the copies are not mirror images");

    HandleResult h = add_handle(out.embedding, fa, fb, offset);
    require(h.record.quadrilateral, ErrorKind::internal, "aligned handle produced a non-quadrilateral face");
    out.embedding = std::move(h.embedding);
    out.handles.push_back(h.record);
  }
  return out;
}

/// Splits the 2r^2 faces of a quadrilateral embedding of K_{2r,2r} into 2r
/// families of r vertex-disjoint faces, each covering all 4r vertices. Exact
/// cover search in face order, so the result is deterministic.
inline FaceReservoir partition_faces_K2r2r(const Embedding& e) {
  const auto n = e.vertex_count();
  require(n % 4 == 0 && n > 0, ErrorKind::no_partition, "not a K_{2r,2r}");
  const std::size_t r = n / 4;
  const FaceSet fs = trace_faces(e);
  require(is_quadrilateral(fs) && fs.size() == 2 * r * r, ErrorKind::no_partition,
          "embedding is not a quadrilateral embedding of K_{2r,2r}");

  std::vector<QuadFace> faces;
  std::vector<std::uint64_t> masks;
  for (std::size_t k = 0; k < fs.size(); ++k) {
    faces.push_back(quad_face_of(fs, k));
    std::uint64_t m = 0;
    for (VertexId v : faces.back().vertices) m |= std::uint64_t{1} << v;
    masks.push_back(m);
  }
  require(n <= 64, ErrorKind::no_partition, "partition search supports r <= 16");
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  std::vector<char> used(faces.size(), 0);
  std::vector<std::vector<std::size_t>> families;

  // Grow one family from `family`, covering `covered`; when it is complete,
  // recurse into the next family.
  std::function<bool(std::vector<std::size_t>&, std::uint64_t)> grow;
  std::function<bool()> next_family = [&]() -> bool {
    const auto first = std::find(used.begin(), used.end(), 0);
    if (first == used.end()) return true;
    const auto f = static_cast<std::size_t>(first - used.begin());
    std::vector<std::size_t> fam{f};
    used[f] = 1;
    const bool ok = grow(fam, masks[f]);
    used[f] = 0;
    return ok;
  };
  grow = [&](std::vector<std::size_t>& fam, std::uint64_t covered) -> bool {
    if (covered == full) {
      families.push_back(fam);
      if (next_family()) return true;
      families.pop_back();
      return false;
    }
    // lowest uncovered vertex must be covered by some later unused face
    const int v = __builtin_ctzll(~covered);
    for (std::size_t k = 0; k < faces.size(); ++k) {
      if (used[k] || (masks[k] & covered) || !(masks[k] >> v & 1U)) continue;
      used[k] = 1;
      fam.push_back(k);
      if (grow(fam, covered | masks[k])) return true;
      fam.pop_back();
      used[k] = 0;
    }
    return false;
  };

  require(next_family(), ErrorKind::no_partition, "no partition into full-cover families exists");
  FaceReservoir res;
  res.copy_tag = "K(" + std::to_string(2 * r) + "," + std::to_string(2 * r) + ")";
  for (const auto& fam : families) {
    FaceFamily ff;
    for (auto k : fam) ff.faces.push_back(faces[k]);
    res.families.push_back(std::move(ff));
  }
  return res;
}

/// Links 0, 2, 4, ... out of `link_count`.
inline std::vector<std::size_t> alternate_links(std::size_t link_count) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < link_count; k += 2) out.push_back(k);
  return out;
}

/// Two families from the handles of the chosen links: faces 0 and 2 of every
/// handle form the first, faces 1 and 3 the second. Both must be
/// vertex-disjoint and cover all `vertex_count` vertices.
inline FaceReservoir reservoir_from_links(const std::vector<std::vector<HandleRecord>>& links,
                                          const std::vector<std::size_t>& chosen, std::size_t vertex_count) {
  FaceReservoir res;
  res.families.resize(2);
  for (auto l : chosen) {
    require(l < links.size(), ErrorKind::construction_failure, "chosen link out of range");
    for (const auto& h : links[l]) {
      res.families[0].faces.push_back(h.created[0]);
      res.families[0].faces.push_back(h.created[2]);
      res.families[1].faces.push_back(h.created[1]);
      res.families[1].faces.push_back(h.created[3]);
    }
  }
  const auto everything = all_vertices(vertex_count);
  for (const auto& fam : res.families)
    require(covers_exactly(fam, everything), ErrorKind::construction_failure,
            "reservoir family does not cover every vertex exactly once");
  return res;
}

/// The reservoir as seen in the mirror image of its embedding.
inline FaceReservoir mirror(const FaceReservoir& res) {
  FaceReservoir out = res;
  for (auto& fam : out.families)
    for (auto& f : fam.faces) f = f.reversed();
  return out;
}

}  // namespace quadgenus

#pragma once

// The acceptance grid. Each criterion returns a pass/fail line; the artifacts
// string collects every certificate, embedding and oracle result produced, so
// two runs with the same seed can be compared byte for byte.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iterator>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "quadgenus/constructions.hpp"
#include "quadgenus/embedding.hpp"
#include "quadgenus/family.hpp"
#include "quadgenus/formulas.hpp"
#include "quadgenus/io.hpp"
#include "quadgenus/oracle.hpp"
#include "quadgenus/surgery.hpp"

namespace quadgenus {

struct SelftestOptions {
  std::uint64_t seed = 1;
  /// Negative controls: evaluate the product-of-K_{t,t} identities with the
  /// (j - 4) expression, or build products without mirrored copies.
  bool uncorrected_cube_formula = false;
  bool mirror_copies = true;
};

struct CriterionOutcome {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct SelftestReport {
  std::vector<CriterionOutcome> criteria;
  std::string artifacts;

  bool all_passed() const {
    for (const auto& c : criteria)
      if (!c.passed) return false;
    return !criteria.empty();
  }
};

namespace detail {

class Checker {
 public:
  void expect(bool cond, const std::string& what) {
    if (!cond && first_failure_.empty()) first_failure_ = what;
    ok_ = ok_ && cond;
  }
  bool ok() const { return ok_; }
  const std::string& failure() const { return first_failure_; }

 private:
  bool ok_ = true;
  std::string first_failure_;
};

inline std::string str(std::int64_t v) { return std::to_string(v); }

/// Independent re-check of a construction: faces traced again, all of length
/// four, genus from Euler's formula equal to `genus` and to the lower bound.
inline void check_construction(Checker& c, const ConstructionResult& res, std::int64_t genus, const std::string& name) {
  const FaceSet fs = trace_faces(res.embedding);
  const auto n = static_cast<std::int64_t>(res.embedding.vertex_count());
  const auto m = static_cast<std::int64_t>(res.embedding.edge_count());
  const auto f = static_cast<std::int64_t>(fs.size());
  c.expect(is_quadrilateral(fs), name + ": not quadrilateral");
  c.expect(4 * f == 2 * m, name + ": 4f != 2m");
  c.expect(2 - n + m - f == 2 * genus, name + ": Euler genus " + str((2 - n + m - f) / 2) + " != " + str(genus));
  c.expect(res.certificate.genus == genus, name + ": certificate genus " + str(res.certificate.genus));
  c.expect(genus_lower_bound(res.embedding.graph()) == genus, name + ": lower bound differs");
  c.expect(res.certificate.minimal && res.certificate.quadrilateral, name + ": certificate not minimal");
}

inline void record(std::string& artifacts, const ConstructionResult& res) {
  artifacts += to_json(res.certificate).dump() + "\n";
  artifacts += to_json(res.embedding).dump() + "\n";
}

template <typename Fn>
CriterionOutcome run_criterion(int id, std::string name, Fn&& body) {
  CriterionOutcome out{id, std::move(name), false, {}, 0};
  const auto t0 = std::chrono::steady_clock::now();
  Checker c;
  try {
    body(c);
    out.passed = c.ok();
    out.detail = c.ok() ? "ok" : c.failure();
  } catch (const std::exception& ex) {
    out.passed = false;
    out.detail = std::string("exception: ") + ex.what();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

inline std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return lo + detail::draw(rng, hi - lo + 1);
}

}  // namespace detail

inline CriterionOutcome criterion_ringel(std::string& artifacts) {
  return detail::run_criterion(1, "K_{2r,2r} quadrilateral embeddings, genus (r-1)^2", [&](detail::Checker& c) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::int64_t want[] = {0, 1, 4};
    for (int r = 1; r <= 3; ++r) {
      const auto res = embed_K2r2r(r);
      detail::check_construction(c, res, want[r - 1], "K(" + std::to_string(2 * r) + "," + std::to_string(2 * r) + ")");
      c.expect(static_cast<std::int64_t>(trace_faces(res.embedding).size()) == 2 * r * r, "face count != 2r^2");
      detail::record(artifacts, res);
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(secs < 1.0, "took " + std::to_string(secs) + " s, limit 1 s");
  });
}

inline CriterionOutcome criterion_cube(std::string& artifacts, const ConstructionOptions& opts) {
  return detail::run_criterion(2, "Q_2^(4): n=64, m=256, f=128, genus 33, 4 families x 16 faces", [&](detail::Checker& c) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto res = embed_cube(2, 2, opts);
    detail::check_construction(c, res, 33, "Q(2,4)");
    c.expect(res.certificate.n == 64 && res.certificate.m == 256 && res.certificate.f == 128, "counts differ");
    c.expect(res.reservoir.families.size() == 4, "reservoir must have 4 families");
    const auto everything = all_vertices(64);
    std::set<std::array<VertexId, 4>> used;
    for (const auto& fam : res.reservoir.families) {
      c.expect(fam.faces.size() == 16, "family size " + std::to_string(fam.faces.size()));
      c.expect(covers_exactly(fam, everything), "family does not cover all 64 vertices disjointly");
      for (const auto& f : fam.faces) {
        c.expect(is_traced_face(res.embedding, f.cycle()), "family face is not a face");
        c.expect(used.insert(f.vertices).second, "families share a face");
      }
    }
    detail::record(artifacts, res);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(secs < 5.0, "took " + std::to_string(secs) + " s, limit 5 s");
  });
}

inline CriterionOutcome criterion_cube_cycle(std::string& artifacts, const ConstructionOptions& opts) {
  return detail::run_criterion(3, "Q_i^(2r) x C_2s grid, genus 1 + 2^(2i-1) s r^i (ir-1)", [&](detail::Checker& c) {
    for (int i = 1; i <= 2; ++i)
      for (int r = 1; r <= 2; ++r)
        for (int s = 2; s <= 3; ++s) {
          const auto res = embed_cube_cycle(i, r, s, opts);
          const auto formula = cube_cycle_genus(i, r, s).value;
          detail::check_construction(c, res, formula,
                                     "(" + std::to_string(i) + "," + std::to_string(r) + "," + std::to_string(s) + ")");
          if (i == 1 && r == 2 && s == 3) c.expect(res.certificate.genus == 13, "K(4,4) x C(6) must have genus 13");
          detail::record(artifacts, res);
        }
  });
}

inline CriterionOutcome criterion_cycles(std::string& artifacts, const ConstructionOptions& opts) {
  return detail::run_criterion(4, "Q_i^(2r) x G_j: 17, 9, 65 (cycle and corollary formulas)", [&](detail::Checker& c) {
    struct Case {
      int i, r;
      std::vector<int> m;
      std::int64_t genus;
    };
    for (const Case& k : {Case{1, 1, {2, 2}, 17}, Case{1, 2, {2}, 9}, Case{1, 2, {2, 2}, 65}}) {
      const auto res = embed_cube_cycles(k.i, k.r, k.m, opts);
      const auto name = res.certificate.construction_tag;
      detail::check_construction(c, res, k.genus, name);
      c.expect(main_cycles_genus(k.i, k.r, k.m).value == k.genus, name + ": cycle formula differs");
      if (k.i == 1) c.expect(corollary_genus(k.r, k.m).value == k.genus, name + ": corollary formula differs");
      detail::record(artifacts, res);
    }
  });
}

inline CriterionOutcome criterion_paths(std::string& artifacts, const ConstructionOptions& opts) {
  return detail::run_criterion(5, "Q_i^(2r) x H_j: 7, 3, 0, 49; handle-removal route agrees", [&](detail::Checker& c) {
    struct Case {
      int i, r;
      std::vector<int> m;
      std::int64_t genus;
    };
    for (const Case& k : {Case{1, 2, {2}, 7}, Case{1, 2, {1}, 3}, Case{1, 1, {2}, 0}, Case{1, 2, {2, 2}, 49}}) {
      const auto res = embed_cube_paths(k.i, k.r, k.m, opts);
      const auto name = res.certificate.construction_tag;
      detail::check_construction(c, res, k.genus, name);
      c.expect(main_paths_genus(k.i, k.r, k.m).value == k.genus, name + ": path formula differs");
      if (k.m.size() == 1) {
        c.expect(cube_path_genus(k.i, k.r, k.m[0]).value == k.genus, name + ": single-path formula differs");
        const auto removal = embed_cube_path(k.i, k.r, k.m[0], opts);
        detail::check_construction(c, removal, k.genus, removal.certificate.construction_tag);
        c.expect(removal.certificate.same_counts(res.certificate), name + ": removal route certificate differs");
        detail::record(artifacts, removal);
      }
      detail::record(artifacts, res);
    }
  });
}

inline CriterionOutcome criterion_handles(std::string& artifacts, std::uint64_t seed, const ConstructionOptions& opts) {
  return detail::run_criterion(6, "1000 random handles: dchi=-2, dm=+4, dquad=+2", [&](detail::Checker& c) {
    std::mt19937_64 rng(seed);
    // hosts: constructed quadrilateral embeddings and random rotation systems
    std::vector<Embedding> hosts;
    hosts.push_back(embed_cube(2, 2, opts).embedding);
    hosts.push_back(embed_cube_cycle(1, 2, 2, opts).embedding);
    {
      const Embedding k44 = embed_K2r2r(2).embedding;
      Graph two = disjoint_union(k44.graph(), k44.graph());
      std::vector<Rotation> rot = k44.rotations();
      const Embedding flipped = mirror(k44);
      for (const auto& r : flipped.rotations()) {
        Rotation shifted;
        for (VertexId v : r) shifted.push_back(v + 8);
        rot.push_back(shifted);
      }
      hosts.emplace_back(two, rot);
    }
    for (int k = 0; k < 3; ++k) {
      const Graph g = build_family("C(6) x C(6)");
      std::vector<Rotation> rot(g.vertex_count());
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        rot[v] = g.neighbors(v);
        for (std::size_t a = rot[v].size(); a > 1; --a) std::swap(rot[v][a - 1], rot[v][detail::draw(rng, a)]);
      }
      hosts.emplace_back(g, rot);
    }

    int applied = 0, attempts = 0;
    std::vector<Embedding> current = hosts;
    while (applied < 1000 && attempts < 200000) {
      ++attempts;
      const auto h = detail::uniform(rng, 0, current.size() - 1);
      const Embedding& e = current[h];
      const FaceSet fs = trace_faces(e);
      std::vector<std::size_t> quads;
      for (std::size_t k = 0; k < fs.size(); ++k)
        if (fs.faces[k].size() == 4) quads.push_back(k);
      if (quads.size() < 2) {
        current[h] = hosts[h];
        continue;
      }
      const auto a = quads[detail::uniform(rng, 0, quads.size() - 1)];
      const auto b = quads[detail::uniform(rng, 0, quads.size() - 1)];
      const QuadFace f1 = quad_face_of(fs, a), f2 = quad_face_of(fs, b);
      const auto s1 = f1.sorted_vertices(), s2 = f2.sorted_vertices();
      std::vector<VertexId> common;
      std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(common));
      if (a == b || !common.empty()) continue;
      const int offset = static_cast<int>(detail::uniform(rng, 0, 3));
      bool clash = false;
      for (int k = 0; k < 4; ++k)
        if (e.graph().has_edge(f1.vertices[k], f2.vertices[static_cast<std::size_t>(((offset - k) % 4 + 4) % 4)]))
          clash = true;
      if (clash) continue;

      const HandleResult res = add_handle(e, f1, f2, offset);
      const FaceSet after = trace_faces(res.embedding);
      const auto dchi = euler_characteristic(res.embedding, after) - euler_characteristic(e, fs);
      const auto dm = static_cast<std::int64_t>(res.embedding.edge_count()) - static_cast<std::int64_t>(e.edge_count());
      const auto dq = static_cast<std::int64_t>(count_quadrilaterals(after)) -
                      static_cast<std::int64_t>(count_quadrilaterals(fs));
      c.expect(dchi == -2, "handle " + std::to_string(applied) + ": dchi = " + detail::str(dchi));
      c.expect(dm == 4, "handle " + std::to_string(applied) + ": dm = " + detail::str(dm));
      c.expect(dq == 2, "handle " + std::to_string(applied) + ": dquad = " + detail::str(dq));
      c.expect(res.embedding.vertex_count() == e.vertex_count(), "handle changed n");
      if (!c.ok()) return;
      ++applied;
      // keep stacking handles on a host for a while, then start it afresh
      current[h] = res.embedding.edge_count() > hosts[h].edge_count() + 80 ? hosts[h] : res.embedding;
      if (applied % 100 == 0) artifacts += to_json(res.record).dump() + "\n";
    }
    c.expect(applied == 1000, "only " + std::to_string(applied) + " valid handle applications found");
  });
}

inline CriterionOutcome criterion_oracle(std::string& artifacts, std::uint64_t seed) {
  return detail::run_criterion(7, "oracle: K4=0, K33=1, K5=1 exhaustive; K44=1, C4xC4=1", [&](detail::Checker& c) {
    auto witness_ok = [&](const OracleResult& r, const Graph& g, const std::string& name) {
      c.expect(validate(r.witness).empty(), name + ": witness invalid");
      c.expect(r.witness.graph().edges() == g.edges(), name + ": witness embeds another graph");
      c.expect(euler_genus(r.witness).genus == r.best_genus, name + ": witness genus mismatch");
      artifacts += to_json(r).dump() + "\n";
    };
    struct Case {
      const char* name;
      Graph g;
      std::int64_t genus;
    };
    for (const Case& k : {Case{"K4", make_complete(4), 0}, Case{"K3,3", make_complete_bipartite(3, 3), 1},
                          Case{"K5", make_complete(5), 1}}) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto r = exhaustive_min_genus(k.g);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      c.expect(r.exhaustive && r.best_genus == k.genus,
               std::string(k.name) + ": oracle genus " + detail::str(r.best_genus));
      c.expect(secs < 5.0, std::string(k.name) + ": took " + std::to_string(secs) + " s");
      witness_ok(r, k.g, k.name);
    }
    const Graph k44 = make_complete_bipartite(4, 4);
    const auto r44 = exhaustive_min_genus(k44);
    c.expect(r44.exhaustive && r44.best_genus == 1 && genus_lower_bound(k44) == 1, "K4,4: oracle genus " + detail::str(r44.best_genus));
    witness_ok(r44, k44, "K4,4");

    const Graph torus = build_family("C(4) x C(4)");
    SearchBudget budget;
    budget.seed = seed;
    budget.target_genus = 1;
    budget.max_rotation_systems = 5'000'000;
    const auto rt = stochastic_search(torus, budget);
    c.expect(rt.best_genus == 1 && genus_lower_bound(torus) == 1, "C4xC4: search genus " + detail::str(rt.best_genus));
    witness_ok(rt, torus, "C4xC4");
  });
}

inline CriterionOutcome criterion_formulas(std::string& artifacts, std::uint64_t seed, bool uncorrected) {
  return detail::run_criterion(8, "formula identities (a)-(f), 200+ random tuples each", [&](detail::Checker& c) {
    std::mt19937_64 rng(seed);
    auto pick = [&](std::uint64_t lo, std::uint64_t hi) { return static_cast<int>(detail::uniform(rng, lo, hi)); };
    auto pick_list = [&](std::size_t len, int lo, int hi) {
      std::vector<int> m;
      for (std::size_t k = 0; k < len; ++k) m.push_back(pick(static_cast<std::uint64_t>(lo), static_cast<std::uint64_t>(hi)));
      return m;
    };
    // product of K_{t,t} under test: the real formula, or the (j - 4) variant
    auto cube = [&](int j, int t) -> Rational {
      return uncorrected ? cube_genus_uncorrected(j, t) : Rational(cube_genus(j, t).value);
    };
    constexpr int trials = 200;
    std::int64_t checked = 0;
    for (int k = 0; k < trials; ++k) {
      const int i = pick(1, 4), r = pick(1, 4), s = pick(2, 6);
      c.expect(main_cycles_genus(i, r, {s}) .value == cube_cycle_genus(i, r, s).value, "(a) fails");
      const auto m = pick_list(static_cast<std::size_t>(pick(1, 4)), 2, 5);
      c.expect(corollary_genus(r, m).value == main_cycles_genus(1, r, m).value, "(b) fails");
      const int sp = pick(1, 6);
      c.expect(main_paths_genus(i, r, {sp}).value == cube_path_genus(i, r, sp).value, "(c) fails");
      const int j = pick(2, 12);
      c.expect(cube(j, 1) == Rational(hypercube_genus(j).value), "(d) fails at j=" + std::to_string(j));
      const int rr = pick(1, 8);
      c.expect(cube(1, 2 * rr) == Rational(ringel_genus(rr).value), "(e) fails at r=" + std::to_string(rr));
      checked += 5;
    }

    // (f): every formula equals 1 + m/4 - n/2 on the graph build_family produces
    auto euler = [](const std::string& expr) {
      const Graph g = build_family(expr);
      return quadrilateral_genus(static_cast<std::int64_t>(g.vertex_count()), static_cast<std::int64_t>(g.edge_count()));
    };
    auto join = [](const std::string& atom, const std::vector<int>& m, int scale) {
      std::string s;
      for (std::size_t k = 0; k < m.size(); ++k) s += (k ? " x " : "") + atom + "(" + std::to_string(scale * m[k]) + ")";
      return s;
    };
    auto q = [](int i, int t) { return "Q(" + std::to_string(i) + "," + std::to_string(t) + ")"; };
    for (int k = 0; k < trials; ++k) {
      const auto mp = pick_list(static_cast<std::size_t>(pick(3, 4)), 2, 4);
      auto mp_even = mp;
      for (int a = 0; a < 3; ++a) mp_even[a] += mp_even[a] % 2;
      c.expect(Rational(white_path_genus(mp_even).value) == euler(join("P", mp_even, 1)), "(f) white_path_genus");
      const auto mc = pick_list(static_cast<std::size_t>(pick(2, 3)), 2, 3);
      c.expect(Rational(white_cycle_genus(mc).value) == euler(join("C", mc, 2)), "(f) white_cycle_genus");
      const int tj = pick(1, 3), tt = 2 * pick(1, 2);
      c.expect(cube(tj, tt) == euler(q(tj, tt)), "(f) cube_genus at j=" + std::to_string(tj) + ", t=" + std::to_string(tt));
      const int hn = pick(2, 8);
      c.expect(Rational(hypercube_genus(hn).value) == euler(q(hn, 1)), "(f) hypercube_genus");
      const int rg = pick(1, 6);
      c.expect(Rational(ringel_genus(rg).value) == euler(q(1, 2 * rg)), "(f) ringel_genus");
      const int i = pick(1, 2), r = pick(1, 2), s = pick(2, 4);
      c.expect(Rational(cube_cycle_genus(i, r, s).value) == euler(q(i, 2 * r) + " x C(" + std::to_string(2 * s) + ")"),
               "(f) cube_cycle_genus");
      c.expect(Rational(cube_path_genus(i, r, s - 1).value) == euler(q(i, 2 * r) + " x P(" + std::to_string(2 * s - 2) + ")"),
               "(f) cube_path_genus");
      const auto m2 = pick_list(static_cast<std::size_t>(pick(1, 2)), 2, 3);
      c.expect(Rational(main_cycles_genus(1, r, m2).value) == euler(q(1, 2 * r) + " x " + join("C", m2, 2)),
               "(f) main_cycles_genus");
      c.expect(Rational(corollary_genus(r, m2).value) == euler(join("C", m2, 2) + " x " + q(1, 2 * r)),
               "(f) corollary_genus");
      const auto p2 = pick_list(static_cast<std::size_t>(pick(1, 2)), 1, 3);
      c.expect(Rational(main_paths_genus(1, r, p2).value) == euler(q(1, 2 * r) + " x " + join("P", p2, 2)),
               "(f) main_paths_genus");
      checked += 10;
    }

    c.expect(cube(2, 2) == Rational(1), "cube_genus(2,2) must be 1");
    c.expect(cube(2, 4) == Rational(33), "cube_genus(2,4) must be 33");
    // the (j - 4) expression has to break identity (e) at r = 2 and disagree
    // with C4 x C4 at (j, t) = (2, 2); otherwise the control is not a control
    c.expect(cube_genus_uncorrected(1, 4) != Rational(ringel_genus(2).value), "(j-4) variant unexpectedly satisfies (e)");
    c.expect(cube_genus_uncorrected(2, 2) == Rational(-3), "(j-4) variant at (2,2) should be -3");
    artifacts += "formula identities checked: " + std::to_string(checked) + "\n";
  });
}

inline CriterionOutcome criterion_bipartite(std::string& artifacts, std::uint64_t seed) {
  return detail::run_criterion(9, "product bipartite iff both factors bipartite (100 pairs)", [&](detail::Checker& c) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    struct Factor {
      Graph g;
      bool bipartite;
      std::string name;
    };
    auto random_factor = [&]() -> Factor {
      switch (detail::uniform(rng, 0, 3)) {
        case 0: {
          const int n = static_cast<int>(detail::uniform(rng, 2, 7));
          return {make_path(n), true, "P" + std::to_string(n)};
        }
        case 1: {
          const int n = 2 * static_cast<int>(detail::uniform(rng, 2, 4));
          return {make_cycle(n), true, "C" + std::to_string(n)};
        }
        case 2: {
          const int n = 2 * static_cast<int>(detail::uniform(rng, 1, 3)) + 1;
          return {make_any_cycle(n), false, "C" + std::to_string(n)};
        }
        default: {
          const int s = static_cast<int>(detail::uniform(rng, 1, 4)), t = static_cast<int>(detail::uniform(rng, 1, 4));
          return {make_complete_bipartite(s, t), true, "K" + std::to_string(s) + "," + std::to_string(t)};
        }
      }
    };
    int mixed = 0;
    for (int k = 0; k < 100; ++k) {
      const Factor a = random_factor(), b = random_factor();
      const bool product = is_bipartite(cartesian_product(a.g, b.g)).has_value();
      c.expect(product == (a.bipartite && b.bipartite), a.name + " x " + b.name + ": bipartiteness mismatch");
      if (a.bipartite != b.bipartite) ++mixed;
    }
    artifacts += "bipartite pairs with exactly one odd factor: " + std::to_string(mixed) + "\n";
  });
}

/// Criteria 1 to 9.
inline SelftestReport run_selftest(const SelftestOptions& opts = {}) {
  SelftestReport rep;
  ConstructionOptions copts;
  copts.mirror_copies = opts.mirror_copies;
  rep.criteria.push_back(criterion_ringel(rep.artifacts));
  rep.criteria.push_back(criterion_cube(rep.artifacts, copts));
  rep.criteria.push_back(criterion_cube_cycle(rep.artifacts, copts));
  rep.criteria.push_back(criterion_cycles(rep.artifacts, copts));
  rep.criteria.push_back(criterion_paths(rep.artifacts, copts));
  rep.criteria.push_back(criterion_handles(rep.artifacts, opts.seed, copts));
  rep.criteria.push_back(criterion_oracle(rep.artifacts, opts.seed));
  rep.criteria.push_back(criterion_formulas(rep.artifacts, opts.seed, opts.uncorrected_cube_formula));
  rep.criteria.push_back(criterion_bipartite(rep.artifacts, opts.seed));
  return rep;
}

/// Criteria 1 to 9, then a second run to check the artifacts are identical
/// and the first run finished within 60 s.
inline SelftestReport run_full_selftest(const SelftestOptions& opts = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  SelftestReport rep = run_selftest(opts);
  const double first = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const SelftestReport again = run_selftest(opts);

  CriterionOutcome ten{10, "criteria 1-9 under 60 s, artifacts identical across reruns", false, {}, first};
  const bool same = rep.artifacts == again.artifacts;
  bool first_ok = true;
  for (const auto& c : rep.criteria) first_ok = first_ok && c.passed;
  ten.passed = first_ok && same && first < 60.0;
  ten.detail = !first_ok ? "criteria 1-9 did not all pass"
               : !same   ? "artifacts differ between runs"
               : first >= 60.0 ? "took " + std::to_string(first) + " s"
                               : "ok (" + std::to_string(rep.artifacts.size()) + " artifact bytes)";
  rep.criteria.push_back(ten);
  return rep;
}

inline std::string format_outcome(const CriterionOutcome& c) {
  std::ostringstream os;
  os << (c.passed ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << "  [" << c.detail << ", ";
  os.precision(3);
  os << std::fixed << c.seconds << " s]";
  return os.str();
}

}  // namespace quadgenus

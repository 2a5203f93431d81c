// quadgenus: build product graphs, construct and verify minimum-genus
// quadrilateral embeddings, evaluate the genus formulas, run the search
// oracle and the acceptance self-test.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quadgenus/constructions.hpp"
#include "quadgenus/embedding.hpp"
#include "quadgenus/error.hpp"
#include "quadgenus/family.hpp"
#include "quadgenus/formulas.hpp"
#include "quadgenus/io.hpp"
#include "quadgenus/oracle.hpp"
#include "quadgenus/selftest.hpp"

#ifndef QUADGENUS_VERSION
#define QUADGENUS_VERSION "0.0.0"
#endif

namespace {

using namespace quadgenus;

enum Exit : int {
  exit_ok = 0,
  exit_usage = 1,
  exit_parse = 2,
  exit_invalid = 3,
  exit_unsupported = 4,
  exit_verification = 5,
  exit_budget = 6,
  exit_internal = 7,
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return exit_parse;
    case ErrorKind::unsupported_family: return exit_unsupported;
    case ErrorKind::verification_failure: return exit_verification;
    case ErrorKind::budget_exceeded: return exit_budget;
    case ErrorKind::construction_failure:
    case ErrorKind::internal: return exit_internal;
    default: return exit_invalid;
  }
}

struct Common {
  std::string out;
  std::uint64_t seed = 1;
  std::uint64_t budget = 10'000'000;
  std::optional<std::int64_t> target;
  bool json = false;
};

class Manifest {
 public:
  Manifest(std::string command, const Common& c) : command_(std::move(command)), seed_(c.seed) {}

  void param(const std::string& key, json value) { params_[key] = std::move(value); }
  void input(const std::string& path) { inputs_.push_back(path); }
  void output(const std::string& path) { outputs_.push_back(path); }

  void write(const std::string& path) const {
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    json j = {{"command", command_}, {"parameters", params_}, {"inputs", inputs_}, {"outputs", outputs_},
              {"seed", seed_},       {"version", QUADGENUS_VERSION}, {"wall_clock_seconds", secs}};
    write_json_file(path, j);
  }

 private:
  std::string command_;
  std::uint64_t seed_;
  json params_ = json::object();
  std::vector<std::string> inputs_, outputs_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const Common& c, const json& j, const std::string& text) {
  if (c.json)
    std::cout << j.dump() << "\n";
  else
    std::cout << text;
}

// Reorders the factors of a supported expression: all cube-type factors
// (K(t,t) and Q(i,t) with one common even t) first, then cycles and paths in
// the order given. Returns i, r and the factor steps, plus the permutation
// mapping positions in the normalized product to positions in the input.
struct EmbedPlan {
  int i = 0;
  int r = 0;
  std::vector<FactorStep> steps;
  std::vector<std::size_t> permutation;
  FamilyExpr normalized;
};

EmbedPlan plan_embedding(const FamilyExpr& expr) {
  EmbedPlan plan;
  int t = 0;
  std::vector<std::size_t> rest;
  for (std::size_t k = 0; k < expr.factors.size(); ++k) {
    const FamilyAtom& a = expr.factors[k];
    int depth = 0, part = 0;
    if (a.kind == FamilyAtom::Kind::complete_bipartite) {
      require(a.first == a.second, ErrorKind::unsupported_family, "K(s,t) factor needs s = t");
      depth = 1;
      part = a.first;
    } else if (a.kind == FamilyAtom::Kind::cube) {
      depth = a.first;
      part = a.second;
    } else {
      require(a.first % 2 == 0, ErrorKind::unsupported_family,
              "cycle and path factors need an even number of vertices, got " + to_string(a));
      rest.push_back(k);
      continue;
    }
    require(part >= 2 && part % 2 == 0, ErrorKind::unsupported_family,
            "cube factors need an even part size, got " + to_string(a));
    require(t == 0 || t == part, ErrorKind::unsupported_family, "all cube factors need the same part size");
    t = part;
    plan.i += depth;
    plan.permutation.push_back(k);
    plan.normalized.factors.push_back(a);
  }
  require(plan.i >= 1, ErrorKind::unsupported_family, "expression has no K(2r,2r) or Q(i,2r) factor");
  plan.r = t / 2;
  for (std::size_t k : rest) {
    const FamilyAtom& a = expr.factors[k];
    const bool cycle = a.kind == FamilyAtom::Kind::cycle;
    require(!cycle || a.first >= 4, ErrorKind::unsupported_family, "cycle factors need at least 4 vertices");
    plan.steps.push_back({cycle ? FactorStep::Kind::cycle : FactorStep::Kind::path, a.first / 2});
    plan.permutation.push_back(k);
    plan.normalized.factors.push_back(a);
  }
  return plan;
}

int cmd_build(const std::string& expr_text, const Common& c) {
  Manifest manifest("build", c);
  manifest.param("expr", expr_text);
  const FamilyExpr expr = parse_family_expr(expr_text);
  const Graph g = build_family(expr);
  const bool bip = is_bipartite(g).has_value();
  if (!c.out.empty()) {
    write_json_file(c.out, to_json(g));
    manifest.output(c.out);
    manifest.write(c.out + ".manifest.json");
  }
  json summary = {{"expr", to_string(expr)}, {"n", g.vertex_count()}, {"m", g.edge_count()}, {"bipartite", bip}};
  std::ostringstream os;
  os << to_string(expr) << ": n=" << g.vertex_count() << " m=" << g.edge_count()
     << " bipartite=" << (bip ? "yes" : "no") << "\n";
  emit(c, summary, os.str());
  return exit_ok;
}

int cmd_embed(const std::string& expr_text, const Common& c) {
  Manifest manifest("embed", c);
  manifest.param("expr", expr_text);
  const FamilyExpr expr = parse_family_expr(expr_text);
  const EmbedPlan plan = plan_embedding(expr);
  const ConstructionResult res = plan.steps.empty() ? embed_cube(plan.i, plan.r)
                                                    : embed_cube_product(plan.i, plan.r, plan.steps);
  require(res.certificate.minimal, ErrorKind::verification_failure, "construction is not minimal");
  // the constructions number vertices by the normalized factor order
  require(res.embedding.graph().edges() == build_family(plan.normalized).edges(), ErrorKind::internal,
          "constructed graph differs from the normalized product");

  manifest.param("normalized", to_string(plan.normalized));
  manifest.param("factor_permutation", plan.permutation);
  if (!c.out.empty()) {
    json e = to_json(res.embedding);
    e["expr"] = to_string(plan.normalized);
    e["factor_permutation"] = plan.permutation;
    const std::string emb = c.out + ".embedding.json", cert = c.out + ".certificate.json",
                      log = c.out + ".handles.jsonl";
    write_json_file(emb, e);
    write_json_file(cert, to_json(res.certificate));
    write_text_file(log, handle_log(res.trace));
    for (const auto& p : {emb, cert, log}) manifest.output(p);
    manifest.write(c.out + ".manifest.json");
  }
  const auto& k = res.certificate;
  std::ostringstream os;
  os << to_string(plan.normalized) << ": n=" << k.n << " m=" << k.m << " f=" << k.f << " genus=" << k.genus
     << " quadrilateral=" << (k.quadrilateral ? "yes" : "no") << " minimal=" << (k.minimal ? "yes" : "no")
     << " handles=" << res.trace.size() << "\n";
  emit(c, to_json(k), os.str());
  return exit_ok;
}

std::string sibling_certificate(const std::string& embedding_path) {
  const std::string suffix = ".embedding.json";
  if (embedding_path.size() > suffix.size() &&
      embedding_path.compare(embedding_path.size() - suffix.size(), suffix.size(), suffix) == 0)
    return embedding_path.substr(0, embedding_path.size() - suffix.size()) + ".certificate.json";
  return {};
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), ErrorKind::invalid_parameter, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Embedding load_embedding(const std::string& path) {
  Embedding e = embedding_from_json(read_json_file(path));
  const auto problems = validate(e);
  if (!problems.empty()) fail(ErrorKind::invalid_embedding, path + ": " + problems.front());
  return e;
}

int cmd_verify(const std::string& path, std::string cert_path, const Common& c) {
  const Embedding e = load_embedding(path);
  if (cert_path.empty()) cert_path = sibling_certificate(path);
  const bool have_cert = !cert_path.empty() && std::ifstream(cert_path).good();

  std::string tag;
  std::string stored_text;
  if (have_cert) {
    stored_text = read_text(cert_path);
    tag = certificate_from_json(read_json_file(cert_path)).construction_tag;
  }
  EmbeddingCertificate fresh;
  if (is_connected(e.graph())) {
    fresh = euler_genus(e, tag);
  } else {
    const auto parts = components_certificate(e);
    fresh = detail::certify_counts(e.graph(), static_cast<std::int64_t>(trace_faces(e).size()),
                                   is_quadrilateral(trace_faces(e)), tag);
    fresh.genus = 0;
    for (const auto& p : parts) fresh.genus += p.genus;
  }
  const json fresh_json = to_json(fresh);
  if (!c.out.empty()) write_json_file(c.out, fresh_json);

  bool match = true;
  if (have_cert) match = stored_text == fresh_json.dump(1) + "\n";

  std::ostringstream os;
  os << "n=" << fresh.n << " m=" << fresh.m << " f=" << fresh.f << " genus=" << fresh.genus
     << " quadrilateral=" << (fresh.quadrilateral ? "yes" : "no") << " minimal=" << (fresh.minimal ? "yes" : "no")
     << "\n";
  if (have_cert) os << (match ? "certificate matches " : "certificate MISMATCH ") << cert_path << "\n";
  json j = fresh_json;
  if (have_cert) j["certificate_matches"] = match;
  emit(c, j, os.str());
  if (!match) {
    std::cerr << "verification-failure: recomputed certificate differs from " << cert_path << "\n";
    return exit_verification;
  }
  return exit_ok;
}

int cmd_faces(const std::string& path, const Common& c) {
  const Embedding e = load_embedding(path);
  const FaceSet fs = trace_faces(e);
  const json j = to_json(fs);
  if (!c.out.empty()) write_json_file(c.out, j);
  std::ostringstream os;
  for (std::size_t k = 0; k < fs.size(); ++k) {
    os << k << ":";
    for (VertexId v : fs.faces[k]) os << " " << v;
    os << "\n";
  }
  emit(c, j, os.str());
  return exit_ok;
}

// Cycle and path factors are given by vertex count; these convert C(2m) or
// P(2m) into the m the closed forms take.
int half_of(int vertices, const std::string& what) {
  require(vertices >= 2 && vertices % 2 == 0, ErrorKind::invalid_parameter,
          what + " needs an even vertex count, got " + std::to_string(vertices));
  return vertices / 2;
}

std::vector<int> halves(const std::vector<int>& v, std::size_t from, const std::string& what) {
  std::vector<int> out;
  for (std::size_t k = from; k < v.size(); ++k) out.push_back(half_of(v[k], what));
  return out;
}

json evaluate_formula(const std::string& name, const std::vector<int>& p) {
  auto need = [&](std::size_t count, bool at_least = false) {
    const bool ok = at_least ? p.size() >= count : p.size() == count;
    require(ok, ErrorKind::invalid_parameter,
            name + " takes " + (at_least ? "at least " : "") + std::to_string(count) + " parameters");
  };
  GenusValue g;
  if (name == "white_path_genus") {
    need(3, true);
    g = white_path_genus(p);
  } else if (name == "white_cycle_genus") {
    need(2, true);
    g = white_cycle_genus(halves(p, 0, "cycle"));
  } else if (name == "cube_genus") {
    need(2);
    g = cube_genus(p[0], p[1]);
  } else if (name == "hypercube_genus") {
    need(1);
    g = hypercube_genus(p[0]);
  } else if (name == "ringel_genus") {
    need(1);
    g = ringel_genus(p[0]);
  } else if (name == "cube_cycle_genus") {
    need(3);
    g = cube_cycle_genus(p[0], p[1], half_of(p[2], "cycle"));
  } else if (name == "main_cycles_genus") {
    need(3, true);
    g = main_cycles_genus(p[0], p[1], halves(p, 2, "cycle"));
  } else if (name == "corollary_genus") {
    need(2, true);
    g = corollary_genus(p[0], halves(p, 1, "cycle"));
  } else if (name == "cube_path_genus") {
    need(3);
    g = cube_path_genus(p[0], p[1], half_of(p[2], "path"));
  } else if (name == "main_paths_genus") {
    need(3, true);
    g = main_paths_genus(p[0], p[1], halves(p, 2, "path"));
  } else {
    fail(ErrorKind::invalid_parameter, "unknown formula " + name);
  }
  return {{"formula", name}, {"params", p}, {"genus", g.value}};
}

int cmd_genus(const std::string& name, const std::vector<int>& params, const Common& c) {
  const json j = evaluate_formula(name, params);
  if (!c.out.empty()) write_json_file(c.out, j);
  std::cout << j.dump() << "\n";
  return exit_ok;
}

int cmd_oracle(const std::string& expr_text, const std::string& graph_path, const std::string& method,
               const Common& c) {
  require(expr_text.empty() != graph_path.empty(), ErrorKind::invalid_parameter,
          "give either an expression or --graph");
  Manifest manifest("oracle", c);
  Graph g;
  if (!graph_path.empty()) {
    g = graph_from_json(read_json_file(graph_path));
    manifest.input(graph_path);
  } else {
    g = build_family(expr_text);
    manifest.param("expr", expr_text);
  }
  SearchBudget budget{c.budget, c.seed, c.target};
  manifest.param("budget", c.budget);
  manifest.param("method", method);
  if (c.target) manifest.param("target", *c.target);

  OracleResult r;
  if (method == "exhaustive") {
    r = exhaustive_min_genus(g, budget);
  } else if (method == "stochastic") {
    r = stochastic_search(g, budget);
  } else {
    require(method == "auto", ErrorKind::invalid_parameter, "method must be auto, exhaustive or stochastic");
    r = rotation_space_size(g) <= budget.max_rotation_systems ? exhaustive_min_genus(g, budget)
                                                               : stochastic_search(g, budget);
  }
  const json j = to_json(r);
  if (!c.out.empty()) {
    write_json_file(c.out, j);
    manifest.output(c.out);
    manifest.write(c.out + ".manifest.json");
  }
  std::ostringstream os;
  os << "genus " << (r.exhaustive ? "= " : "<= ") << r.best_genus << " (" << (r.exhaustive ? "exhaustive" : "search")
     << ", " << r.explored << " rotation systems)\n";
  json summary = {{"best_genus", r.best_genus}, {"exhaustive", r.exhaustive}, {"explored", r.explored}};
  emit(c, summary, os.str());
  return exit_ok;
}

int cmd_selftest(const Common& c, bool uncorrected, bool no_mirror) {
  SelftestOptions opts;
  opts.seed = c.seed;
  opts.uncorrected_cube_formula = uncorrected;
  opts.mirror_copies = !no_mirror;
  const SelftestReport rep = run_full_selftest(opts);
  if (!c.out.empty()) write_text_file(c.out, rep.artifacts);
  json j = json::array();
  std::ostringstream os;
  for (const auto& k : rep.criteria) {
    j.push_back({{"criterion", k.id}, {"name", k.name}, {"passed", k.passed}, {"detail", k.detail},
                 {"seconds", k.seconds}});
    os << format_outcome(k) << "\n";
  }
  emit(c, j, os.str());
  return rep.all_passed() ? exit_ok : exit_verification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-genus quadrilateral embeddings of cube, cycle and path products"};
  app.set_version_flag("--version", QUADGENUS_VERSION);
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", common.out, "output file (or file prefix for embed)");
    sub->add_option("--seed", common.seed, "random seed")->capture_default_str();
    sub->add_flag("--json", common.json, "print JSON instead of text");
  };

  std::string expr, path, cert_path, formula, method = "auto";
  std::vector<int> params;
  bool uncorrected = false, no_mirror = false;

  auto* build = app.add_subcommand("build", "build the graph of a family expression such as \"K(4,4)xC(6)\"");
  build->add_option("expr", expr, "family expression")->required();
  add_common(build);

  auto* embed = app.add_subcommand("embed", "construct a minimum-genus quadrilateral embedding");
  embed->add_option("expr", expr, "family expression: Q(i,2r) or K(2r,2r) factors with C(2m) / P(2m) factors")
      ->required();
  add_common(embed);

  auto* verify = app.add_subcommand("verify", "re-trace an embedding and compare with its certificate");
  verify->add_option("embedding", path, "embedding JSON file")->required();
  verify->add_option("--certificate", cert_path, "certificate file (default: sibling .certificate.json)");
  add_common(verify);

  auto* faces = app.add_subcommand("faces", "list the faces of an embedding");
  faces->add_option("embedding", path, "embedding JSON file")->required();
  add_common(faces);

  auto* genus = app.add_subcommand("genus", "evaluate a closed-form genus");
  genus->add_option("--formula", formula, "formula name")->required();
  genus->add_option("--params", params, "integer parameters; cycle and path factors as vertex counts")->required();
  add_common(genus);

  auto* oracle = app.add_subcommand("oracle", "search rotation systems for the minimum genus");
  oracle->add_option("expr", expr, "family expression");
  oracle->add_option("--graph", path, "graph JSON file");
  oracle->add_option("--method", method, "auto, exhaustive or stochastic")->capture_default_str();
  oracle->add_option("--budget", common.budget, "rotation system budget")->capture_default_str();
  oracle->add_option("--target", common.target, "stop once this genus is reached");
  add_common(oracle);

  auto* selftest = app.add_subcommand("selftest", "run the acceptance grid");
  selftest->add_flag("--uncorrected-cube-formula", uncorrected, "negative control: use the (j-4) cube expression");
  selftest->add_flag("--no-mirror", no_mirror, "negative control: link copies without mirroring");
  add_common(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*build) return cmd_build(expr, common);
    if (*embed) return cmd_embed(expr, common);
    if (*verify) return cmd_verify(path, cert_path, common);
    if (*faces) return cmd_faces(path, common);
    if (*genus) return cmd_genus(formula, params, common);
    if (*oracle) return cmd_oracle(expr, path, method, common);
    if (*selftest) return cmd_selftest(common, uncorrected, no_mirror);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_internal;
  }
  return exit_usage;
}

#pragma once

// JSON files:
//   graph        {"n": int, "edges": [[u,v],...], "labels": [[coord,...],...]}
//   embedding    {"graph": <graph>, "rotation": [[neighbour,...] per vertex]}
//   certificate  {"n","m","f","genus","quadrilateral","bipartite","lower_bound","minimal","construction_tag"}
//   handle log   one JSON object per line

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "quadgenus/constructions.hpp"
#include "quadgenus/embedding.hpp"
#include "quadgenus/error.hpp"
#include "quadgenus/graph.hpp"
#include "quadgenus/oracle.hpp"
#include "quadgenus/surgery.hpp"

namespace quadgenus {

using json = nlohmann::json;

inline json to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  json j = {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

inline Graph graph_from_json(const json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    Graph g(n);
    for (const auto& e : j.at("edges")) {
      require(e.is_array() && e.size() == 2, ErrorKind::invalid_parameter, "edge must be a pair");
      g.add_edge(e[0].get<VertexId>(), e[1].get<VertexId>());
    }
    if (j.contains("labels")) g.set_labels(j.at("labels").get<std::vector<Label>>());
    return g;
  } catch (const json::exception& ex) {
    fail(ErrorKind::invalid_parameter, std::string("malformed graph file: ") + ex.what());
  }
}

inline json to_json(const Embedding& e) { return {{"graph", to_json(e.graph())}, {"rotation", e.rotations()}}; }

inline Embedding embedding_from_json(const json& j) {
  try {
    Graph g = graph_from_json(j.at("graph"));
    auto rot = j.at("rotation").get<std::vector<Rotation>>();
    return Embedding(std::move(g), std::move(rot));
  } catch (const json::exception& ex) {
    fail(ErrorKind::invalid_embedding, std::string("malformed embedding file: ") + ex.what());
  }
}

inline json to_json(const EmbeddingCertificate& c) {
  return {{"n", c.n},
          {"m", c.m},
          {"f", c.f},
          {"genus", c.genus},
          {"quadrilateral", c.quadrilateral},
          {"bipartite", c.bipartite},
          {"lower_bound", c.lower_bound},
          {"minimal", c.minimal},
          {"construction_tag", c.construction_tag}};
}

inline EmbeddingCertificate certificate_from_json(const json& j) {
  try {
    EmbeddingCertificate c;
    c.n = j.at("n").get<std::int64_t>();
    c.m = j.at("m").get<std::int64_t>();
    c.f = j.at("f").get<std::int64_t>();
    c.genus = j.at("genus").get<std::int64_t>();
    c.quadrilateral = j.at("quadrilateral").get<bool>();
    c.bipartite = j.at("bipartite").get<bool>();
    c.lower_bound = j.at("lower_bound").get<std::int64_t>();
    c.minimal = j.at("minimal").get<bool>();
    c.construction_tag = j.value("construction_tag", std::string{});
    return c;
  } catch (const json::exception& ex) {
    fail(ErrorKind::invalid_parameter, std::string("malformed certificate: ") + ex.what());
  }
}

namespace detail {

inline json face_id_json(std::size_t id) { return id == no_face ? json(nullptr) : json(id); }

}  // namespace detail

inline json to_json(const HandleRecord& h) {
  json consumed = json::array(), created = json::array(), edges = json::array();
  for (const auto& f : h.consumed) consumed.push_back(f.vertices);
  for (const auto& f : h.created) created.push_back(f.vertices);
  for (const auto& [u, v] : h.added_edges) edges.push_back({u, v});
  json consumed_ids = json::array(), created_ids = json::array();
  for (auto id : h.consumed_face_ids) consumed_ids.push_back(detail::face_id_json(id));
  for (auto id : h.created_face_ids) created_ids.push_back(detail::face_id_json(id));
  return {{"consumed", consumed}, {"consumed_face_ids", consumed_ids}, {"added_edges", edges},
          {"created", created},   {"created_face_ids", created_ids},   {"quadrilateral", h.quadrilateral}};
}

inline std::string handle_log(const std::vector<HandleRecord>& trace) {
  std::string out;
  for (const auto& h : trace) out += to_json(h).dump() + "\n";
  return out;
}

inline json to_json(const FaceSet& fs) {
  json faces = json::array();
  for (const auto& f : fs.faces) faces.push_back(f);
  return {{"f", fs.size()}, {"faces", faces}};
}

inline json to_json(const OracleResult& r) {
  return {{"best_genus", r.best_genus},
          {"exhaustive", r.exhaustive},
          {"explored", r.explored},
          {"witness", to_json(r.witness)}};
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::invalid_parameter, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& ex) {
    fail(ErrorKind::invalid_parameter, path + ": " + ex.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), ErrorKind::invalid_parameter, "cannot write " + path);
  out << text;
}

inline void write_json_file(const std::string& path, const json& j) { write_text_file(path, j.dump(1) + "\n"); }

}  // namespace quadgenus

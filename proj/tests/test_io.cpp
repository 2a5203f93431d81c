#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "quadgenus/constructions.hpp"
#include "quadgenus/io.hpp"

using namespace quadgenus;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::internal;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "quadgenus_test_io";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Json, GraphRoundTrip) {
  const Graph g = cartesian_product(make_complete_bipartite(2, 3), make_path(2));
  const json j = to_json(g);
  EXPECT_EQ(j["n"], 10);
  EXPECT_EQ(j["edges"].size(), g.edge_count());
  EXPECT_EQ(graph_from_json(j), g);
  EXPECT_EQ(graph_from_json(json::parse(j.dump())), g);
}

TEST(Json, GraphErrors) {
  EXPECT_EQ(kind_of([] { graph_from_json(json{{"edges", json::array()}}); }), ErrorKind::invalid_parameter);
  EXPECT_EQ(kind_of([] { graph_from_json(json::parse(R"({"n":2,"edges":[[0,1,2]]})")); }),
            ErrorKind::invalid_parameter);
  EXPECT_EQ(kind_of([] { graph_from_json(json::parse(R"({"n":2,"edges":[[0,0]]})")); }),
            ErrorKind::invalid_parameter);
  EXPECT_EQ(kind_of([] { graph_from_json(json::parse(R"({"n":2,"edges":[["a",1]]})")); }),
            ErrorKind::invalid_parameter);
}

TEST(Json, EmbeddingRoundTrip) {
  const Embedding e = embed_cube_cycle(1, 1, 2).embedding;
  const Embedding back = embedding_from_json(json::parse(to_json(e).dump()));
  EXPECT_EQ(back, e);
  EXPECT_EQ(back.rotations(), e.rotations());
  EXPECT_EQ(kind_of([] { embedding_from_json(json::parse(R"({"graph":{"n":1,"edges":[]}})")); }),
            ErrorKind::invalid_embedding);
}

TEST(Json, CertificateRoundTrip) {
  const EmbeddingCertificate c = embed_cube_path(1, 2, 2).certificate;
  EXPECT_EQ(certificate_from_json(to_json(c)), c);
  EXPECT_EQ(to_json(c)["genus"], 7);
  json partial = to_json(c);
  partial.erase("construction_tag");
  EXPECT_EQ(certificate_from_json(partial).construction_tag, "");
  partial.erase("genus");
  EXPECT_EQ(kind_of([&] { certificate_from_json(partial); }), ErrorKind::invalid_parameter);
}

TEST(Json, HandleLog) {
  const ConstructionResult res = embed_cube_cycle(1, 2, 2);
  const std::string log = handle_log(res.trace);
  std::istringstream in(log);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    const json h = json::parse(line);
    EXPECT_EQ(h["added_edges"].size(), 4u);
    EXPECT_EQ(h["created"].size(), 4u);
    EXPECT_TRUE(h["quadrilateral"].get<bool>());
    ++lines;
  }
  EXPECT_EQ(lines, res.trace.size());

  HandleRecord empty;
  const json j = to_json(empty);
  EXPECT_TRUE(j["consumed_face_ids"][0].is_null());
}

TEST(Json, FaceSetAndOracle) {
  const FaceSet fs = trace_faces(Embedding::with_sorted_rotation(make_cycle(4)));
  const json j = to_json(fs);
  EXPECT_EQ(j["f"], 2);
  EXPECT_EQ(j["faces"][0].size(), 4u);
  const json o = to_json(exhaustive_min_genus(make_complete(4)));
  EXPECT_EQ(o["best_genus"], 0);
  EXPECT_TRUE(o["exhaustive"].get<bool>());
}

TEST(Files, WriteAndRead) {
  const auto path = scratch("k44.json").string();
  write_json_file(path, to_json(make_complete_bipartite(4, 4)));
  EXPECT_EQ(graph_from_json(read_json_file(path)).edge_count(), 16u);

  const auto bad = scratch("bad.json").string();
  write_text_file(bad, "{ not json");
  EXPECT_EQ(kind_of([&] { read_json_file(bad); }), ErrorKind::invalid_parameter);
  EXPECT_EQ(kind_of([] { read_json_file("/nonexistent/dir/file.json"); }), ErrorKind::invalid_parameter);
  EXPECT_EQ(kind_of([] { write_text_file("/nonexistent/dir/file.json", "x"); }), ErrorKind::invalid_parameter);
}

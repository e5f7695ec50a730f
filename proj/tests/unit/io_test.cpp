#include <gtest/gtest.h>

#include <filesystem>

#include "iasi/error.hpp"
#include "iasi/families.hpp"
#include "iasi/io.hpp"
#include "iasi/labeling.hpp"
#include "iasi/ops.hpp"
#include "iasi/params.hpp"
#include "iasi/sparing.hpp"
#include "json.hpp"
#include "support/corpus.hpp"

using iasi::Family;
using iasi::Graph;

TEST(EdgeList, Format) {
  auto g = iasi::generate(Family::path, {3});
  EXPECT_EQ(iasi::to_edge_list(g), "p 3 2\nc label path(3)\ne 1 2\ne 2 3\n");
}

TEST(EdgeList, NamesOnlyWhenNotDefault) {
  auto g = iasi::generate(Family::wheel, {3});
  auto text = iasi::to_edge_list(g);
  EXPECT_NE(text.find("c name 1 hub\n"), std::string::npos);
  EXPECT_EQ(iasi::parse_edge_list(text), g);
}

TEST(EdgeList, RoundTripIsByteStable) {
  for (const auto& g : corpus::catalog(10)) {
    auto text = iasi::to_edge_list(g);
    auto back = iasi::parse_edge_list(text);
    EXPECT_EQ(back, g) << g.label();
    EXPECT_EQ(back.label(), g.label());
    EXPECT_EQ(iasi::to_edge_list(back), text);
  }
}

TEST(EdgeList, AcceptsCommentsAndBlankLines) {
  auto g = iasi::parse_edge_list("c a comment\n\np 3 1\r\ne 3 1\n");
  EXPECT_EQ(g.order(), 3u);
  EXPECT_TRUE(g.adjacent(0, 2));
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
  auto message = [](std::string_view text) {
    try {
      iasi::parse_edge_list(text);
    } catch (const iasi::InvalidInput& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("p 3 1\ne 1 4\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("p 3 1\ne 2 2\n").find("self-loop"), std::string::npos);
  EXPECT_NE(message("p 3 x\n").find("line 1"), std::string::npos);
  EXPECT_NE(message("e 1 2\n").find("before 'p'"), std::string::npos);
  EXPECT_NE(message("p 2 1\nq\n").find("unrecognized"), std::string::npos);
  EXPECT_NE(message("p 3 2\ne 1 2\n").find("declares 2"), std::string::npos);
  EXPECT_NE(message("").find("missing"), std::string::npos);
}

TEST(GraphJson, RoundTripIsByteStable) {
  for (const auto& g : corpus::catalog(10)) {
    auto text = iasi::to_json(g);
    auto back = iasi::parse_graph_json(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(iasi::to_json(back), text);
  }
}

TEST(GraphJson, Schema) {
  auto op = iasi::complete_subdivision(iasi::generate(Family::path, {2}));
  auto j = nlohmann::json::parse(iasi::to_json(op.graph, &op.provenance));
  EXPECT_EQ(j["vertices"], nlohmann::json::array({1, 2, 3}));
  EXPECT_EQ(j["names"][2], "sub:v1-v2");
  EXPECT_EQ(j["edges"][0], nlohmann::json::array({1, 3}));
  EXPECT_EQ(j["provenance"]["op"], "complete_subdivision");
  EXPECT_EQ(j["provenance"]["sources"][2][0]["edge"], nlohmann::json::array({1, 2}));
}

TEST(GraphJson, Errors) {
  EXPECT_THROW(iasi::parse_graph_json("{"), iasi::InvalidInput);
  EXPECT_THROW(iasi::parse_graph_json("{\"vertices\":[1,2]}"), iasi::InvalidInput);
  EXPECT_THROW(iasi::parse_graph_json("{\"vertices\":[2,1],\"edges\":[]}"), iasi::InvalidInput);
  EXPECT_THROW(iasi::parse_graph_json("{\"vertices\":[1,2],\"edges\":[[1,3]]}"), iasi::InvalidInput);
  EXPECT_THROW(iasi::parse_graph_json("{\"vertices\":[1,2],\"edges\":[[1,\"b\"]]}"), iasi::InvalidInput);
  auto g = iasi::parse_graph_json("{\"vertices\":[1,2],\"edges\":[[2,1]]}");
  EXPECT_EQ(g.name(1), "v2");
}

TEST(Labeling, JsonRoundTrip) {
  auto g = iasi::generate(Family::fan, {4});
  auto f = iasi::construct_weak(g, iasi::sparing_exact(g).witness_nonmono);
  auto text = iasi::labeling_to_json(f, g);
  auto back = iasi::parse_labeling_json(text, g);
  EXPECT_EQ(back, f);
  EXPECT_EQ(iasi::labeling_to_json(back, g), text);
  auto j = nlohmann::json::parse(text);
  EXPECT_TRUE(j.contains("hub"));
}

TEST(Labeling, JsonErrors) {
  auto g = iasi::generate(Family::path, {2});
  EXPECT_THROW(iasi::parse_labeling_json("{\"v1\":[1]}", g), iasi::InvalidInput);
  EXPECT_THROW(iasi::parse_labeling_json("{\"v1\":[1],\"v3\":[2]}", g), iasi::InvalidInput);
  EXPECT_THROW(iasi::parse_labeling_json("{\"v1\":[1],\"v2\":[]}", g), iasi::InvalidInput);
  EXPECT_THROW(iasi::parse_labeling_json("{\"v1\":[1],\"v2\":[-2]}", g), iasi::InvalidInput);
  EXPECT_THROW(iasi::parse_labeling_json("[1]", g), iasi::InvalidInput);
}

TEST(Dot, BoxesNonMonoVertices) {
  auto g = iasi::generate(Family::path, {3});
  auto f = iasi::construct_weak(g, std::vector<iasi::VertexId>{1});
  auto dot = iasi::to_dot(g, &f);
  EXPECT_EQ(dot.rfind("graph \"path(3)\" {\n", 0), 0u);
  EXPECT_NE(dot.find("shape=box"), std::string::npos);
  EXPECT_NE(dot.find("\"v1\" -- \"v2\""), std::string::npos);
  EXPECT_EQ(iasi::write_graph(g, iasi::GraphFormat::dot), iasi::to_dot(g));
}

TEST(Reports, SparingJson) {
  auto g = iasi::generate(Family::cycle, {5});
  auto j = nlohmann::json::parse(iasi::to_json(iasi::sparing_exact(g), g));
  EXPECT_EQ(j["sparing_number"], 1);
  EXPECT_EQ(j["exact"], true);
  EXPECT_EQ(j["nonmono_vertices"].size(), 2u);
  EXPECT_NE(iasi::to_markdown(iasi::sparing_exact(g), g).find("| cycle(5) | 5 | 5 | 1 |"), std::string::npos);
}

TEST(Reports, ParamsMarkIncomputableFields) {
  auto g = iasi::disjoint_union(iasi::generate(Family::cycle, {20}), iasi::generate(Family::cycle, {20})).graph;
  auto p = iasi::parameters(g, 30);
  auto md = iasi::to_markdown(p);
  EXPECT_NE(md.find("unsupported at this size"), std::string::npos);
  EXPECT_NE(md.find("infinite"), std::string::npos);
  auto j = nlohmann::json::parse(iasi::to_json(p));
  EXPECT_EQ(j["vertex_cover_number"], "unsupported at this size");
  EXPECT_EQ(j["diameter"], "infinite");
}

TEST(Files, LoadByExtension) {
  auto dir = std::filesystem::temp_directory_path() / "iasi_io_test";
  std::filesystem::create_directories(dir);
  auto g = iasi::generate(Family::gear, {3});
  iasi::write_file(dir / "g.json", iasi::to_json(g));
  iasi::write_file(dir / "g.txt", iasi::to_edge_list(g));
  EXPECT_EQ(iasi::load_graph(dir / "g.json"), g);
  EXPECT_EQ(iasi::load_graph(dir / "g.txt"), g);
  EXPECT_THROW(iasi::read_file(dir / "missing"), iasi::InvalidInput);
  std::filesystem::remove_all(dir);
}

#include <gtest/gtest.h>

#include <filesystem>

#include "iasi/error.hpp"
#include "iasi/expr.hpp"
#include "iasi/families.hpp"
#include "iasi/io.hpp"
#include "iasi/ops.hpp"

using iasi::Family;
using iasi::parse_graph_expression;

TEST(Expr, FamilyForms) {
  EXPECT_EQ(parse_graph_expression("wheel(5)"), iasi::generate(Family::wheel, {5}));
  EXPECT_EQ(parse_graph_expression("wheel:5"), iasi::generate(Family::wheel, {5}));
  EXPECT_EQ(parse_graph_expression("windmill:3,2"), iasi::generate(Family::windmill, {3, 2}));
  EXPECT_EQ(parse_graph_expression("K5"), iasi::generate(Family::complete, {5}));
  EXPECT_EQ(parse_graph_expression("C7"), iasi::generate(Family::cycle, {7}));
  EXPECT_EQ(parse_graph_expression("P4"), iasi::generate(Family::path, {4}));
  EXPECT_EQ(parse_graph_expression("sun(4)"), iasi::generate(Family::complete_sun, {4}));
}

TEST(Expr, Operations) {
  auto w = parse_graph_expression("join(named(K1, \"hub\"), cycle(5))");
  EXPECT_EQ(w, iasi::generate(Family::wheel, {5}));
  EXPECT_EQ(parse_graph_expression("power(P5, 2)").size(), 7u);
  EXPECT_EQ(parse_graph_expression("complement(C5)").size(), 5u);
  EXPECT_EQ(parse_graph_expression("corona(C4, K2)").order(), 12u);
  EXPECT_EQ(parse_graph_expression("cartesian(P2, P3)").size(), 7u);
  EXPECT_EQ(parse_graph_expression("product(P2, P3)"), parse_graph_expression("cartesian(P2, P3)"));
  EXPECT_EQ(parse_graph_expression("dunion(C3, C3)").order(), 6u);
  EXPECT_EQ(parse_graph_expression("union(P3, C3)").size(), 3u);
  EXPECT_EQ(parse_graph_expression("intersection(P3, C3)").size(), 2u);
  EXPECT_EQ(parse_graph_expression("subdivide(K3)").order(), 6u);
  EXPECT_EQ(parse_graph_expression("super_subdivide(K3, 2)").order(), 9u);
  EXPECT_EQ(parse_graph_expression("line(K4)").size(), 12u);
  EXPECT_EQ(parse_graph_expression("total(C3)").order(), 6u);
  EXPECT_EQ(parse_graph_expression("contract(C5, \"v1\", \"v2\")").order(), 4u);
  EXPECT_EQ(parse_graph_expression("smooth(C5, \"v3\")").order(), 4u);
  EXPECT_EQ(parse_graph_expression("rename(P2, \"x\")").name(1), "xv2");
}

TEST(Expr, ProvenanceOnlyForOperations) {
  EXPECT_FALSE(iasi::build_expression("wheel(4)").provenance);
  auto b = iasi::build_expression("line(P3)");
  ASSERT_TRUE(b.provenance);
  EXPECT_EQ(b.provenance->op, "line_graph");
}

TEST(Expr, RandomGraphsUseSeed) {
  auto a = parse_graph_expression("gnp(10, 0.5)", {3, {}});
  auto b = parse_graph_expression("gnp(10, 0.5, 3)");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, iasi::random_graph(10, 0.5, 3));
}

TEST(Expr, LoadRelativeToBaseDir) {
  auto dir = std::filesystem::temp_directory_path() / "iasi_expr_test";
  std::filesystem::create_directories(dir);
  iasi::write_file(dir / "g.txt", iasi::to_edge_list(iasi::generate(Family::cycle, {4})));
  auto g = parse_graph_expression("power(load(\"g.txt\"), 2)", {0, dir});
  EXPECT_EQ(g.size(), 6u);
  std::filesystem::remove_all(dir);
}

TEST(Expr, Errors) {
  const char* bad[] = {"",
                       "wheel(",
                       "wheel(5",
                       "wheel(5))",
                       "wheel(2)",
                       "hypercube(3)",
                       "frobnicate(K3)",
                       "power(K3)",
                       "power(K3, K3)",
                       "power(K3, 1.5)",
                       "contract(C5, \"v1\", \"v3\")",
                       "named(K2, \"a\")",
                       "gnp(5, 2)",
                       "gnp(5, 0.5, -1)",
                       "K5 $",
                       "\"open",
                       "load(\"/nonexistent/graph.txt\")"};
  for (const char* text : bad) EXPECT_THROW(parse_graph_expression(text), iasi::InvalidInput) << text;
}

TEST(Expr, ErrorsReportPosition) {
  try {
    parse_graph_expression("join(K2, )");
    FAIL();
  } catch (const iasi::InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("position 9"), std::string::npos) << e.what();
  }
}

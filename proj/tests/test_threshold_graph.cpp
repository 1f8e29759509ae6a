#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "test_util.hpp"
#include "tgraph/oracles.hpp"
#include "tgraph/threshold_graph.hpp"

using namespace tgraph;
using testing::code_of;

TEST_CASE("build_graph") {
  const auto k1 = build_graph(parse_sequence(""));
  CHECK(k1.order() == 1);
  CHECK(k1.edge_count() == 0);
  CHECK(k1.role(0) == VertexRole::Base);

  const auto k4 = build_graph(parse_sequence("111"));
  CHECK(k4.to_edge_list() == complete_graph(4));

  const auto g = build_graph(parse_sequence("10"));
  CHECK(g.to_edge_list() == EdgeListGraph(3, {{0, 1}}));
  CHECK(g.role(1) == VertexRole::One);
  CHECK(g.role(2) == VertexRole::Zero);
}

TEST_CASE("adjacent") {
  const auto g = build_graph(parse_sequence("011"));
  CHECK(g.adjacent(0, 2));
  CHECK(g.adjacent(2, 0));
  CHECK_FALSE(g.adjacent(0, 1));
  CHECK(code_of([&] { (void)g.adjacent(1, 1); }) == ErrorCode::SameVertex);
  CHECK(code_of([&] { (void)g.adjacent(0, 4); }) == ErrorCode::OutOfRange);
}

TEST_CASE("degree") {
  CHECK(build_graph(parse_sequence("111")).degree(0) == 3);
  CHECK(build_graph(parse_sequence("101")).degree(2) == 1);
  CHECK(build_graph(parse_sequence("000")).degree(3) == 0);
  CHECK(build_graph(parse_sequence("101")).degrees() == std::vector<std::size_t>{2, 2, 1, 3});
  CHECK(code_of([] { (void)build_graph(parse_sequence("1")).degree(2); }) == ErrorCode::OutOfRange);
}

TEST_CASE("realization matches the add-isolated/add-dominating construction") {
  for (std::size_t m = 0; m <= 10; ++m) {
    for (const auto& text : testing::all_strings(m)) {
      const auto g = build_graph(parse_sequence(text));
      const auto expected = testing::constructed_graph(text);
      REQUIRE(g.to_edge_list() == expected);
      REQUIRE(g.edge_count() == expected.edge_count());
      REQUIRE(g.degrees() == expected.degrees());

      std::size_t degree_sum = 0;
      for (auto d : g.degrees()) degree_sum += d;
      REQUIRE(degree_sum == 2 * g.edge_count());

      for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
          const auto ru = g.role(u);
          const auto rv = g.role(v);
          if (ru == VertexRole::Zero && rv == VertexRole::Zero) REQUIRE_FALSE(g.adjacent(u, v));
          if (rv == VertexRole::One && ru != VertexRole::Zero) REQUIRE(g.adjacent(u, v));
        }
      }
    }
  }
}

TEST_CASE("recognize") {
  CHECK(recognize(EdgeListGraph(2, {{0, 1}})).to_string() == "1");
  CHECK(recognize(EdgeListGraph(1)).to_string() == "");
  CHECK(recognize(EdgeListGraph(3)).to_string() == "00");
  CHECK(recognize(complete_graph(4)).to_string() == "111");
  CHECK(code_of([] { recognize(cycle_graph(4)); }) == ErrorCode::NotThreshold);
  CHECK(code_of([] { recognize(path_graph(4)); }) == ErrorCode::NotThreshold);
  CHECK(code_of([] { recognize(complete_bipartite_graph(2, 2)); }) == ErrorCode::NotThreshold);
  // 2K2: two disjoint edges.
  CHECK(code_of([] { recognize(EdgeListGraph(4, {{0, 1}, {2, 3}})); }) ==
        ErrorCode::NotThreshold);
}

TEST_CASE("recognize inverts build_graph for |s| <= 12") {
  for (std::size_t m = 0; m <= 12; ++m) {
    for (const auto& s : enumerate_sequences(m)) {
      REQUIRE(recognize(build_graph(s).to_edge_list()) == s);
    }
  }
}

TEST_CASE("recognize is invariant under relabeling") {
  Rng rng(5);
  for (const char* text : {"0110100", "1101", "000111", "1010101010"}) {
    const auto g = build_graph(parse_sequence(text)).to_edge_list();
    std::vector<Vertex> perm(g.order());
    for (Vertex v = 0; v < perm.size(); ++v) perm[v] = v;
    for (int round = 0; round < 20; ++round) {
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<Edge> edges;
      for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
      CHECK(recognize(EdgeListGraph(g.order(), edges)).to_string() == text);
    }
  }
}

TEST_CASE("sample_weights") {
  Rng a(42);
  Rng b(42);
  const auto wa = sample_weights(5, a);
  const auto wb = sample_weights(5, b);
  CHECK(wa.weights.size() == 5);
  CHECK(wa.weights == wb.weights);
  CHECK(wa.threshold == 1.0);
  for (double w : wa.weights) {
    CHECK(w >= 0.0);
    CHECK(w <= 1.0);
  }
  CHECK(sample_weights(1, a).weights.size() == 1);
}

TEST_CASE("weights_to_graph") {
  CHECK(weights_to_graph({{0.9, 0.9, 0.9}}).sequence().to_string() == "11");
  CHECK(weights_to_graph({{0.1, 0.1, 0.1}}).sequence().to_string() == "00");
  CHECK(weights_to_graph({{0.6, 0.6, 0.3}}).sequence().to_string() == "10");
  // A sum of exactly 1 is not an edge.
  CHECK(weights_to_edge_list({{0.5, 0.5}}).edge_count() == 0);
  CHECK(weights_to_edge_list({{0.25, 0.75}}).edge_count() == 0);
}

TEST_CASE("weight graphs are always threshold graphs") {
  Rng rng(2024);
  for (int i = 0; i < 100000; ++i) {
    const std::size_t n = 1 + i % 10;
    const auto w = sample_weights(n, rng);
    const auto g = weights_to_graph(w);
    REQUIRE(g.order() == n);
  }
}

TEST_CASE("is_induced_subgraph") {
  const auto g01 = build_graph(parse_sequence("01"));
  CHECK(is_induced_subgraph(g01, build_graph(parse_sequence("0011"))));
  CHECK(is_induced_subgraph(g01, g01));
  CHECK_FALSE(is_induced_subgraph(build_graph(parse_sequence("11")),
                                  build_graph(parse_sequence("10"))));
}

TEST_CASE("edge-list text format") {
  std::istringstream in("4\n0 1\n\n2 1\n 3 0 \n");
  const auto g = read_edge_list(in);
  CHECK(g.order() == 4);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}});

  std::ostringstream out;
  write_edge_list(out, g);
  CHECK(out.str() == "4\n0 1\n0 3\n1 2\n");

  std::istringstream again(out.str());
  CHECK(read_edge_list(again) == g);

  auto parse = [](const char* text) {
    std::istringstream s(text);
    return read_edge_list(s);
  };
  CHECK(code_of([&] { parse(""); }) == ErrorCode::MalformedInput);
  CHECK(code_of([&] { parse("3\n0 0\n"); }) == ErrorCode::MalformedInput);
  CHECK(code_of([&] { parse("3\n0 3\n"); }) == ErrorCode::MalformedInput);
  CHECK(code_of([&] { parse("3\n0 1\n1 0\n"); }) == ErrorCode::MalformedInput);
  CHECK(code_of([&] { parse("3\n0 1 2\n"); }) == ErrorCode::MalformedInput);
  CHECK(code_of([&] { parse("x\n"); }) == ErrorCode::MalformedInput);
}

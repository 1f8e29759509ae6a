#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "tgraph/invariants.hpp"
#include "tgraph/oracles.hpp"
#include "tgraph/threshold_graph.hpp"

using namespace tgraph;

namespace {

CreationSequence seq(const char* text) { return parse_sequence(text); }

}  // namespace

TEST_CASE("clique_number") {
  CHECK(clique_number(seq("")) == 1);
  CHECK(clique_number(seq("111")) == 4);
  CHECK(clique_number(seq("0101")) == 3);
  CHECK(oracle_clique_number(testing::constructed_graph("0101")) == 3);
}

TEST_CASE("is_planar") {
  CHECK_FALSE(is_planar(seq("1111")));
  CHECK_FALSE(is_planar(seq("00111")));
  CHECK(is_planar(seq("0111")));
  CHECK(is_planar(seq("00")));
  CHECK(is_planar(seq("")));
  CHECK(is_planar(seq("1000011")));
  CHECK(is_planar(seq("0100011")));
  CHECK_FALSE(is_planar(seq("0010011")));
  CHECK(oracle_is_planar(testing::constructed_graph("0111")));
}

TEST_CASE("matching_number and perfect matchings") {
  CHECK(matching_number(seq("000")) == 0);
  CHECK(matching_number(seq("011")) == 2);
  CHECK(matching_number(seq("100")) == 1);
  CHECK(oracle_max_matching(testing::constructed_graph("011")) == 2);
  CHECK(oracle_max_matching(testing::constructed_graph("100")) == 1);

  CHECK(has_perfect_matching(seq("011")));
  CHECK_FALSE(has_perfect_matching(seq("100")));
  CHECK_FALSE(has_perfect_matching(seq("01")));
}

TEST_CASE("is_hamiltonian") {
  CHECK(is_hamiltonian(seq("11")));
  CHECK(is_hamiltonian(seq("011")));
  CHECK_FALSE(is_hamiltonian(seq("101")));
  CHECK_FALSE(is_hamiltonian(seq("")));
  CHECK_FALSE(is_hamiltonian(seq("1")));
}

TEST_CASE("longest_cycle") {
  CHECK(longest_cycle(seq("010")) == 0);
  CHECK(longest_cycle(seq("101")) == 3);
  CHECK(longest_cycle(seq("011")) == 4);
  CHECK(longest_cycle(seq("")) == 0);
  CHECK(oracle_longest_cycle(testing::constructed_graph("101")) == 3);
  CHECK(oracle_longest_cycle(testing::constructed_graph("011")) == 4);
}

TEST_CASE("degeneracy") {
  CHECK(degeneracy(seq("000")) == 0);
  CHECK(degeneracy(seq("111")) == 3);
  CHECK(degeneracy(seq("101")) == 2);
  CHECK(oracle_degeneracy(testing::constructed_graph("101")) == 2);
}

TEST_CASE("k-core") {
  CHECK(k_core_members(seq("100"), 2).empty());
  CHECK(k_core_members(seq("101"), 2) == std::vector<Vertex>{0, 1, 3});
  CHECK(k_core_members(seq("111"), 2) == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(k_core_members(seq("000"), 0) == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(k_core_size(seq("110"), 2) == 3);
  CHECK(k_core_size(seq("011"), 2) == 4);
  CHECK(k_core_size(seq("000"), 1) == 0);
  CHECK(oracle_k_core(testing::constructed_graph("101"), 2) == std::vector<Vertex>{0, 1, 3});
}

TEST_CASE("report bundles every invariant") {
  const auto rep = make_report(seq("011"), {2});
  CHECK(rep.n == 4);
  CHECK(rep.ones == 2);
  CHECK(rep.h == 0);
  CHECK(rep.r == 3);
  CHECK(rep.clique == 3);
  CHECK(rep.planar);
  CHECK(rep.nu == 2);
  CHECK(rep.hamiltonian);
  CHECK(rep.psi == 4);
  CHECK(rep.degeneracy == 2);
  CHECK(rep.kcores == std::vector<KCoreEntry>{{2, 4}});
}

TEST_CASE("closed forms agree with oracles on every graph up to 10 vertices") {
  for (std::size_t m = 0; m <= 9; ++m) {
    for (const auto& text : testing::all_strings(m)) {
      CAPTURE(text);
      const auto s = parse_sequence(text);
      const auto g = testing::constructed_graph(text);
      const std::size_t n = m + 1;
      const std::size_t cycle = oracle_longest_cycle(g);
      REQUIRE(matching_number(s) == oracle_max_matching(g));
      REQUIRE(longest_cycle(s) == cycle);
      REQUIRE(clique_number(s) == oracle_clique_number(g));
      REQUIRE(degeneracy(s) == oracle_degeneracy(g));
      REQUIRE(is_planar(s) == oracle_is_planar(g));
      REQUIRE(is_hamiltonian(s) == (n >= 3 && cycle == n));
      for (std::size_t k = 1; k <= 3; ++k) REQUIRE(k_core_members(s, k) == oracle_k_core(g, k));
    }
  }
}

TEST_CASE("structural properties") {
  for (std::size_t m = 0; m <= 12; ++m) {
    for (const auto& s : enumerate_sequences(m)) {
      const std::size_t n = s.order();
      const auto rep = make_report(s);
      REQUIRE(rep.clique == rep.ones + 1);
      REQUIRE(rep.degeneracy == rep.ones);
      REQUIRE(rep.nu <= n / 2);
      REQUIRE((rep.psi == 0 || (rep.psi >= 3 && rep.psi <= n)));
      REQUIRE((rep.nu == n / 2) == (rep.h <= n % 2));
      if (n % 2 == 0) REQUIRE(has_perfect_matching(s) == (rep.h == 0));
      if (n >= 3) REQUIRE((rep.psi == n) == rep.hamiltonian);
      for (std::size_t d = 0; d <= n; ++d) {
        REQUIRE((degeneracy(s) >= d) == (clique_number(s) >= d + 1));
      }

      const auto text = s.to_string();
      const bool forbidden = testing::contains_subsequence(text, "1111") ||
                             testing::contains_subsequence(text, "00111");
      REQUIRE(is_planar(s) == !forbidden);

      for (std::size_t k = 1; k <= 4; ++k) {
        const auto size = k_core_size(s, k);
        REQUIRE((size == 0 || size > k));
      }
    }
  }
}

TEST_CASE("one pruning round leaves minimum degree >= k") {
  for (std::size_t m = 0; m <= 10; ++m) {
    for (const auto& s : enumerate_sequences(m)) {
      for (std::size_t k = 1; k <= s.ones(); ++k) {
        const auto g = build_graph(s).to_edge_list();
        std::vector<bool> keep(g.order());
        const auto deg = g.degrees();
        for (Vertex v = 0; v < g.order(); ++v) keep[v] = deg[v] >= k;
        std::vector<std::size_t> inner(g.order(), 0);
        for (auto [u, v] : g.edges()) {
          if (keep[u] && keep[v]) {
            ++inner[u];
            ++inner[v];
          }
        }
        for (Vertex v = 0; v < g.order(); ++v) {
          if (keep[v]) REQUIRE(inner[v] >= k);
        }
      }
    }
  }
}

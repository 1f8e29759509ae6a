#pragma once

#include <cstddef>
#include <vector>

#include "tgraph/edge_list.hpp"

namespace tgraph {

// Definition-level reference algorithms on arbitrary small graphs. They know
// nothing about creation sequences and are only meant to validate the closed
// forms at desk scale.

/// Largest order each exponential oracle accepts.
struct OracleLimits {
  std::size_t max_matching = 12;
  std::size_t longest_cycle = 12;
  std::size_t clique_number = 14;
  std::size_t is_planar = 10;
  std::size_t induced_subgraph = 7;
  std::size_t degeneracy_by_subsets = 16;
};

inline constexpr OracleLimits kOracleLimits{};

/// Maximum number of pairwise disjoint edges, by backtracking.
std::size_t oracle_max_matching(const EdgeListGraph& g);

/// Length of the longest simple cycle, 0 when acyclic. Exhaustive DFS from
/// each start vertex over (visited set, endpoint) states.
std::size_t oracle_longest_cycle(const EdgeListGraph& g);

/// Size of a largest clique (0 only for the empty graph).
std::size_t oracle_clique_number(const EdgeListGraph& g);

/// Kuratowski test: false iff some subdivision of K5 or K3,3 is a subgraph.
bool oracle_is_planar(const EdgeListGraph& g);

/// k-core by repeatedly deleting vertices of current degree < k.
std::vector<Vertex> oracle_k_core(const EdgeListGraph& g, std::size_t k);

/// Degeneracy from a minimum-degree elimination ordering.
std::size_t oracle_degeneracy(const EdgeListGraph& g);

/// Degeneracy as the maximum over induced subgraphs of the minimum degree,
/// by explicit subset enumeration.
std::size_t oracle_degeneracy_by_subsets(const EdgeListGraph& g);

/// True iff some vertex subset of `big` induces a graph isomorphic to `small`.
bool oracle_is_induced_subgraph(const EdgeListGraph& small, const EdgeListGraph& big);

}  // namespace tgraph

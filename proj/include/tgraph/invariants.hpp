#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tgraph/creation_sequence.hpp"
#include "tgraph/edge_list.hpp"

namespace tgraph {

// Graph invariants of gamma(s), evaluated directly on the creation sequence
// in O(|s|) time. n always denotes |s| + 1.

/// Number of one-vertices plus one.
std::size_t clique_number(const CreationSequence& s);

/// Planar iff s has at most two ones, or exactly three with the first one at
/// index 1 or 2. Equivalent to s avoiding the subsequences 1111 and 00111.
bool is_planar(const CreationSequence& s);

/// floor((n - h(s)) / 2).
std::size_t matching_number(const CreationSequence& s);

/// n even and h(s) == 0.
bool has_perfect_matching(const CreationSequence& s);

/// n >= 3, last digit 1 and h of the remaining prefix is 0.
bool is_hamiltonian(const CreationSequence& s);

/// Circumference: r(s) + 1 - h(s_1 ... s_{r(s)-1}) when s has two or more
/// ones, and 0 for the acyclic graphs with fewer.
std::size_t longest_cycle(const CreationSequence& s);

/// Number of ones.
std::size_t degeneracy(const CreationSequence& s);

/// Vertices of the k-core in increasing order. Empty when s has fewer than
/// k ones; otherwise the vertices of degree >= k. k = 0 gives every vertex.
std::vector<Vertex> k_core_members(const CreationSequence& s, std::size_t k);

std::size_t k_core_size(const CreationSequence& s, std::size_t k);

struct KCoreEntry {
  std::size_t k = 0;
  std::size_t size = 0;

  friend bool operator==(const KCoreEntry&, const KCoreEntry&) = default;
};

/// All closed-form invariants of one graph.
struct InvariantReport {
  std::size_t n = 1;
  std::size_t ones = 0;
  std::size_t h = 0;
  std::size_t r = 0;
  std::size_t clique = 1;
  bool planar = true;
  std::size_t nu = 0;
  bool hamiltonian = false;
  std::size_t psi = 0;
  std::size_t degeneracy = 0;
  std::vector<KCoreEntry> kcores;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

InvariantReport make_report(const CreationSequence& s, const std::vector<std::size_t>& ks = {});

}  // namespace tgraph

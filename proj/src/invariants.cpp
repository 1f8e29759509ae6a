#include "tgraph/invariants.hpp"

#include "tgraph/threshold_graph.hpp"

namespace tgraph {

std::size_t clique_number(const CreationSequence& s) { return s.ones() + 1; }

bool is_planar(const CreationSequence& s) {
  const std::size_t ones = s.ones();
  if (ones <= 2) return true;
  if (ones > 3) return false;
  // Everything before the first one is a zero, so "first one at index <= 2"
  // is the same as "no two zeros precede all three ones".
  std::size_t first = 1;
  while (s[first] == 0) ++first;
  return first <= 2;
}

std::size_t matching_number(const CreationSequence& s) {
  return (s.order() - h(s)) / 2;
}

bool has_perfect_matching(const CreationSequence& s) {
  return s.order() % 2 == 0 && h(s) == 0;
}

bool is_hamiltonian(const CreationSequence& s) {
  if (s.order() < 3) return false;
  return s[s.size()] == 1 && h(s.prefix(s.size() - 1)) == 0;
}

std::size_t longest_cycle(const CreationSequence& s) {
  if (s.ones() < 2) return 0;
  const std::size_t last_one = r(s);
  return last_one + 1 - h(s.prefix(last_one - 1));
}

std::size_t degeneracy(const CreationSequence& s) { return s.ones(); }

std::vector<Vertex> k_core_members(const CreationSequence& s, std::size_t k) {
  std::vector<Vertex> members;
  if (s.ones() < k) return members;
  const ThresholdGraph g(s);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) >= k) members.push_back(v);
  }
  return members;
}

std::size_t k_core_size(const CreationSequence& s, std::size_t k) {
  return k_core_members(s, k).size();
}

InvariantReport make_report(const CreationSequence& s, const std::vector<std::size_t>& ks) {
  InvariantReport rep;
  rep.n = s.order();
  rep.ones = s.ones();
  rep.h = h(s);
  rep.r = r(s);
  rep.clique = clique_number(s);
  rep.planar = is_planar(s);
  rep.nu = matching_number(s);
  rep.hamiltonian = is_hamiltonian(s);
  rep.psi = longest_cycle(s);
  rep.degeneracy = degeneracy(s);
  for (auto k : ks) rep.kcores.push_back({k, k_core_size(s, k)});
  return rep;
}

}  // namespace tgraph

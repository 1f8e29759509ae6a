#include "tgraph/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_set>

#include "tgraph/error.hpp"

namespace tgraph {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(Vertex v) { return Mask{1} << v; }

void check_cap(const EdgeListGraph& g, std::size_t cap, const char* oracle) {
  if (g.order() > cap) {
    throw Error(ErrorCode::OrderCapExceeded, std::string(oracle) + " accepts order <= " +
                                                 std::to_string(cap) + ", got " +
                                                 std::to_string(g.order()));
  }
}

std::size_t matching_from(const std::vector<Mask>& adj, Mask free) {
  if (free == 0) return 0;
  const auto v = static_cast<Vertex>(std::countr_zero(free));
  const Mask rest = free & ~bit(v);
  // Either v stays unmatched, or it is matched along one of its edges.
  std::size_t best = matching_from(adj, rest);
  for (Mask cand = adj[v] & rest; cand != 0; cand &= cand - 1) {
    const auto u = static_cast<Vertex>(std::countr_zero(cand));
    best = std::max(best, 1 + matching_from(adj, rest & ~bit(u)));
  }
  return best;
}

void clique_search(const std::vector<Mask>& adj, Mask candidates, std::size_t size,
                   std::size_t& best) {
  if (candidates == 0) {
    best = std::max(best, size);
    return;
  }
  while (candidates != 0) {
    if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) return;
    const auto v = static_cast<Vertex>(std::countr_zero(candidates));
    candidates &= ~bit(v);
    clique_search(adj, candidates & adj[v], size + 1, best);
  }
}

// Simple paths from `from` to `to` whose interior avoids `blocked`, shortest first.
std::vector<Mask> interior_paths(const std::vector<Mask>& adj, Vertex from, Vertex to,
                                 Mask blocked) {
  std::vector<Mask> found;
  auto extend = [&](auto&& self, Vertex at, Mask interior) -> void {
    if (adj[at] & bit(to)) found.push_back(interior);
    for (Mask next = adj[at] & ~blocked & ~interior; next != 0; next &= next - 1) {
      const auto w = static_cast<Vertex>(std::countr_zero(next));
      self(self, w, interior | bit(w));
    }
  };
  extend(extend, from, 0);
  std::sort(found.begin(), found.end(), [](Mask a, Mask b) {
    return std::pair(std::popcount(a), a) < std::pair(std::popcount(b), b);
  });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

// Routes every branch pair along internally disjoint paths that avoid `used`.
bool route_pairs(const std::vector<Mask>& adj, const std::vector<Edge>& pairs, std::size_t index,
                 Mask used) {
  if (index == pairs.size()) return true;
  const auto [a, b] = pairs[index];
  for (Mask interior : interior_paths(adj, a, b, used)) {
    if (route_pairs(adj, pairs, index + 1, used | interior)) return true;
  }
  return false;
}

std::vector<std::vector<Vertex>> subsets_of_size(const std::vector<Vertex>& pool, std::size_t k) {
  std::vector<std::vector<Vertex>> out;
  if (k > pool.size()) return out;
  std::vector<bool> pick(pool.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<Vertex> subset;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (pick[i]) subset.push_back(pool[i]);
    }
    out.push_back(std::move(subset));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

bool has_k5_subdivision(const std::vector<Mask>& adj, const std::vector<std::size_t>& deg) {
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < adj.size(); ++v) {
    if (deg[v] >= 4) pool.push_back(v);
  }
  for (const auto& branch : subsets_of_size(pool, 5)) {
    Mask used = 0;
    std::vector<Edge> pairs;
    for (std::size_t i = 0; i < 5; ++i) {
      used |= bit(branch[i]);
      for (std::size_t j = i + 1; j < 5; ++j) pairs.emplace_back(branch[i], branch[j]);
    }
    if (route_pairs(adj, pairs, 0, used)) return true;
  }
  return false;
}

bool has_k33_subdivision(const std::vector<Mask>& adj, const std::vector<std::size_t>& deg) {
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < adj.size(); ++v) {
    if (deg[v] >= 3) pool.push_back(v);
  }
  for (const auto& branch : subsets_of_size(pool, 6)) {
    Mask used = 0;
    for (Vertex v : branch) used |= bit(v);
    // Fix branch[0] on the left side so each bipartition is tried once.
    const std::vector<Vertex> others(branch.begin() + 1, branch.end());
    for (const auto& mates : subsets_of_size(others, 2)) {
      std::vector<Vertex> left{branch[0], mates[0], mates[1]};
      std::vector<Vertex> right;
      for (Vertex v : others) {
        if (v != mates[0] && v != mates[1]) right.push_back(v);
      }
      std::vector<Edge> pairs;
      for (Vertex a : left) {
        for (Vertex b : right) pairs.emplace_back(a, b);
      }
      if (route_pairs(adj, pairs, 0, used)) return true;
    }
  }
  return false;
}

}  // namespace

std::size_t oracle_max_matching(const EdgeListGraph& g) {
  check_cap(g, kOracleLimits.max_matching, "oracle_max_matching");
  const auto adj = g.adjacency_masks();
  const Mask all = g.order() == 64 ? ~Mask{0} : bit(g.order()) - 1;
  return matching_from(adj, all);
}

std::size_t oracle_longest_cycle(const EdgeListGraph& g) {
  check_cap(g, kOracleLimits.longest_cycle, "oracle_longest_cycle");
  const auto adj = g.adjacency_masks();
  const std::size_t n = g.order();
  std::size_t best = 0;
  // Each cycle is found from its smallest vertex; paths only use larger ones.
  for (Vertex start = 0; start < n; ++start) {
    std::unordered_set<Mask> seen;  // key: visited set | endpoint << 56
    auto dfs = [&](auto&& self, Vertex at, Mask visited, std::size_t length) -> void {
      const Mask key = visited | (static_cast<Mask>(at) << 56);
      if (!seen.insert(key).second) return;
      if (length >= 3 && (adj[at] & bit(start))) best = std::max(best, length);
      for (Mask next = adj[at] & ~visited; next != 0; next &= next - 1) {
        const auto w = static_cast<Vertex>(std::countr_zero(next));
        if (w > start) self(self, w, visited | bit(w), length + 1);
      }
    };
    dfs(dfs, start, bit(start), 1);
  }
  return best;
}

std::size_t oracle_clique_number(const EdgeListGraph& g) {
  check_cap(g, kOracleLimits.clique_number, "oracle_clique_number");
  const auto adj = g.adjacency_masks();
  const Mask all = bit(g.order()) - 1;
  std::size_t best = 0;
  clique_search(adj, all, 0, best);
  return best;
}

bool oracle_is_planar(const EdgeListGraph& g) {
  check_cap(g, kOracleLimits.is_planar, "oracle_is_planar");
  // K3,3 has 9 edges and K5 has 10; subdividing only adds edges.
  if (g.edge_count() <= 8) return true;
  const auto adj = g.adjacency_masks();
  const auto deg = g.degrees();
  return !has_k5_subdivision(adj, deg) && !has_k33_subdivision(adj, deg);
}

std::vector<Vertex> oracle_k_core(const EdgeListGraph& g, std::size_t k) {
  const std::size_t n = g.order();
  const auto adj = g.adjacency_lists();
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> deg = g.degrees();
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Vertex> doomed;
    for (Vertex v = 0; v < n; ++v) {
      if (alive[v] && deg[v] < k) doomed.push_back(v);
    }
    for (Vertex v : doomed) {
      alive[v] = false;
      changed = true;
      for (Vertex w : adj[v]) {
        if (alive[w]) --deg[w];
      }
    }
  }
  std::vector<Vertex> core;
  for (Vertex v = 0; v < n; ++v) {
    if (alive[v]) core.push_back(v);
  }
  return core;
}

std::size_t oracle_degeneracy(const EdgeListGraph& g) {
  const std::size_t n = g.order();
  const auto adj = g.adjacency_lists();
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> deg = g.degrees();
  std::size_t best = 0;
  for (std::size_t round = 0; round < n; ++round) {
    Vertex pick = n;
    for (Vertex v = 0; v < n; ++v) {
      if (alive[v] && (pick == n || deg[v] < deg[pick])) pick = v;
    }
    best = std::max(best, deg[pick]);
    alive[pick] = false;
    for (Vertex w : adj[pick]) {
      if (alive[w]) --deg[w];
    }
  }
  return best;
}

std::size_t oracle_degeneracy_by_subsets(const EdgeListGraph& g) {
  check_cap(g, kOracleLimits.degeneracy_by_subsets, "oracle_degeneracy_by_subsets");
  const auto adj = g.adjacency_masks();
  const std::size_t n = g.order();
  std::size_t best = 0;
  for (Mask subset = 1; subset < bit(n); ++subset) {
    std::size_t min_deg = n;
    for (Mask rest = subset; rest != 0; rest &= rest - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(rest));
      min_deg = std::min(min_deg, static_cast<std::size_t>(std::popcount(adj[v] & subset)));
    }
    best = std::max(best, min_deg);
  }
  return best;
}

bool oracle_is_induced_subgraph(const EdgeListGraph& small, const EdgeListGraph& big) {
  check_cap(small, kOracleLimits.induced_subgraph, "oracle_is_induced_subgraph");
  check_cap(big, kOracleLimits.induced_subgraph, "oracle_is_induced_subgraph");
  const std::size_t k = small.order();
  if (k > big.order()) return false;
  const auto small_adj = small.adjacency_masks();
  const auto big_adj = big.adjacency_masks();
  std::vector<Vertex> all(big.order());
  std::iota(all.begin(), all.end(), Vertex{0});
  for (auto image : subsets_of_size(all, k)) {
    // subsets_of_size yields sorted subsets, the first permutation.
    do {
      bool same = true;
      for (Vertex i = 0; i < k && same; ++i) {
        for (Vertex j = i + 1; j < k && same; ++j) {
          const bool in_small = (small_adj[i] & bit(j)) != 0;
          const bool in_big = (big_adj[image[i]] & bit(image[j])) != 0;
          same = in_small == in_big;
        }
      }
      if (same) return true;
    } while (std::next_permutation(image.begin(), image.end()));
  }
  return false;
}

}  // namespace tgraph

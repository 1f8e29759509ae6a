#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace tgraph {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph given by its order and an edge set. Edges are
// stored normalized (u < v), sorted and without duplicates.
class EdgeListGraph {
 public:
  EdgeListGraph() = default;
  explicit EdgeListGraph(std::size_t order) : order_(order) {}
  /// Throws Error(MalformedInput) on self-loops, duplicates or endpoints >= order.
  EdgeListGraph(std::size_t order, const std::vector<Edge>& edges);

  std::size_t order() const noexcept { return order_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool has_edge(Vertex u, Vertex v) const;

  /// Adjacency as one bitmask per vertex; requires order <= 64.
  std::vector<std::uint64_t> adjacency_masks() const;
  std::vector<std::vector<Vertex>> adjacency_lists() const;
  std::vector<std::size_t> degrees() const;

  friend bool operator==(const EdgeListGraph&, const EdgeListGraph&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<Edge> edges_;
};

EdgeListGraph complete_graph(std::size_t n);
EdgeListGraph cycle_graph(std::size_t n);
EdgeListGraph path_graph(std::size_t n);
EdgeListGraph complete_bipartite_graph(std::size_t a, std::size_t b);
EdgeListGraph star_graph(std::size_t leaves);

/// Reads the text format: first line "n", then one "u v" line per edge.
/// Blank lines are ignored. Throws Error(MalformedInput).
EdgeListGraph read_edge_list(std::istream& in);
EdgeListGraph read_edge_list_file(const std::string& path);
/// Writes the same format, edges sorted lexicographically.
void write_edge_list(std::ostream& out, const EdgeListGraph& g);

}  // namespace tgraph

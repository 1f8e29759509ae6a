#pragma once

#include <cstddef>
#include <vector>

#include "tgraph/creation_sequence.hpp"
#include "tgraph/edge_list.hpp"
#include "tgraph/rng.hpp"

namespace tgraph {

enum class VertexRole { Base, Zero, One };

/// Threshold graph realized from its creation sequence. Vertex ids are
/// creation indices: 0 is the base vertex, vertex i >= 1 carries digit s_i.
/// Two vertices are adjacent iff the one with the higher index is a
/// one-vertex.
class ThresholdGraph {
 public:
  ThresholdGraph() = default;
  explicit ThresholdGraph(CreationSequence s);

  const CreationSequence& sequence() const noexcept { return seq_; }
  std::size_t order() const noexcept { return seq_.order(); }

  VertexRole role(Vertex v) const;
  /// Throws Error(SameVertex) when u == v and Error(OutOfRange) when either
  /// id is not below order().
  bool adjacent(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const;
  std::vector<std::size_t> degrees() const;
  std::size_t edge_count() const;

  EdgeListGraph to_edge_list() const;

 private:
  void check_vertex(Vertex v) const;

  CreationSequence seq_;
  // ones_after_[i] = number of ones at indices > i, for 0 <= i <= m.
  std::vector<std::size_t> ones_after_{0};
};

inline ThresholdGraph build_graph(const CreationSequence& s) { return ThresholdGraph(s); }

/// Recovers the creation sequence of a threshold graph by peeling a
/// dominating vertex (digit 1) or else an isolated vertex (digit 0) until one
/// vertex remains. Throws Error(NotThreshold) if neither exists at some step.
CreationSequence recognize(const EdgeListGraph& g);

struct WeightAssignment {
  std::vector<double> weights;
  double threshold = 1.0;
};

WeightAssignment sample_weights(std::size_t n, Rng& rng);

/// Edge {u,v} iff w(u) + w(v) > threshold; ties are non-edges.
EdgeListGraph weights_to_edge_list(const WeightAssignment& w);
/// Realizes the weight graph and recognizes it. A recognition failure is a
/// defect and surfaces as std::logic_error.
ThresholdGraph weights_to_graph(const WeightAssignment& w);

/// Induced-subgraph relation between unlabeled threshold graphs, decided on
/// their creation sequences.
bool is_induced_subgraph(const ThresholdGraph& g, const ThresholdGraph& h);

}  // namespace tgraph

#include "tgraph/threshold_graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "tgraph/error.hpp"

namespace tgraph {

ThresholdGraph::ThresholdGraph(CreationSequence s) : seq_(std::move(s)) {
  const std::size_t m = seq_.size();
  ones_after_.assign(m + 1, 0);
  for (std::size_t i = m; i >= 1; --i) ones_after_[i - 1] = ones_after_[i] + seq_[i];
}

void ThresholdGraph::check_vertex(Vertex v) const {
  if (v >= order()) {
    throw Error(ErrorCode::OutOfRange,
                "vertex " + std::to_string(v) + " not below order " + std::to_string(order()));
  }
}

VertexRole ThresholdGraph::role(Vertex v) const {
  check_vertex(v);
  if (v == 0) return VertexRole::Base;
  return seq_[v] ? VertexRole::One : VertexRole::Zero;
}

bool ThresholdGraph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw Error(ErrorCode::SameVertex, "vertex " + std::to_string(u) + " compared with itself");
  }
  return seq_[std::max(u, v)] == 1;
}

std::size_t ThresholdGraph::degree(Vertex v) const {
  check_vertex(v);
  // Earlier vertices count only when v dominates them.
  const std::size_t earlier = (v > 0 && seq_[v]) ? v : 0;
  return earlier + ones_after_[v];
}

std::vector<std::size_t> ThresholdGraph::degrees() const {
  std::vector<std::size_t> out(order());
  for (Vertex v = 0; v < order(); ++v) out[v] = degree(v);
  return out;
}

std::size_t ThresholdGraph::edge_count() const {
  std::size_t edges = 0;
  for (std::size_t i = 1; i <= seq_.size(); ++i) {
    if (seq_[i]) edges += i;
  }
  return edges;
}

EdgeListGraph ThresholdGraph::to_edge_list() const {
  std::vector<Edge> edges;
  edges.reserve(edge_count());
  for (Vertex v = 1; v < order(); ++v) {
    if (!seq_[v]) continue;
    for (Vertex u = 0; u < v; ++u) edges.emplace_back(u, v);
  }
  return {order(), edges};
}

CreationSequence recognize(const EdgeListGraph& g) {
  const std::size_t n = g.order();
  if (n == 0) {
    throw Error(ErrorCode::MalformedInput, "graph has no vertices");
  }
  auto adj = g.adjacency_lists();
  std::vector<std::size_t> degree = g.degrees();
  std::vector<bool> alive(n, true);
  std::vector<int> peeled;
  peeled.reserve(n - 1);

  for (std::size_t remaining = n; remaining > 1; --remaining) {
    Vertex dominating = n;
    Vertex isolated = n;
    for (Vertex v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      if (degree[v] == remaining - 1 && dominating == n) dominating = v;
      if (degree[v] == 0 && isolated == n) isolated = v;
    }
    Vertex victim = n;
    if (dominating != n) {
      victim = dominating;
      peeled.push_back(1);
    } else if (isolated != n) {
      victim = isolated;
      peeled.push_back(0);
    } else {
      throw Error(ErrorCode::NotThreshold, "no dominating or isolated vertex among " +
                                               std::to_string(remaining) + " remaining vertices");
    }
    alive[victim] = false;
    for (Vertex w : adj[victim]) {
      if (alive[w]) --degree[w];
    }
  }
  std::reverse(peeled.begin(), peeled.end());
  return CreationSequence::from_digits(peeled);
}

WeightAssignment sample_weights(std::size_t n, Rng& rng) {
  WeightAssignment w;
  w.weights.reserve(n);
  for (std::size_t i = 0; i < n; ++i) w.weights.push_back(uniform01(rng));
  return w;
}

EdgeListGraph weights_to_edge_list(const WeightAssignment& w) {
  const std::size_t n = w.weights.size();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (w.weights[u] + w.weights[v] > w.threshold) edges.emplace_back(u, v);
    }
  }
  return {n, edges};
}

ThresholdGraph weights_to_graph(const WeightAssignment& w) {
  try {
    return ThresholdGraph(recognize(weights_to_edge_list(w)));
  } catch (const Error& e) {
    throw std::logic_error(std::string("weight graph failed recognition: ") + e.what());
  }
}

bool is_induced_subgraph(const ThresholdGraph& g, const ThresholdGraph& h) {
  return is_subsequence(g.sequence(), h.sequence());
}

}  // namespace tgraph

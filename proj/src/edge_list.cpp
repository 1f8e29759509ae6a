#include "tgraph/edge_list.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "tgraph/error.hpp"

namespace tgraph {

EdgeListGraph::EdgeListGraph(std::size_t order, const std::vector<Edge>& edges) : order_(order) {
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u == v) {
      throw Error(ErrorCode::MalformedInput, "self-loop at vertex " + std::to_string(u));
    }
    if (u >= order || v >= order) {
      throw Error(ErrorCode::MalformedInput, "edge (" + std::to_string(u) + ", " +
                                                 std::to_string(v) + ") has an endpoint >= " +
                                                 std::to_string(order));
    }
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw Error(ErrorCode::MalformedInput, "duplicate edge (" + std::to_string(dup->first) + ", " +
                                               std::to_string(dup->second) + ")");
  }
}

bool EdgeListGraph::has_edge(Vertex u, Vertex v) const {
  const Edge e{std::min(u, v), std::max(u, v)};
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<std::uint64_t> EdgeListGraph::adjacency_masks() const {
  if (order_ > 64) {
    throw Error(ErrorCode::OrderCapExceeded, "bitmask adjacency needs order <= 64");
  }
  std::vector<std::uint64_t> adj(order_, 0);
  for (auto [u, v] : edges_) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  return adj;
}

std::vector<std::vector<Vertex>> EdgeListGraph::adjacency_lists() const {
  std::vector<std::vector<Vertex>> adj(order_);
  for (auto [u, v] : edges_) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

std::vector<std::size_t> EdgeListGraph::degrees() const {
  std::vector<std::size_t> deg(order_, 0);
  for (auto [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

EdgeListGraph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return {n, edges};
}

EdgeListGraph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
  return {n, edges};
}

EdgeListGraph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return {n, edges};
}

EdgeListGraph complete_bipartite_graph(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = a; v < a + b; ++v) edges.emplace_back(u, v);
  }
  return {a + b, edges};
}

EdgeListGraph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return {leaves + 1, edges};
}

EdgeListGraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_order = false;
  std::size_t order = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    fields.clear();
    fields.seekg(0);
    auto fail = [&](const std::string& what) {
      throw Error(ErrorCode::MalformedInput, "line " + std::to_string(line_no) + ": " + what);
    };
    long long a = 0;
    long long b = 0;
    std::string rest;
    if (!have_order) {
      if (!(fields >> a) || a < 0 || (fields >> rest)) fail("expected vertex count");
      order = static_cast<std::size_t>(a);
      have_order = true;
    } else {
      if (!(fields >> a >> b) || a < 0 || b < 0 || (fields >> rest)) fail("expected \"u v\"");
      edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
  }
  if (!have_order) {
    throw Error(ErrorCode::MalformedInput, "missing vertex count");
  }
  return {order, edges};
}

EdgeListGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::MalformedInput, "cannot open " + path);
  }
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const EdgeListGraph& g) {
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace tgraph

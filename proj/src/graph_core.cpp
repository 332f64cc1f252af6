#include "tripart/graph_core.hpp"

#include <algorithm>
#include <string>

#include "tripart/errors.hpp"

namespace tripart {

LabeledGraph::LabeledGraph(std::vector<Part> part_of, std::vector<Edge> edges)
    : part_of_(std::move(part_of)), adjacency_(part_of_.size()) {
  const auto n = static_cast<Vertex>(part_of_.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw InvalidInput("edge endpoint out of range");
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw InvalidInput("duplicate edge");
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

bool LabeledGraph::has_edge(Vertex u, Vertex v) const {
  if (u >= vertex_count() || v >= vertex_count()) return false;
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

LabeledGraph build_complete_multipartite(const PartSizes& parts) {
  if (parts.total() == 0) throw InvalidInput("K_{0,0,0} has no vertices");
  std::vector<Part> part_of(parts.total());
  for (Vertex v = 0; v < parts.total(); ++v) part_of[v] = parts.part_of(v);

  std::vector<Edge> edges;
  edges.reserve(parts.edge_count());
  for (Vertex u = 0; u < parts.total(); ++u)
    for (Vertex v = u + 1; v < parts.total(); ++v)
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
  return LabeledGraph(std::move(part_of), std::move(edges));
}

std::vector<Vertex> RootedForest::roots() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < vertex_count(); ++v)
    if (is_root(v)) out.push_back(v);
  return out;
}

std::uint32_t RootedForest::edge_count() const {
  return static_cast<std::uint32_t>(
      std::count_if(parent.begin(), parent.end(), [](Vertex p) { return p != kNoParent; }));
}

bool is_rooted_spanning_forest(const LabeledGraph& g, const RootedForest& f,
                               std::span<const Vertex> roots) {
  const std::uint32_t n = g.vertex_count();
  if (f.vertex_count() != n) return false;

  std::vector<bool> expected_root(n, false);
  for (Vertex r : roots) {
    if (r >= n) return false;
    expected_root[r] = true;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (f.is_root(v) != expected_root[v]) return false;
    if (!f.is_root(v) && !g.has_edge(v, f.parent[v])) return false;
  }

  // Every parent chain must reach a root; 0 = unvisited, 1 = on stack, 2 = done.
  std::vector<std::uint8_t> state(n, 0);
  std::vector<Vertex> chain;
  for (Vertex start = 0; start < n; ++start) {
    chain.clear();
    Vertex v = start;
    while (state[v] == 0 && !f.is_root(v)) {
      state[v] = 1;
      chain.push_back(v);
      v = f.parent[v];
    }
    if (state[v] == 1) return false;
    state[v] = 2;
    for (Vertex c : chain) state[c] = 2;
  }
  return true;
}

RootProfile root_distribution(const RootedForest& f, const PartSizes& parts) {
  RootProfile out;
  for (Vertex v = 0; v < f.vertex_count(); ++v) {
    if (!f.is_root(v)) continue;
    switch (parts.part_of(v)) {
      case Part::M: ++out.l; break;
      case Part::N: ++out.k; break;
      case Part::P: ++out.r; break;
    }
  }
  return out;
}

}  // namespace tripart

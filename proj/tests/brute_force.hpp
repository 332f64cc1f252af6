#pragma once

// Test-only enumeration of rooted forests straight from parent maps; shares
// no code with the decomposition or census paths.

#include <set>
#include <span>
#include <vector>

#include "tripart/graph_core.hpp"

namespace tripart::testing {

/// Every rooted spanning forest of g whose root set is exactly `roots`.
inline std::set<RootedForest> forests_with_roots(const LabeledGraph& g,
                                                 std::span<const Vertex> roots) {
  const std::uint32_t nv = g.vertex_count();
  std::vector<bool> is_root(nv, false);
  for (Vertex r : roots) is_root[r] = true;
  std::vector<Vertex> movers;
  for (Vertex v = 0; v < nv; ++v)
    if (!is_root[v]) movers.push_back(v);

  std::set<RootedForest> out;
  std::vector<std::uint32_t> choice(movers.size(), 0);
  for (Vertex v : movers)
    if (g.degree(v) == 0) return out;
  while (true) {
    RootedForest f{std::vector<Vertex>(nv, kNoParent)};
    for (std::size_t i = 0; i < movers.size(); ++i)
      f.parent[movers[i]] = g.neighbors(movers[i])[choice[i]];
    if (is_rooted_spanning_forest(g, f, roots)) out.insert(f);
    std::size_t i = 0;
    while (i < movers.size() && ++choice[i] == g.degree(movers[i])) choice[i++] = 0;
    if (i == movers.size()) break;
  }
  return out;
}

/// All r-subsets of H_p, ascending.
inline std::vector<std::vector<Vertex>> p_subsets(const PartSizes& parts, std::uint32_t r) {
  std::vector<std::vector<Vertex>> out;
  const std::uint32_t p = parts.p;
  for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
    if (static_cast<std::uint32_t>(__builtin_popcount(mask)) != r) continue;
    std::vector<Vertex> s;
    for (std::uint32_t i = 0; i < p; ++i)
      if (mask >> i & 1) s.push_back(parts.first_p() + i);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace tripart::testing

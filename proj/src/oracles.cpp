#include "tripart/oracles.hpp"

#include <string>
#include <vector>

#include "tripart/errors.hpp"

namespace tripart {

IntMatrix laplacian(const LabeledGraph& g) {
  IntMatrix lap(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) lap(v, v) = g.degree(v);
  for (auto [u, v] : g.edges()) {
    lap(u, v) = -1;
    lap(v, u) = -1;
  }
  return lap;
}

BigCount spanning_tree_count_kirchhoff(const LabeledGraph& g) {
  const std::size_t drop[] = {0};
  return BigCount(det_bareiss(laplacian(g).without(drop)));
}

BigCount forest_count_for_root_set(const LabeledGraph& g, std::span<const Vertex> roots) {
  if (roots.empty()) throw InvalidInput("root set must be non-empty");
  std::vector<std::size_t> drop(roots.begin(), roots.end());
  return BigCount(det_bareiss(laplacian(g).without(drop)));
}

BigCount forest_count_r_in_part_oracle(const LabeledGraph& g, const PartSizes& parts,
                                       std::uint32_t r) {
  if (r == 0 || r > parts.p)
    throw InvalidInput("r must satisfy 1 <= r <= p, got r = " + std::to_string(r));
  if (g.vertex_count() != parts.total()) throw InvalidInput("graph does not match part sizes");

  // Lexicographic walk over r-subsets of H_p.
  std::vector<Vertex> subset(r);
  for (std::uint32_t i = 0; i < r; ++i) subset[i] = parts.first_p() + i;
  const Vertex end = parts.total();

  BigCount total;
  while (true) {
    total += forest_count_for_root_set(g, subset);
    std::int64_t i = static_cast<std::int64_t>(r) - 1;
    while (i >= 0 && subset[i] == end - r + static_cast<Vertex>(i)) --i;
    if (i < 0) break;
    ++subset[i];
    for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < r; ++j)
      subset[j] = subset[j - 1] + 1;
  }
  return total;
}

BigCount total_rooted_forest_oracle(const LabeledGraph& g) {
  IntMatrix shifted = laplacian(g);
  for (std::size_t i = 0; i < shifted.dim(); ++i) shifted(i, i) += 1;
  return BigCount(det_bareiss(std::move(shifted)));
}

BigCount ForestCensus::total() const {
  BigCount sum;
  for (const auto& [profile, count] : counts) sum += count;
  return sum;
}

BigCount ForestCensus::at(const RootProfile& profile) const {
  auto it = counts.find(profile);
  return it == counts.end() ? BigCount(0) : it->second;
}

}  // namespace tripart

#include "tripart/oracles.hpp"

#include <random>
#include <vector>

#include "tripart/errors.hpp"

namespace tripart {
namespace {

// Unbiased draw from [0, bound) by rejection; the standard distributions are
// implementation-defined, this keeps samples identical across toolchains.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::mt19937_64::max() - (std::mt19937_64::max() % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

bool is_connected(const LabeledGraph& g) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::uint32_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = true;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == g.vertex_count();
}

}  // namespace

RootedForest sample_spanning_tree(const LabeledGraph& g, std::uint64_t seed) {
  if (g.vertex_count() == 0 || !is_connected(g))
    throw InvalidInput("spanning-tree sampling needs a connected graph");

  std::mt19937_64 rng(seed);
  const std::uint32_t n = g.vertex_count();
  RootedForest tree{std::vector<Vertex>(n, kNoParent)};
  std::vector<bool> in_tree(n, false);
  in_tree[0] = true;

  // Random walk from each vertex not yet in the tree; overwriting `next`
  // on revisits erases loops implicitly.
  std::vector<Vertex> next(n, kNoParent);
  for (Vertex start = 1; start < n; ++start) {
    Vertex v = start;
    while (!in_tree[v]) {
      const auto nbrs = g.neighbors(v);
      next[v] = nbrs[draw_below(rng, nbrs.size())];
      v = next[v];
    }
    for (v = start; !in_tree[v]; v = next[v]) {
      tree.parent[v] = next[v];
      in_tree[v] = true;
    }
  }
  return tree;
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index) {
  std::uint64_t z = base_seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace tripart

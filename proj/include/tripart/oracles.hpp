#pragma once

// Ground-truth counters that share nothing with the closed forms: matrix-tree
// determinants, an exhaustive edge-subset census, and a uniform spanning-tree
// sampler for statistical checks.

#include <cstdint>
#include <map>
#include <span>

#include "tripart/exact_math.hpp"
#include "tripart/graph_core.hpp"

namespace tripart {

/// L = D - A.
IntMatrix laplacian(const LabeledGraph& g);

/// Any cofactor of L (row/column 0 removed). Zero for disconnected graphs.
BigCount spanning_tree_count_kirchhoff(const LabeledGraph& g);

/// All-minors matrix-tree theorem: forests in which every component holds
/// exactly one vertex of `roots`. Throws InvalidInput for an empty root set.
BigCount forest_count_for_root_set(const LabeledGraph& g, std::span<const Vertex> roots);

/// Sum of forest_count_for_root_set over every r-subset of H_p.
BigCount forest_count_r_in_part_oracle(const LabeledGraph& g, const PartSizes& parts,
                                       std::uint32_t r);

/// det(L + I): rooted spanning forests with unrestricted roots. This is the
/// classical identity det(L+I) = sum over forests of prod(component sizes).
BigCount total_rooted_forest_oracle(const LabeledGraph& g);

/// Rooted-forest counts keyed by root profile. Profiles with a zero count are
/// absent.
struct ForestCensus {
  std::map<RootProfile, BigCount> counts;

  BigCount total() const;
  BigCount at(const RootProfile& profile) const;
};

inline constexpr std::uint32_t kDefaultCensusMaxEdges = 22;

/// Enumerates every edge subset of g, keeps the acyclic ones and distributes
/// each forest's rooted variants over root profiles. OpenMP-parallel over
/// edge-prefix blocks. Throws ResourceLimit when g has more than max_edges
/// edges and InvalidInput when g does not match parts.
ForestCensus exhaustive_census(const LabeledGraph& g, const PartSizes& parts,
                               std::uint32_t max_edges = kDefaultCensusMaxEdges);

/// Single-threaded reference for exhaustive_census: walks the bitmask range
/// directly and rebuilds a union-find per subset.
ForestCensus exhaustive_census_serial(const LabeledGraph& g, const PartSizes& parts,
                                      std::uint32_t max_edges = kDefaultCensusMaxEdges);

/// Uniform spanning tree rooted at vertex 0 via Wilson's loop-erased random
/// walks, driven by std::mt19937_64 seeded with `seed`. Deterministic per
/// seed. Throws InvalidInput for disconnected graphs.
RootedForest sample_spanning_tree(const LabeledGraph& g, std::uint64_t seed);

/// Per-sample seed for batch i drawn from one user seed (splitmix64 finaliser).
std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index);

}  // namespace tripart

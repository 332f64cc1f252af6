#pragma once

// Constructive decomposition of H_p-rooted spanning forests of K_{m,n,p}.
//
// A forest is assembled in three phases from a rooted forest F of the
// bipartite K_{m,n} on H_m u H_n:
//   1. attach:  every non-root vertex z of H_p gets one edge z -> v, v in V(F);
//   2. merge:   some roots a of F get an edge a -> b, b a non-root H_p vertex
//               lying in another component;
//   3. close:   every root of F still without an out-edge points at one of
//               the designated H_p roots.
// decompose() inverts the assembly; enumerate_constructions() walks every plan
// at desk scale and checks the map plan -> forest is a bijection.

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "tripart/exact_math.hpp"
#include "tripart/graph_core.hpp"

namespace tripart {

using DirectedEdge = std::pair<Vertex, Vertex>;

struct ConstructionPlan {
  PartSizes parts;
  /// Rooted forest of K_{m,n}; vertex ids 0..m+n-1 as in K_{m,n,p}.
  RootedForest base_forest;
  /// Designated roots, a sorted subset of H_p.
  std::vector<Vertex> p_roots;
  /// Non-root H_p vertex -> its neighbour in H_m u H_n.
  std::map<Vertex, Vertex> attachments;
  /// (a, b): base root a in H_m u H_n points at non-root H_p vertex b.
  std::set<DirectedEdge> merge_edges;
  /// Remaining base root -> designated H_p root.
  std::map<Vertex, Vertex> closing;

  RootProfile base_profile() const;

  friend bool operator==(const ConstructionPlan&, const ConstructionPlan&) = default;
};

/// Partially assembled forest. Vertices with parent kNoParent are the
/// component terminals: designated roots plus open H_m u H_n vertices.
class ConstructionState {
 public:
  const PartSizes& parts() const { return parts_; }
  const std::vector<Vertex>& parent() const { return parent_; }
  const std::vector<Vertex>& p_roots() const { return p_roots_; }
  std::uint32_t merges_applied() const { return merges_applied_; }

  /// Weakly connected components, isolated designated roots included.
  std::uint32_t component_count() const;
  /// H_m u H_n vertices with out-degree zero, ascending.
  std::vector<Vertex> open_vertices() const;
  /// Terminal vertex of v's component.
  Vertex terminal(Vertex v) const;

  friend bool operator==(const ConstructionState&, const ConstructionState&) = default;

 private:
  friend ConstructionState attach_free_part(const PartSizes&, const RootedForest&,
                                            std::span<const Vertex>,
                                            const std::map<Vertex, Vertex>&);
  friend ConstructionState add_merge_edges(ConstructionState, std::span<const DirectedEdge>);

  PartSizes parts_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> p_roots_;
  std::uint32_t merges_applied_ = 0;
};

struct ConstructionOutcome {
  RootedForest forest;
  std::uint32_t applied_t = 0;
};

/// Phase 1. Throws InvalidPlan when the attachment domain is not exactly
/// H_p minus p_roots, a target lies outside H_m u H_n, p_roots is empty or
/// not inside H_p, or base_forest is not a rooted forest of K_{m,n}.
ConstructionState attach_free_part(const PartSizes& parts, const RootedForest& base_forest,
                                   std::span<const Vertex> p_roots,
                                   const std::map<Vertex, Vertex>& attachments);

/// Phase 2; application order does not affect the result. Throws InvalidPlan
/// for a source that is not open or a target that is not a non-root H_p
/// vertex, and CycleRisk when source and target share a component.
ConstructionState add_merge_edges(ConstructionState state, std::span<const DirectedEdge> edges);

/// Phase 3. Throws IncompletePlan if an open vertex is left unmapped and
/// InvalidPlan if a key is not open or a target is not a designated root.
ConstructionOutcome close_to_roots(const ConstructionState& state,
                                   const std::map<Vertex, Vertex>& closing);

/// attach -> merge -> close.
ConstructionOutcome replay(const ConstructionPlan& plan);

/// The unique plan whose replay is `forest`. Throws UnsupportedInput when a
/// root lies outside H_p and InvalidInput when `forest` is not a rooted
/// spanning forest of K_{m,n,p}.
ConstructionPlan decompose(const RootedForest& forest, const PartSizes& parts);

/// Every rooted spanning forest of K_{m,n} in lexicographic parent-map order.
std::vector<RootedForest> enumerate_bipartite_forests(std::uint32_t m, std::uint32_t n);

struct EnumerationResult {
  /// Number of valid plans replayed (equals forests.size() when injective).
  std::uint64_t plan_count = 0;
  std::set<RootedForest> forests;
  /// Outcomes grouped by the base forest's profile (l, k).
  std::map<std::pair<std::uint32_t, std::uint32_t>, BigCount> by_base_profile;

  BigCount count() const { return BigCount(static_cast<std::uint64_t>(forests.size())); }
};

inline constexpr std::uint32_t kDefaultConstructionMaxVertices = 8;

/// Replays every plan for the given designated roots, in canonical order.
/// Each outcome is decomposed again and must give back its plan, and no
/// forest may arise twice; either failure throws FormulaError. Throws
/// ResourceLimit above max_vertices.
EnumerationResult enumerate_constructions(
    const PartSizes& parts, std::span<const Vertex> p_roots,
    std::uint32_t max_vertices = kDefaultConstructionMaxVertices);

/// Same with the first r vertices of H_p as designated roots.
EnumerationResult enumerate_constructions(
    const PartSizes& parts, std::uint32_t r,
    std::uint32_t max_vertices = kDefaultConstructionMaxVertices);

}  // namespace tripart

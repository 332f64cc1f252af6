#pragma once

// Labeled graphs with a three-way part assignment and parent-map forests.
// Vertices of a complete tripartite build are numbered part by part:
// H_m = [0, m), H_n = [m, m+n), H_p = [m+n, m+n+p).

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace tripart {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoParent = std::numeric_limits<Vertex>::max();

enum class Part : std::uint8_t { M = 0, N = 1, P = 2 };

struct PartSizes {
  std::uint32_t m = 0;
  std::uint32_t n = 0;
  std::uint32_t p = 0;

  std::uint32_t total() const { return m + n + p; }
  std::uint64_t edge_count() const {
    return std::uint64_t{m} * n + std::uint64_t{m} * p + std::uint64_t{n} * p;
  }
  Part part_of(Vertex v) const { return v < m ? Part::M : (v < m + n ? Part::N : Part::P); }
  Vertex first_p() const { return m + n; }

  friend bool operator==(const PartSizes&, const PartSizes&) = default;
  friend auto operator<=>(const PartSizes&, const PartSizes&) = default;
};

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph; immutable after construction.
class LabeledGraph {
 public:
  /// Throws InvalidInput on self-loops, duplicate edges or out-of-range endpoints.
  LabeledGraph(std::vector<Part> part_of, std::vector<Edge> edges);

  std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(part_of_.size()); }
  Part part_of(Vertex v) const { return part_of_[v]; }
  /// Edges with first < second, in lexicographic order.
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  bool has_edge(Vertex u, Vertex v) const;
  std::uint32_t degree(Vertex v) const { return static_cast<std::uint32_t>(adjacency_[v].size()); }

 private:
  std::vector<Part> part_of_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// K_{m,n,p}. Throws InvalidInput when every part is empty.
LabeledGraph build_complete_multipartite(const PartSizes& parts);

/// Functional representation of a rooted forest: parent[v] is the next vertex
/// on the path to v's root, or kNoParent for roots.
struct RootedForest {
  std::vector<Vertex> parent;

  std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(parent.size()); }
  bool is_root(Vertex v) const { return parent[v] == kNoParent; }
  std::vector<Vertex> roots() const;
  std::uint32_t edge_count() const;

  friend bool operator==(const RootedForest&, const RootedForest&) = default;
  friend auto operator<=>(const RootedForest&, const RootedForest&) = default;
};

/// Root counts per part: l in H_m, k in H_n, r in H_p.
struct RootProfile {
  std::uint32_t l = 0;
  std::uint32_t k = 0;
  std::uint32_t r = 0;

  friend bool operator==(const RootProfile&, const RootProfile&) = default;
  friend auto operator<=>(const RootProfile&, const RootProfile&) = default;
};

/// True iff every parent link is an edge of g, the links are acyclic, every
/// vertex is covered and the roots are exactly `roots`.
bool is_rooted_spanning_forest(const LabeledGraph& g, const RootedForest& f,
                               std::span<const Vertex> roots);

RootProfile root_distribution(const RootedForest& f, const PartSizes& parts);

}  // namespace tripart

#include "tripart/oracles.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "tripart/errors.hpp"

namespace tripart {
namespace {

// Accumulators are 128-bit: det(L+I) <= prod(deg + 1), which stays far below
// 2^128 for every edge bound the census accepts.
using Tally = unsigned __int128;

inline constexpr std::uint32_t kHardEdgeCap = 40;

BigCount to_count(Tally v) {
  const std::uint64_t words[2] = {static_cast<std::uint64_t>(v >> 64),
                                  static_cast<std::uint64_t>(v)};
  BigInt out;
  mpz_import(out.get_mpz_t(), 2, 1, sizeof(std::uint64_t), 0, 0, words);
  return BigCount(out);
}

void check_census_input(const LabeledGraph& g, const PartSizes& parts, std::uint32_t max_edges) {
  if (g.vertex_count() != parts.total()) throw InvalidInput("graph does not match part sizes");
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.part_of(v) != parts.part_of(v))
      throw InvalidInput("graph part labels do not follow part-ordered numbering");
  const std::uint32_t cap = std::min(max_edges, kHardEdgeCap);
  if (g.edges().size() > cap) {
    throw ResourceLimit("graph has " + std::to_string(g.edges().size()) +
                        " edges, census bound is " + std::to_string(cap));
  }
}

// Dense (l,k,r) coefficient table. add_forest() expands
// prod_i (a_i x + b_i y + c_i z) over the forest's components, which counts
// every way of choosing one root per component, grouped by root profile.
class ProfileTable {
 public:
  explicit ProfileTable(const PartSizes& parts)
      : parts_(parts),
        coeffs_(std::size_t{parts.m + 1} * (parts.n + 1) * (parts.p + 1), 0),
        scratch_(coeffs_.size()),
        next_(coeffs_.size()) {}

  using Component = std::array<std::uint32_t, 3>;

  void add_forest(std::span<const Component> components) {
    std::fill(scratch_.begin(), scratch_.end(), 0);
    scratch_[0] = 1;
    for (const auto& [a, b, c] : components) {
      std::fill(next_.begin(), next_.end(), 0);
      for (std::uint32_t l = 0; l <= parts_.m; ++l)
        for (std::uint32_t k = 0; k <= parts_.n; ++k)
          for (std::uint32_t r = 0; r <= parts_.p; ++r) {
            const Tally cur = scratch_[index(l, k, r)];
            if (cur == 0) continue;
            if (a && l < parts_.m) next_[index(l + 1, k, r)] += cur * a;
            if (b && k < parts_.n) next_[index(l, k + 1, r)] += cur * b;
            if (c && r < parts_.p) next_[index(l, k, r + 1)] += cur * c;
          }
      scratch_.swap(next_);
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += scratch_[i];
  }

  void merge(const ProfileTable& other) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  }

  ForestCensus to_census() const {
    ForestCensus out;
    for (std::uint32_t l = 0; l <= parts_.m; ++l)
      for (std::uint32_t k = 0; k <= parts_.n; ++k)
        for (std::uint32_t r = 0; r <= parts_.p; ++r)
          if (const Tally v = coeffs_[index(l, k, r)]; v != 0)
            out.counts.emplace(RootProfile{l, k, r}, to_count(v));
    return out;
  }

 private:
  std::size_t index(std::uint32_t l, std::uint32_t k, std::uint32_t r) const {
    return (std::size_t{l} * (parts_.n + 1) + k) * (parts_.p + 1) + r;
  }

  PartSizes parts_;
  std::vector<Tally> coeffs_;
  std::vector<Tally> scratch_;
  std::vector<Tally> next_;
};

std::uint32_t part_index(const PartSizes& parts, Vertex v) {
  return static_cast<std::uint32_t>(parts.part_of(v));
}

// Union-find with union by size and an undo log; no path compression so that
// unions can be rolled back in LIFO order.
class RollbackForest {
 public:
  explicit RollbackForest(const PartSizes& parts) : leader_(parts.total()), tally_(parts.total()) {
    for (Vertex v = 0; v < parts.total(); ++v) {
      leader_[v] = v;
      tally_[v] = {0, 0, 0};
      tally_[v][part_index(parts, v)] = 1;
    }
  }

  Vertex find(Vertex v) const {
    while (leader_[v] != v) v = leader_[v];
    return v;
  }

  bool unite(Vertex u, Vertex v) {
    u = find(u);
    v = find(v);
    if (u == v) return false;
    if (size(u) < size(v)) std::swap(u, v);
    leader_[v] = u;
    for (int i = 0; i < 3; ++i) tally_[u][i] += tally_[v][i];
    undo_.push_back(v);
    return true;
  }

  void rollback() {
    const Vertex v = undo_.back();
    undo_.pop_back();
    const Vertex u = leader_[v];
    for (int i = 0; i < 3; ++i) tally_[u][i] -= tally_[v][i];
    leader_[v] = v;
  }

  void components(std::vector<ProfileTable::Component>& out) const {
    out.clear();
    for (Vertex v = 0; v < leader_.size(); ++v)
      if (leader_[v] == v) out.push_back(tally_[v]);
  }

 private:
  std::uint32_t size(Vertex v) const { return tally_[v][0] + tally_[v][1] + tally_[v][2]; }

  std::vector<Vertex> leader_;
  std::vector<ProfileTable::Component> tally_;
  std::vector<Vertex> undo_;
};

struct CensusWalker {
  const std::vector<Edge>& edges;
  RollbackForest& uf;
  ProfileTable& table;
  std::vector<ProfileTable::Component> comps;

  void walk(std::size_t i) {
    if (i == edges.size()) {
      uf.components(comps);
      table.add_forest(comps);
      return;
    }
    walk(i + 1);
    if (uf.unite(edges[i].first, edges[i].second)) {
      walk(i + 1);
      uf.rollback();
    }
  }
};

}  // namespace

ForestCensus exhaustive_census(const LabeledGraph& g, const PartSizes& parts,
                               std::uint32_t max_edges) {
  check_census_input(g, parts, max_edges);
  const auto& edges = g.edges();
  const std::size_t prefix = std::min<std::size_t>(edges.size(), 10);
  const std::int64_t blocks = std::int64_t{1} << prefix;

  std::vector<ProfileTable> partials;
#pragma omp parallel
  {
#pragma omp single
    partials.assign(static_cast<std::size_t>(omp_get_num_threads()), ProfileTable(parts));

    ProfileTable& local = partials[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t block = 0; block < blocks; ++block) {
      RollbackForest uf(parts);
      bool acyclic = true;
      for (std::size_t e = 0; e < prefix && acyclic; ++e)
        if ((block >> e) & 1) acyclic = uf.unite(edges[e].first, edges[e].second);
      if (!acyclic) continue;
      CensusWalker walker{edges, uf, local, {}};
      walker.walk(prefix);
    }
  }

  ProfileTable merged(parts);
  for (const auto& t : partials) merged.merge(t);
  return merged.to_census();
}

ForestCensus exhaustive_census_serial(const LabeledGraph& g, const PartSizes& parts,
                                      std::uint32_t max_edges) {
  check_census_input(g, parts, max_edges);
  const auto& edges = g.edges();
  const std::uint32_t nv = parts.total();
  ProfileTable table(parts);

  std::vector<Vertex> leader(nv);
  auto find = [&](Vertex v) {
    while (leader[v] != v) v = leader[v] = leader[leader[v]];
    return v;
  };
  std::vector<ProfileTable::Component> tally(nv);
  std::vector<ProfileTable::Component> comps;

  const std::uint64_t subsets = std::uint64_t{1} << edges.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    for (Vertex v = 0; v < nv; ++v) leader[v] = v;
    bool acyclic = true;
    for (std::size_t e = 0; e < edges.size() && acyclic; ++e) {
      if (!((mask >> e) & 1)) continue;
      const Vertex a = find(edges[e].first);
      const Vertex b = find(edges[e].second);
      if (a == b) acyclic = false;
      leader[a] = b;
    }
    if (!acyclic) continue;

    for (auto& t : tally) t = {0, 0, 0};
    for (Vertex v = 0; v < nv; ++v) ++tally[find(v)][part_index(parts, v)];
    comps.clear();
    for (Vertex v = 0; v < nv; ++v)
      if (leader[v] == v) comps.push_back(tally[v]);
    table.add_forest(comps);
  }
  return table.to_census();
}

}  // namespace tripart

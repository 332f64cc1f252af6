#include "tripart/decomposition.hpp"

#include <omp.h>

#include <algorithm>
#include <string>

#include "tripart/errors.hpp"

namespace tripart {
namespace {

bool in_base(const PartSizes& parts, Vertex v) { return v < parts.m + parts.n; }
bool in_p(const PartSizes& parts, Vertex v) { return v >= parts.first_p() && v < parts.total(); }

bool contains(std::span<const Vertex> sorted, Vertex v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

bool is_bipartite_forest(const PartSizes& parts, const RootedForest& f) {
  const std::uint32_t base = parts.m + parts.n;
  if (f.vertex_count() != base) return false;
  for (Vertex v = 0; v < base; ++v) {
    if (f.is_root(v)) continue;
    const Vertex u = f.parent[v];
    if (u >= base || (v < parts.m) == (u < parts.m)) return false;
  }
  // Acyclic iff every chain reaches a root within `base` steps.
  for (Vertex v = 0; v < base; ++v) {
    Vertex cur = v;
    std::uint32_t steps = 0;
    while (!f.is_root(cur) && steps <= base) {
      cur = f.parent[cur];
      ++steps;
    }
    if (!f.is_root(cur)) return false;
  }
  return true;
}

// Merge edge feasibility against the current state without throwing.
bool merge_allowed(const ConstructionState& s, DirectedEdge e) {
  const auto& parts = s.parts();
  const auto [a, b] = e;
  if (!in_base(parts, a) || s.parent()[a] != kNoParent) return false;
  if (!in_p(parts, b) || contains(s.p_roots(), b)) return false;
  return s.terminal(b) != a;
}

}  // namespace

RootProfile ConstructionPlan::base_profile() const {
  RootProfile out;
  for (Vertex v = 0; v < base_forest.vertex_count(); ++v)
    if (base_forest.is_root(v)) (v < parts.m ? out.l : out.k)++;
  return out;
}

std::uint32_t ConstructionState::component_count() const {
  return static_cast<std::uint32_t>(std::count(parent_.begin(), parent_.end(), kNoParent));
}

std::vector<Vertex> ConstructionState::open_vertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < parts_.m + parts_.n; ++v)
    if (parent_[v] == kNoParent) out.push_back(v);
  return out;
}

Vertex ConstructionState::terminal(Vertex v) const {
  while (parent_[v] != kNoParent) v = parent_[v];
  return v;
}

ConstructionState attach_free_part(const PartSizes& parts, const RootedForest& base_forest,
                                   std::span<const Vertex> p_roots,
                                   const std::map<Vertex, Vertex>& attachments) {
  if (!is_bipartite_forest(parts, base_forest))
    throw InvalidPlan("base forest is not a rooted spanning forest of K_{m,n}");
  if (p_roots.empty()) throw InvalidPlan("at least one designated root is required");
  if (!std::is_sorted(p_roots.begin(), p_roots.end()) ||
      std::adjacent_find(p_roots.begin(), p_roots.end()) != p_roots.end())
    throw InvalidPlan("designated roots must be sorted and distinct");
  for (Vertex z : p_roots)
    if (!in_p(parts, z)) throw InvalidPlan("designated root " + std::to_string(z) + " not in H_p");

  ConstructionState s;
  s.parts_ = parts;
  s.p_roots_.assign(p_roots.begin(), p_roots.end());
  s.parent_.assign(parts.total(), kNoParent);
  std::copy(base_forest.parent.begin(), base_forest.parent.end(), s.parent_.begin());

  for (const auto& [z, v] : attachments) {
    if (contains(p_roots, z))
      throw InvalidPlan("designated root " + std::to_string(z) + " cannot be attached");
    if (!in_p(parts, z)) throw InvalidPlan("attachment source " + std::to_string(z) + " not in H_p");
    if (!in_base(parts, v))
      throw InvalidPlan("attachment target " + std::to_string(v) + " not in H_m u H_n");
    s.parent_[z] = v;
  }
  for (Vertex z = parts.first_p(); z < parts.total(); ++z)
    if (!contains(p_roots, z) && !attachments.contains(z))
      throw InvalidPlan("H_p vertex " + std::to_string(z) + " has no attachment");
  return s;
}

ConstructionState add_merge_edges(ConstructionState state, std::span<const DirectedEdge> edges) {
  const auto& parts = state.parts_;
  for (const auto& [a, b] : edges) {
    if (!in_base(parts, a) || state.parent_[a] != kNoParent)
      throw InvalidPlan("merge source " + std::to_string(a) + " is not an open H_m u H_n vertex");
    if (!in_p(parts, b) || contains(state.p_roots_, b))
      throw InvalidPlan("merge target " + std::to_string(b) + " is not a non-root H_p vertex");
    if (state.terminal(b) == a)
      throw CycleRisk("merge edge " + std::to_string(a) + "->" + std::to_string(b) +
                      " stays inside one component");
    state.parent_[a] = b;
    ++state.merges_applied_;
  }
  return state;
}

ConstructionOutcome close_to_roots(const ConstructionState& state,
                                   const std::map<Vertex, Vertex>& closing) {
  ConstructionOutcome out{RootedForest{state.parent()}, state.merges_applied()};
  for (const auto& [v, z] : closing) {
    if (v >= state.parts().total() || !in_base(state.parts(), v) ||
        state.parent()[v] != kNoParent)
      throw InvalidPlan("closing source " + std::to_string(v) + " is not an open vertex");
    if (!contains(state.p_roots(), z))
      throw InvalidPlan("closing target " + std::to_string(z) + " is not a designated root");
    out.forest.parent[v] = z;
  }
  for (Vertex v : state.open_vertices())
    if (!closing.contains(v))
      throw IncompletePlan("open vertex " + std::to_string(v) + " is not closed");
  return out;
}

ConstructionOutcome replay(const ConstructionPlan& plan) {
  const std::vector<DirectedEdge> merges(plan.merge_edges.begin(), plan.merge_edges.end());
  return close_to_roots(
      add_merge_edges(attach_free_part(plan.parts, plan.base_forest, plan.p_roots,
                                       plan.attachments),
                      merges),
      plan.closing);
}

ConstructionPlan decompose(const RootedForest& forest, const PartSizes& parts) {
  const auto roots = forest.roots();
  for (Vertex v : roots)
    if (!in_p(parts, v))
      throw UnsupportedInput("root " + std::to_string(v) + " lies outside H_p");
  if (parts.total() == 0 ||
      !is_rooted_spanning_forest(build_complete_multipartite(parts), forest, roots))
    throw InvalidInput("not a rooted spanning forest of K_{m,n,p}");

  ConstructionPlan plan;
  plan.parts = parts;
  plan.p_roots = roots;
  plan.base_forest.parent.assign(parts.m + parts.n, kNoParent);
  for (Vertex v = 0; v < parts.m + parts.n; ++v) {
    const Vertex u = forest.parent[v];
    if (in_base(parts, u))
      plan.base_forest.parent[v] = u;
    else if (contains(roots, u))
      plan.closing.emplace(v, u);
    else
      plan.merge_edges.emplace(v, u);
  }
  for (Vertex z = parts.first_p(); z < parts.total(); ++z)
    if (!forest.is_root(z)) plan.attachments.emplace(z, forest.parent[z]);
  return plan;
}

std::vector<RootedForest> enumerate_bipartite_forests(std::uint32_t m, std::uint32_t n) {
  const PartSizes parts{m, n, 0};
  const std::uint32_t base = m + n;
  // Choice c for vertex v: the c-th vertex of the other side, or the last
  // choice for "root" (kNoParent sorts after every vertex id).
  auto options = [&](Vertex v) { return (v < m ? n : m) + 1; };
  auto target = [&](Vertex v, std::uint32_t c) {
    if (c + 1 == options(v)) return kNoParent;
    return v < m ? m + c : c;
  };

  std::vector<RootedForest> out;
  std::vector<std::uint32_t> choice(base, 0);
  RootedForest f{std::vector<Vertex>(base, kNoParent)};
  while (true) {
    for (Vertex v = 0; v < base; ++v)
      f.parent[v] = target(v, choice[v]);
    if (is_bipartite_forest(parts, f)) out.push_back(f);

    // Odometer with the last vertex varying fastest keeps lexicographic order.
    std::int64_t v = static_cast<std::int64_t>(base) - 1;
    while (v >= 0 && choice[v] + 1 == options(static_cast<Vertex>(v))) choice[v--] = 0;
    if (v < 0) break;
    ++choice[v];
  }
  return out;
}

namespace {

// Advances a mixed-radix counter; returns false on wrap-around.
bool next_choice(std::vector<std::uint32_t>& digits, std::uint32_t radix) {
  for (std::int64_t i = static_cast<std::int64_t>(digits.size()) - 1; i >= 0; --i) {
    if (++digits[i] < radix) return true;
    digits[i] = 0;
  }
  return false;
}

struct LocalTally {
  std::uint64_t plans = 0;
  std::set<RootedForest> forests;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> by_profile;
  bool duplicate = false;
  bool round_trip_failed = false;
};

void enumerate_from_base(const PartSizes& parts, const RootedForest& base,
                         std::span<const Vertex> p_roots, LocalTally& tally) {
  std::vector<Vertex> free_p;
  for (Vertex z = parts.first_p(); z < parts.total(); ++z)
    if (!contains(p_roots, z)) free_p.push_back(z);
  const std::uint32_t base_size = parts.m + parts.n;
  const auto r = static_cast<std::uint32_t>(p_roots.size());

  ConstructionPlan plan;
  plan.parts = parts;
  plan.base_forest = base;
  plan.p_roots.assign(p_roots.begin(), p_roots.end());
  const RootProfile profile = plan.base_profile();
  const auto base_roots = base.roots();

  std::vector<std::uint32_t> attach(free_p.size(), 0);
  do {
    plan.attachments.clear();
    for (std::size_t i = 0; i < free_p.size(); ++i) plan.attachments.emplace(free_p[i], attach[i]);
    const ConstructionState attached = attach_free_part(parts, base, p_roots, plan.attachments);

    // Each base root either stays open (0) or merges into free_p[c - 1].
    std::vector<std::uint32_t> merge(base_roots.size(), 0);
    do {
      std::vector<DirectedEdge> edges;
      for (std::size_t i = 0; i < base_roots.size(); ++i)
        if (merge[i] != 0) edges.emplace_back(base_roots[i], free_p[merge[i] - 1]);

      // Sets that close a cycle fail in every order; probe sequentially.
      ConstructionState probe = attached;
      bool ok = true;
      for (const auto& e : edges) {
        if (!merge_allowed(probe, e)) {
          ok = false;
          break;
        }
        probe = add_merge_edges(std::move(probe), std::span(&e, 1));
      }
      if (!ok) continue;

      plan.merge_edges = std::set<DirectedEdge>(edges.begin(), edges.end());
      const auto open = probe.open_vertices();
      std::vector<std::uint32_t> close(open.size(), 0);
      do {
        plan.closing.clear();
        for (std::size_t i = 0; i < open.size(); ++i) plan.closing.emplace(open[i], p_roots[close[i]]);
        ConstructionOutcome outcome = close_to_roots(probe, plan.closing);
        ++tally.plans;
        if (decompose(outcome.forest, parts) != plan) tally.round_trip_failed = true;
        if (!tally.forests.insert(std::move(outcome.forest)).second) tally.duplicate = true;
        ++tally.by_profile[{profile.l, profile.k}];
      } while (next_choice(close, r));
    } while (next_choice(merge, static_cast<std::uint32_t>(free_p.size()) + 1));
  } while (next_choice(attach, base_size));
}

}  // namespace

EnumerationResult enumerate_constructions(const PartSizes& parts, std::span<const Vertex> p_roots,
                                          std::uint32_t max_vertices) {
  if (parts.total() > max_vertices)
    throw ResourceLimit("construction enumeration limited to " + std::to_string(max_vertices) +
                        " vertices");
  if (parts.m + parts.n == 0) throw UnsupportedInput("no bipartite base when m + n == 0");
  std::vector<Vertex> roots(p_roots.begin(), p_roots.end());
  std::sort(roots.begin(), roots.end());
  if (roots.empty() || std::adjacent_find(roots.begin(), roots.end()) != roots.end())
    throw InvalidInput("designated roots must be non-empty and distinct");
  for (Vertex z : roots)
    if (!in_p(parts, z)) throw InvalidInput("designated root outside H_p");

  const auto bases = enumerate_bipartite_forests(parts.m, parts.n);
  std::vector<LocalTally> tallies(bases.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < bases.size(); ++i)
    enumerate_from_base(parts, bases[i], roots, tallies[i]);

  // Merge in base-forest order so the outcome is independent of scheduling.
  EnumerationResult result;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> by_profile;
  for (auto& t : tallies) {
    if (t.round_trip_failed) throw FormulaError("decompose(replay(plan)) != plan");
    if (t.duplicate) throw FormulaError("a forest arose from two plans");
    result.plan_count += t.plans;
    for (const auto& [key, count] : t.by_profile) by_profile[key] += count;
    for (auto& f : t.forests)
      if (!result.forests.insert(f).second) throw FormulaError("a forest arose from two plans");
  }
  for (const auto& [key, count] : by_profile) result.by_base_profile.emplace(key, BigCount(count));
  return result;
}

EnumerationResult enumerate_constructions(const PartSizes& parts, std::uint32_t r,
                                          std::uint32_t max_vertices) {
  if (r == 0 || r > parts.p) throw InvalidInput("r must satisfy 1 <= r <= p");
  std::vector<Vertex> roots(r);
  for (std::uint32_t i = 0; i < r; ++i) roots[i] = parts.first_p() + i;
  return enumerate_constructions(parts, roots, max_vertices);
}

}  // namespace tripart

#pragma once

// Closed-form counts for rooted spanning forests of K_{m,n,p}, together with
// the term-by-term sums the closed forms collapse from. The two families are
// written independently so that each one checks the other.

#include <cstdint>
#include <optional>
#include <utility>

#include "tripart/exact_math.hpp"
#include "tripart/graph_core.hpp"

namespace tripart {

/// Parameters for one formula evaluation. Root parameters are optional and
/// checked against the part sizes by validate().
struct FormulaRequest {
  PartSizes parts;
  std::optional<std::uint32_t> l;
  std::optional<std::uint32_t> k;
  std::optional<std::uint32_t> r;

  /// Throws InvalidInput when a present root parameter exceeds its part.
  void validate() const;
};

/// Rooted spanning forests of K_{m,n} with l roots in H_m and k roots in H_n:
/// C(m,l) C(n,k) n^(m-l-1) m^(n-k-1) (km + ln - lk).
BigCount bipartite_forest_count(std::uint32_t m, std::uint32_t l, std::uint32_t n,
                                std::uint32_t k);

/// Spanning trees of K_{m,n,p}: (m+n)^(p-1) (m+p)^(n-1) (n+p)^(m-1) (m+n+p).
BigCount tripartite_tree_count(const PartSizes& parts);

/// Spanning trees rooted at some vertex of H_p. Requires p >= 1.
BigCount rooted_tree_count_root_in_part(const PartSizes& parts);

/// Rooted spanning forests whose r roots all lie in H_p. Requires 1 <= r <= p.
BigCount forest_count_r_roots_in_part(const PartSizes& parts, std::uint32_t r);

/// All rooted spanning forests, roots unrestricted.
BigCount total_rooted_forest_count(const PartSizes& parts);

/// Sum over base profiles (l,k) of f(m,l;n,k) (m+n)^(p-1) p^(l+k-1).
/// Requires p >= 1 and m+n >= 1.
BigCount tree_count_via_sum(const PartSizes& parts);

/// C(p,r) times the sum over (l,k) of f(m,l;n,k) (m+n)^(p-r) p^(l+k-1) r.
BigCount forest_count_via_sum(const PartSizes& parts, std::uint32_t r);

/// Sum over (l,k,r) of C(p,r) f(m,l;n,k) (m+n)^(p-r) (r+1) (p+1)^(l+k-1).
/// Throws UnsupportedInput when m+n == 0.
BigCount total_via_sum(const PartSizes& parts);

/// Both sides of the binomial collapse used by the total-forest count:
///   first  = sum_{t=0..s} C(s,t) (p-r)^t (r+1)^(s+1-t)
///   second = (r+1) (p+1)^s
/// Requires r <= p.
std::pair<BigCount, BigCount> collapse_identity_check(std::uint32_t s, std::uint32_t p,
                                                      std::uint32_t r);

}  // namespace tripart

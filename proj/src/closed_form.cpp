#include "tripart/closed_form.hpp"

#include <string>

#include "tripart/errors.hpp"

namespace tripart {
namespace {

std::int64_t diff(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::int64_t>(a) - static_cast<std::int64_t>(b);
}

void require_nonempty(const PartSizes& parts) {
  if (parts.total() == 0) throw InvalidInput("all parts are empty");
}

void require_roots_in_p(const PartSizes& parts, std::uint32_t r) {
  if (r == 0) throw InvalidInput("r must be at least 1");
  if (r > parts.p)
    throw InvalidInput("r = " + std::to_string(r) + " exceeds p = " + std::to_string(parts.p));
}

}  // namespace

void FormulaRequest::validate() const {
  if (l && *l > parts.m) throw InvalidInput("l exceeds m");
  if (k && *k > parts.n) throw InvalidInput("k exceeds n");
  if (r && *r > parts.p) throw InvalidInput("r exceeds p");
}

BigCount bipartite_forest_count(std::uint32_t m, std::uint32_t l, std::uint32_t n,
                                std::uint32_t k) {
  if (m + n == 0) throw InvalidInput("bipartite graph with no vertices");
  if (l > m || k > n) throw InvalidInput("root counts exceed part sizes");

  const std::int64_t linear = std::int64_t{k} * m + std::int64_t{l} * n - std::int64_t{l} * k;
  // Zero before touching exponents that may be negative with a zero base.
  if (linear == 0) return BigCount(0);
  return product_to_count({
      BigFraction(binomial(m, l)),
      BigFraction(binomial(n, k)),
      signed_power(n, diff(m, l) - 1),
      signed_power(m, diff(n, k) - 1),
      BigFraction(linear),
  });
}

BigCount tripartite_tree_count(const PartSizes& parts) {
  require_nonempty(parts);
  const auto [m, n, p] = parts;
  return product_to_count({
      signed_power(std::uint64_t{m} + n, diff(p, 1)),
      signed_power(std::uint64_t{m} + p, diff(n, 1)),
      signed_power(std::uint64_t{n} + p, diff(m, 1)),
      BigFraction(std::int64_t{m} + n + p),
  });
}

BigCount rooted_tree_count_root_in_part(const PartSizes& parts) {
  if (parts.p == 0) throw InvalidInput("H_p is empty; no root can lie in it");
  return BigCount(parts.p) * tripartite_tree_count(parts);
}

BigCount forest_count_r_roots_in_part(const PartSizes& parts, std::uint32_t r) {
  require_roots_in_p(parts, r);
  const auto [m, n, p] = parts;
  return product_to_count({
      BigFraction(binomial(p, r)),
      BigFraction(std::int64_t{r}),
      signed_power(std::uint64_t{m} + n, diff(p, r)),
      signed_power(std::uint64_t{m} + p, diff(n, 1)),
      signed_power(std::uint64_t{n} + p, diff(m, 1)),
      BigFraction(std::int64_t{m} + n + p),
  });
}

BigCount total_rooted_forest_count(const PartSizes& parts) {
  require_nonempty(parts);
  const auto [m, n, p] = parts;
  const std::uint64_t all = std::uint64_t{m} + n + p + 1;
  return product_to_count({
      signed_power(std::uint64_t{m} + n + 1, diff(p, 1)),
      signed_power(std::uint64_t{m} + p + 1, diff(n, 1)),
      signed_power(std::uint64_t{n} + p + 1, diff(m, 1)),
      signed_power(all, 2),
  });
}

BigCount tree_count_via_sum(const PartSizes& parts) {
  const auto [m, n, p] = parts;
  if (p == 0) throw InvalidInput("sum form needs p >= 1");
  if (m + n == 0) throw InvalidInput("sum form needs m + n >= 1");

  BigCount total;
  for (std::uint32_t l = 0; l <= m; ++l) {
    for (std::uint32_t k = 0; k <= n; ++k) {
      const BigCount base = bipartite_forest_count(m, l, n, k);
      if (base == BigCount(0)) continue;
      total += product_to_count({
          BigFraction(base),
          signed_power(std::uint64_t{m} + n, diff(p, 1)),
          signed_power(p, diff(std::uint64_t{l} + k, 1)),
      });
    }
  }
  return total;
}

BigCount forest_count_via_sum(const PartSizes& parts, std::uint32_t r) {
  require_roots_in_p(parts, r);
  const auto [m, n, p] = parts;
  if (m + n == 0) throw InvalidInput("sum form needs m + n >= 1");

  BigCount per_root_set;
  for (std::uint32_t l = 0; l <= m; ++l) {
    for (std::uint32_t k = 0; k <= n; ++k) {
      const BigCount base = bipartite_forest_count(m, l, n, k);
      if (base == BigCount(0)) continue;
      per_root_set += product_to_count({
          BigFraction(base),
          signed_power(std::uint64_t{m} + n, diff(p, r)),
          signed_power(p, diff(std::uint64_t{l} + k, 1)),
          BigFraction(std::int64_t{r}),
      });
    }
  }
  return binomial(p, r) * per_root_set;
}

BigCount total_via_sum(const PartSizes& parts) {
  const auto [m, n, p] = parts;
  if (m + n == 0) throw UnsupportedInput("no bipartite base when m + n == 0");

  BigCount total;
  for (std::uint32_t l = 0; l <= m; ++l) {
    for (std::uint32_t k = 0; k <= n; ++k) {
      const BigCount base = bipartite_forest_count(m, l, n, k);
      if (base == BigCount(0)) continue;
      for (std::uint32_t r = 0; r <= p; ++r) {
        total += product_to_count({
            BigFraction(binomial(p, r)),
            BigFraction(base),
            signed_power(std::uint64_t{m} + n, diff(p, r)),
            BigFraction(std::int64_t{r} + 1),
            signed_power(std::uint64_t{p} + 1, diff(std::uint64_t{l} + k, 1)),
        });
      }
    }
  }
  return total;
}

std::pair<BigCount, BigCount> collapse_identity_check(std::uint32_t s, std::uint32_t p,
                                                      std::uint32_t r) {
  if (r > p) throw InvalidInput("collapse identity needs r <= p");
  BigCount expanded;
  for (std::uint32_t t = 0; t <= s; ++t) {
    expanded += product_to_count({
        BigFraction(binomial(s, t)),
        signed_power(p - r, t),
        signed_power(std::uint64_t{r} + 1, diff(std::uint64_t{s} + 1, t)),
    });
  }
  const BigCount collapsed =
      product_to_count({BigFraction(std::int64_t{r} + 1), signed_power(std::uint64_t{p} + 1, s)});
  return {expanded, collapsed};
}

}  // namespace tripart

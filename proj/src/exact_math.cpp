#include "tripart/exact_math.hpp"

#include <algorithm>
#include <utility>

#include "tripart/errors.hpp"

namespace tripart {

BigCount::BigCount(std::uint64_t v) {
  // mpz_class has no portable uint64_t constructor on every ABI.
  mpz_import(value_.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
}

BigCount::BigCount(const BigInt& v) : value_(v) {
  if (sgn(v) < 0) throw FormulaError("negative count: " + v.get_str());
}

BigCount BigCount::parse(const std::string& decimal) {
  if (decimal.empty() ||
      !std::all_of(decimal.begin(), decimal.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw InvalidInput("not a decimal count: '" + decimal + "'");
  }
  return BigCount(BigInt(decimal, 10));
}

std::ostream& operator<<(std::ostream& os, const BigCount& c) { return os << c.str(); }

BigFraction::BigFraction(std::int64_t v) {
  mpz_class z;
  const std::uint64_t mag = v < 0 ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(mag), 0, 0, &mag);
  if (v < 0) z = -z;
  q_ = mpq_class(z);
}

BigFraction::BigFraction(const BigInt& v) : q_(v) {}

BigFraction::BigFraction(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw DomainError("fraction with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

std::ostream& operator<<(std::ostream& os, const BigFraction& f) { return os << f.str(); }

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != dim_) throw InvalidInput("IntMatrix: rows must form a square");
    std::size_t j = 0;
    for (long v : row) (*this)(i, j++) = v;
    ++i;
  }
}

IntMatrix IntMatrix::without(std::span<const std::size_t> indices) const {
  std::vector<bool> drop(dim_, false);
  for (std::size_t idx : indices) {
    if (idx >= dim_) throw InvalidInput("IntMatrix::without: index out of range");
    drop[idx] = true;
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < dim_; ++i)
    if (!drop[i]) keep.push_back(i);

  IntMatrix out(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) out(i, j) = (*this)(keep[i], keep[j]);
  return out;
}

BigCount binomial(std::uint64_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return BigCount(0);
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(k));
  return BigCount(out);
}

BigFraction signed_power(std::uint64_t base, std::int64_t exp) {
  if (exp == 0) return BigFraction(1);
  if (base == 0) {
    if (exp < 0) throw DomainError("0 raised to a negative power");
    return BigFraction(0);
  }
  BigInt b = BigCount(base).value();
  BigInt pow;
  const auto mag = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  mpz_pow_ui(pow.get_mpz_t(), b.get_mpz_t(), mag);
  if (exp > 0) return BigFraction(pow);
  return BigFraction(BigInt(1), pow);
}

BigInt det_bareiss(IntMatrix a) {
  const std::size_t n = a.dim();
  if (n == 0) return BigInt(1);

  int sign = 1;
  BigInt prev_pivot = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && sgn(a(swap_row, k)) == 0) ++swap_row;
      if (swap_row == n) return BigInt(0);
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt& cell = a(i, j);
        cell = cell * a(k, k) - a(i, k) * a(k, j);
        // Sylvester's identity guarantees this division is exact.
        mpz_divexact(cell.get_mpz_t(), cell.get_mpz_t(), prev_pivot.get_mpz_t());
      }
    }
    prev_pivot = a(k, k);
  }
  BigInt det = a(n - 1, n - 1);
  return sign < 0 ? BigInt(-det) : det;
}

BigCount product_to_count(std::span<const BigFraction> factors) {
  BigFraction product(1);
  for (const auto& f : factors) product *= f;
  if (!product.is_integer())
    throw FormulaError("formula product is not integral: " + product.str());
  if (sgn(product.numerator()) < 0)
    throw FormulaError("formula product is negative: " + product.str());
  return BigCount(product.numerator());
}

BigCount product_to_count(std::initializer_list<BigFraction> factors) {
  return product_to_count(std::span<const BigFraction>(factors.begin(), factors.size()));
}

}  // namespace tripart

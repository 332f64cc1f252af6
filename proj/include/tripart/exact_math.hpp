#pragma once

// Exact arithmetic used by every counting routine. Integers and rationals are
// GMP-backed; the wrappers below pin down the invariants the rest of the code
// relies on (counts are non-negative, fractions are canonical).

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace tripart {

using BigInt = mpz_class;

/// Arbitrary-precision non-negative integer.
class BigCount {
 public:
  BigCount() = default;
  BigCount(std::uint64_t v);  // NOLINT(google-explicit-constructor)
  explicit BigCount(const BigInt& v);

  const BigInt& value() const { return value_; }
  std::string str() const { return value_.get_str(); }

  /// Parses a decimal string; throws InvalidInput on anything else.
  static BigCount parse(const std::string& decimal);

  BigCount& operator+=(const BigCount& o) {
    value_ += o.value_;
    return *this;
  }
  BigCount& operator*=(const BigCount& o) {
    value_ *= o.value_;
    return *this;
  }
  friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }
  friend BigCount operator*(BigCount a, const BigCount& b) { return a *= b; }

  friend bool operator==(const BigCount& a, const BigCount& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  BigInt value_{0};
};

std::ostream& operator<<(std::ostream& os, const BigCount& c);

/// Exact rational kept in lowest terms with a positive denominator.
class BigFraction {
 public:
  BigFraction() = default;
  BigFraction(std::int64_t v);  // NOLINT(google-explicit-constructor)
  explicit BigFraction(const BigInt& v);
  explicit BigFraction(const BigCount& v) : BigFraction(v.value()) {}
  /// Throws DomainError when den == 0.
  BigFraction(const BigInt& num, const BigInt& den);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }
  std::string str() const { return q_.get_str(); }

  BigFraction& operator*=(const BigFraction& o) {
    q_ *= o.q_;
    return *this;
  }
  BigFraction& operator+=(const BigFraction& o) {
    q_ += o.q_;
    return *this;
  }
  friend BigFraction operator*(BigFraction a, const BigFraction& b) { return a *= b; }
  friend BigFraction operator+(BigFraction a, const BigFraction& b) { return a += b; }
  friend bool operator==(const BigFraction& a, const BigFraction& b) { return a.q_ == b.q_; }

 private:
  mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const BigFraction& f);

/// Dense square matrix of big integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, BigInt(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t dim() const { return dim_; }
  BigInt& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const BigInt& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  /// Copy with the listed rows and columns (same index set for both) removed.
  IntMatrix without(std::span<const std::size_t> indices) const;

 private:
  std::size_t dim_ = 0;
  std::vector<BigInt> data_;
};

/// C(n, k); zero when k < 0 or k > n.
BigCount binomial(std::uint64_t n, std::int64_t k);

/// base^exp as an exact fraction with 0^0 = 1. Throws DomainError for 0^(negative).
BigFraction signed_power(std::uint64_t base, std::int64_t exp);

/// Determinant by fraction-free (Bareiss) elimination. dim 0 yields 1.
BigInt det_bareiss(IntMatrix a);

/// Multiplies the factors exactly and returns the product as a count.
/// Throws FormulaError if the product is negative or not an integer.
BigCount product_to_count(std::span<const BigFraction> factors);
BigCount product_to_count(std::initializer_list<BigFraction> factors);

}  // namespace tripart

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace twistfuse {

using BigInt = boost::multiprecision::cpp_int;

/// Power series in t with exact integer coefficients, kept through t^order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);

  static TruncatedSeries one(int order);
  /// 1 + sign * t^exponent.
  static TruncatedSeries binomial(int exponent, int sign, int order);
  /// (1 - t^step)^{-1} = sum_j t^{j step}.
  static TruncatedSeries geometric(int step, int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& operator[](int power) const { return coeffs_.at(static_cast<std::size_t>(power)); }
  BigInt& operator[](int power) { return coeffs_.at(static_cast<std::size_t>(power)); }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

  TruncatedSeries truncated(int order) const;

  /// Product kept through the smaller of the two orders.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Product of all factors through t^order; the empty product is 1.
TruncatedSeries series_product(std::span<const TruncatedSeries> factors, int order);

struct EulerCheck {
  bool ok = false;
  std::optional<int> first_mismatch;
  TruncatedSeries distinct_side{0};  // prod (1 + t^m)
  TruncatedSeries odd_side{0};       // prod (1 - t^{2m-1})^{-1}
};

/// Compares prod_{m=1}^{T}(1 + t^m) with prod_{m=1}^{T}(1 - t^{2m-1})^{-1}
/// through t^T.
EulerCheck euler_check(int order);

enum class PartitionKind { Distinct, Odd };

/// Counts partitions of n into distinct (or odd) parts by listing every
/// partition of n. Independent of the series engine. 0 <= n <= 30.
std::int64_t partition_oracle(int n, PartitionKind kind);

}  // namespace twistfuse

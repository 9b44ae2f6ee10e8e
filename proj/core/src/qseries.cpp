#include "twistfuse/qseries.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "twistfuse/error.hpp"

namespace twistfuse {

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw InvalidArgument("series order must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, BigInt(0));
}

TruncatedSeries TruncatedSeries::one(int order) {
  TruncatedSeries s(order);
  s[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::binomial(int exponent, int sign, int order) {
  if (exponent < 1) throw InvalidArgument("factor exponent must be positive");
  TruncatedSeries s = one(order);
  if (exponent <= order) s[exponent] += sign;
  return s;
}

TruncatedSeries TruncatedSeries::geometric(int step, int order) {
  if (step < 1) throw InvalidArgument("geometric step must be positive");
  TruncatedSeries s(order);
  for (int p = 0; p <= order; p += step) s[p] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order > this->order())
    throw InvalidArgument("cannot extend a series truncated at t^" +
                          std::to_string(this->order()) + " to t^" + std::to_string(order));
  TruncatedSeries s(order);
  std::copy_n(coeffs_.begin(), order + 1, s.coeffs_.begin());
  return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order(), b.order());
  TruncatedSeries out(order);
  for (int i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= order; ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

TruncatedSeries series_product(std::span<const TruncatedSeries> factors, int order) {
  TruncatedSeries out = TruncatedSeries::one(order);
  for (const auto& f : factors) {
    if (f.order() < order)
      throw InvalidArgument("factor truncated at t^" + std::to_string(f.order()) +
                            " below requested order " + std::to_string(order));
    out = out * f;
  }
  return out;
}

EulerCheck euler_check(int order) {
  if (order < 1) throw InvalidArgument("Euler check order must be at least 1");
  std::vector<TruncatedSeries> distinct, odd;
  for (int m = 1; m <= order; ++m) {
    distinct.push_back(TruncatedSeries::binomial(m, +1, order));
    odd.push_back(TruncatedSeries::geometric(2 * m - 1, order));
  }
  EulerCheck out;
  out.distinct_side = series_product(distinct, order);
  out.odd_side = series_product(odd, order);
  for (int p = 0; p <= order; ++p) {
    if (out.distinct_side[p] != out.odd_side[p]) {
      out.first_mismatch = p;
      break;
    }
  }
  out.ok = !out.first_mismatch;
  return out;
}

std::int64_t partition_oracle(int n, PartitionKind kind) {
  if (n < 0 || n > 30) throw InvalidArgument("partition oracle needs 0 <= n <= 30");
  std::int64_t count = 0;
  std::vector<int> parts;
  // All partitions of n as weakly decreasing part lists.
  std::function<void(int, int)> visit = [&](int remaining, int largest) {
    if (remaining == 0) {
      const bool keep =
          kind == PartitionKind::Distinct
              ? std::adjacent_find(parts.begin(), parts.end()) == parts.end()
              : std::all_of(parts.begin(), parts.end(), [](int p) { return p % 2 == 1; });
      count += keep ? 1 : 0;
      return;
    }
    for (int p = std::min(remaining, largest); p >= 1; --p) {
      parts.push_back(p);
      visit(remaining - p, p);
      parts.pop_back();
    }
  };
  visit(n, n);
  return count;
}

}  // namespace twistfuse

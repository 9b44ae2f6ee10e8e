#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>

namespace twistfuse::oracle {

std::vector<std::vector<int>> decreasing_cube(int length, int lo, int hi) {
  std::vector<std::vector<int>> out;
  const int span = hi - lo + 1;
  std::int64_t total = 1;
  for (int i = 0; i < length; ++i) total *= span;
  for (std::int64_t code = 0; code < total; ++code) {
    std::vector<int> t(length);
    std::int64_t c = code;
    for (int i = length - 1; i >= 0; --i) {
      t[i] = lo + static_cast<int>(c % span);
      c /= span;
    }
    if (std::is_sorted(t.rbegin(), t.rend())) out.push_back(std::move(t));
  }
  return out;
}

namespace {

bool dominant(const std::vector<int>& t) {
  return std::is_sorted(t.rbegin(), t.rend()) && t.back() >= 0;
}

}  // namespace

std::map<std::vector<int>, std::int64_t> sundaram_witnesses(const std::vector<int>& h, int k) {
  const int n = static_cast<int>(h.size());
  std::map<std::vector<int>, std::int64_t> out;
  for (unsigned add = 0; add < (1u << n); ++add) {
    const int p = std::popcount(add);
    if (p > k) continue;
    std::vector<int> f = h;
    for (int r = 0; r < n; ++r)
      if (add >> r & 1u) ++f[r];
    if (!dominant(f)) continue;
    for (unsigned rem = 0; rem < (1u << n); ++rem) {
      if (std::popcount(rem) != k - p) continue;
      std::vector<int> g = f;
      for (int r = 0; r < n; ++r)
        if (rem >> r & 1u) --g[r];
      if (dominant(g)) ++out[g];
    }
  }
  return out;
}

std::map<int, std::int64_t> su2_fusion(int a, int b, int level) {
  std::map<int, std::int64_t> out;
  for (int c = std::abs(a - b); c <= std::min(a + b, 2 * level - a - b); c += 2) out[c] = 1;
  return out;
}

std::int64_t binomial(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::vector<int>> signatures_up_to(int n, int boxes) {
  std::vector<std::vector<int>> out;
  for (auto& t : decreasing_cube(n, 0, boxes))
    if (std::accumulate(t.begin(), t.end(), 0) <= boxes) out.push_back(std::move(t));
  return out;
}

}  // namespace twistfuse::oracle

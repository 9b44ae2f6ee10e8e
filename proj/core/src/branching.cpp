#include "twistfuse/branching.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "twistfuse/log.hpp"

namespace twistfuse {
namespace {

void check_exterior_degree(int k, const LevelContext& ctx) {
  if (k < 0 || k > ctx.rank())
    throw InvalidArgument("exterior power degree k=" + std::to_string(k) +
                          " outside [0, 2N=" + std::to_string(ctx.rank()) + "]");
}

void check_length(std::size_t size, int expected, const char* what) {
  if (size != static_cast<std::size_t>(expected))
    throw InvalidArgument(std::string(what) + " has " + std::to_string(size) +
                          " parts, expected " + std::to_string(expected));
}

// Shifted exponents of the Sp(N) alternant: a_i = h_i + N - i + 1.
std::vector<int> shifted_exponents(std::span<const int> parts) {
  const int n = static_cast<int>(parts.size());
  std::vector<int> a(parts.begin(), parts.end());
  for (int i = 0; i < n; ++i) a[i] += n - i;
  return a;
}

}  // namespace

FormalCombination<GLSignature> pieri_classical(const GLSignature& f, int k,
                                               const LevelContext& ctx) {
  check_length(f.size(), ctx.rank(), "SU(2N) signature");
  check_exterior_degree(k, ctx);
  FormalCombination<GLSignature> out;
  for (const auto& g : add_vertical_strips(f, k, ctx.rank()))
    out.add(normalize_gl(g), 1);
  return out;
}

FormalCombination<GLSignature> pieri_level(const GLSignature& f, int k,
                                           const LevelContext& ctx) {
  check_length(f.size(), ctx.rank(), "SU(2N) signature");
  if (!is_permissible(f, ctx.level()))
    throw InvalidArgument("signature (" + f.str() +
                          ") violates f_1 - f_2N <= level");
  FormalCombination<GLSignature> out;
  for (const auto& [g, m] : pieri_classical(f, k, ctx)) {
    if (is_permissible(g, ctx.level())) out.add(g, m);
  }
  return out;
}

FormalCombination<SpSignature> sundaram_classical(const SpSignature& h, int k,
                                                  const LevelContext& ctx) {
  check_length(h.size(), ctx.n(), "Sp(N) signature");
  check_exterior_degree(k, ctx);
  FormalCombination<SpSignature> out;
  for (int p = 0; p <= std::min(k, ctx.n()); ++p) {
    for (const auto& f : add_vertical_strips(h, p, ctx.n())) {
      for (const auto& g : remove_vertical_strips(f, k - p)) out.add(g, 1);
    }
  }
  return out;
}

FormalCombination<SpSignature> sundaram_level(const SpSignature& h, int k,
                                              const LevelContext& ctx) {
  check_length(h.size(), ctx.n(), "Sp(N) signature");
  const int level = ctx.level();
  if (!is_permissible(h, level))
    throw InvalidArgument("signature (" + h.str() +
                          ") violates h_1 + h_2 <= level");

  FormalCombination<SpSignature> out;
  for (const auto& [g, m] : sundaram_classical(h, k, ctx)) {
    const int sum = leading_pair_sum(g);
    if (sum <= level) {
      out.add(g, m);
      continue;
    }
    if (sum == level + 1) continue;  // on the wall: character vanishes
    if (sum > level + 2 || g.size() < 2)
      throw InternalError("fusion term (" + g.str() + ") of K_" + h.str() +
                          " lies beyond a single affine reflection");

    std::vector<int> reflected(g.parts().begin(), g.parts().end());
    reflected[0] = level + 1 - g[1];
    reflected[1] = level + 1 - g[0];

    // Repeated or zero shifted exponents: the alternant is identically zero.
    const auto a = shifted_exponents(reflected);
    const std::set<int> distinct(a.begin(), a.end());
    if (distinct.size() != a.size() || distinct.count(0)) continue;

    const bool dominant = std::is_sorted(reflected.rbegin(), reflected.rend()) &&
                          reflected.back() >= 0;
    if (!dominant) {
      warn("dropping non-dominant reflection of (" + g.str() + ") in K_" +
           h.str() + " at level " + std::to_string(level));
      continue;
    }
    out.add(SpSignature(std::move(reflected)), -m);
  }
  if (!out.all_nonnegative())
    throw InternalError("negative multiplicity in level-" + std::to_string(level) +
                        " fusion of K_" + h.str() + " with H_" +
                        std::to_string(k) + ": reflection rule is wrong");
  return out;
}

}  // namespace twistfuse

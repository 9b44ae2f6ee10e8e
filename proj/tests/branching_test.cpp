#include <gtest/gtest.h>

#include "oracles.hpp"
#include "twistfuse/branching.hpp"
#include "twistfuse/characters.hpp"
#include "twistfuse/log.hpp"

namespace twistfuse {
namespace {

using GL = GLSignature;
using Sp = SpSignature;

template <class Label>
FormalCombination<Label> combo(std::initializer_list<std::pair<Label, std::int64_t>> terms) {
  FormalCombination<Label> out;
  for (const auto& [label, m] : terms) out.add(label, m);
  return out;
}

TEST(PieriTest, ClassicalExamples) {
  EXPECT_EQ(pieri_classical(GL({0, 0}), 1, {1, 1}), combo<GL>({{GL({1, 0}), 1}}));
  EXPECT_EQ(pieri_classical(GL({1, 0, 0, 0}), 2, {2, 1}),
            combo<GL>({{GL({2, 1, 0, 0}), 1}, {GL({1, 1, 1, 0}), 1}}));
  EXPECT_EQ(pieri_classical(GL({1, 0}), 1, {1, 1}),
            combo<GL>({{GL({2, 0}), 1}, {GL({0, 0}), 1}}));
}

TEST(PieriTest, LevelExamples) {
  EXPECT_EQ(pieri_level(GL({1, 0}), 1, {1, 1}), combo<GL>({{GL({0, 0}), 1}}));
  EXPECT_EQ(pieri_level(GL({1, 0, 0, 0}), 1, {2, 1}), combo<GL>({{GL({1, 1, 0, 0}), 1}}));
  EXPECT_EQ(pieri_level(GL({0, 0}), 0, {1, 3}), combo<GL>({{GL({0, 0}), 1}}));
}

TEST(PieriTest, Errors) {
  EXPECT_THROW(pieri_classical(GL({0, 0}), 3, {1, 1}), InvalidArgument);
  EXPECT_THROW(pieri_classical(GL({0, 0}), -1, {1, 1}), InvalidArgument);
  EXPECT_THROW(pieri_classical(GL({0, 0, 0}), 1, {1, 1}), InvalidArgument);
  EXPECT_THROW(pieri_level(GL({2, 0}), 1, {1, 1}), InvalidArgument);
}

TEST(PieriTest, DimensionConservation) {
  for (int n = 1; n <= 3; ++n) {
    const LevelContext ctx(n, 1);
    for (const auto& t : oracle::signatures_up_to(2 * n, 6)) {
      const GL f(t);
      for (int k = 0; k <= 2 * n; ++k) {
        std::int64_t total = 0;
        for (const auto& [g, m] : pieri_classical(f, k, ctx)) {
          EXPECT_EQ(m, 1);
          total += m * weyl_dim(g);
        }
        EXPECT_EQ(total, oracle::binomial(2 * n, k) * weyl_dim(f)) << f.str() << " k=" << k;
      }
    }
  }
}

TEST(SundaramTest, ClassicalExamples) {
  const LevelContext ctx(2, 4);
  EXPECT_EQ(sundaram_classical(Sp({1, 0}), 1, ctx),
            combo<Sp>({{Sp({2, 0}), 1}, {Sp({1, 1}), 1}, {Sp({0, 0}), 1}}));
  EXPECT_EQ(sundaram_classical(Sp({1, 0}), 2, ctx),
            combo<Sp>({{Sp({2, 1}), 1}, {Sp({1, 0}), 2}}));
  EXPECT_EQ(sundaram_classical(Sp({2, 1}), 0, ctx), combo<Sp>({{Sp({2, 1}), 1}}));
}

TEST(SundaramTest, DimensionConservationAndWitnessCounts) {
  for (int n = 1; n <= 3; ++n) {
    const LevelContext ctx(n, 1);
    for (const auto& t : oracle::signatures_up_to(n, 6)) {
      const Sp h(t);
      for (int k = 0; k <= 2 * n; ++k) {
        const auto result = sundaram_classical(h, k, ctx);
        std::int64_t total = 0;
        for (const auto& [g, m] : result) total += m * weyl_dim(g);
        EXPECT_EQ(total, oracle::binomial(2 * n, k) * weyl_dim(h)) << h.str() << " k=" << k;

        const auto witnesses = oracle::sundaram_witnesses(t, k);
        EXPECT_EQ(result.size(), witnesses.size());
        for (const auto& [g, m] : witnesses) EXPECT_EQ(result.coefficient(Sp(g)), m);
      }
    }
  }
}

TEST(SundaramTest, LevelExamples) {
  EXPECT_EQ(sundaram_level(Sp({1}), 1, {1, 1}), combo<Sp>({{Sp({0}), 1}}));
  EXPECT_EQ(sundaram_level(Sp({1, 0}), 2, {2, 1}), combo<Sp>({{Sp({1, 0}), 1}}));
  EXPECT_EQ(sundaram_level(Sp({0, 0}), 1, {2, 1}), combo<Sp>({{Sp({1, 0}), 1}}));
}

TEST(SundaramTest, Errors) {
  EXPECT_THROW(sundaram_classical(Sp({0, 0}), 5, {2, 1}), InvalidArgument);
  EXPECT_THROW(sundaram_level(Sp({1, 1}), 1, {2, 1}), InvalidArgument);
  EXPECT_THROW(sundaram_level(Sp({1}), 1, {2, 1}), InvalidArgument);
}

TEST(TruncationTest, PermissibleOutputsBoundedByClassical) {
  std::vector<std::string> warnings;
  auto previous = set_warning_sink([&](std::string_view m) { warnings.emplace_back(m); });
  for (int n = 1; n <= 3; ++n) {
    for (int level = 1; level <= 4; ++level) {
      const LevelContext ctx(n, level);
      for (int k = 0; k <= 2 * n; ++k) {
        for (const auto& f : enumerate_untwisted_basis(ctx)) {
          const auto classical = pieri_classical(f, k, ctx);
          for (const auto& [g, m] : pieri_level(f, k, ctx)) {
            EXPECT_TRUE(is_permissible(g, level));
            EXPECT_EQ(m, classical.coefficient(g));
          }
        }
        for (const auto& h : enumerate_twisted_basis(ctx)) {
          const auto classical = sundaram_classical(h, k, ctx);
          const auto level_result = sundaram_level(h, k, ctx);
          EXPECT_TRUE(level_result.all_nonnegative());
          for (const auto& [g, m] : level_result) {
            EXPECT_TRUE(is_permissible(g, level));
            EXPECT_LE(m, classical.coefficient(g));
          }
        }
      }
    }
  }
  set_warning_sink(std::move(previous));
  EXPECT_TRUE(warnings.empty());
}

}  // namespace
}  // namespace twistfuse

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "twistfuse/fusion.hpp"
#include "twistfuse/verify.hpp"

namespace twistfuse {
namespace {

using GL = GLSignature;
using Sp = SpSignature;

std::vector<LevelContext> grid() {
  std::vector<LevelContext> out;
  for (int n = 1; n <= 3; ++n)
    for (int level = 1; level <= (n == 3 ? 3 : 4); ++level) out.emplace_back(n, level);
  return out;
}

IntMatrix from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()),
              static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (auto v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

template <class Label>
FormalCombination<Label> combo(std::initializer_list<std::pair<Label, std::int64_t>> terms) {
  FormalCombination<Label> out;
  for (const auto& [label, m] : terms) out.add(label, m);
  return out;
}

TEST(FundamentalUntwistedTest, Examples) {
  EXPECT_EQ(fundamental_matrix_untwisted(1, {1, 1}).entries, from_rows({{0, 1}, {1, 0}}));
  EXPECT_EQ(fundamental_matrix_untwisted(0, {2, 2}).entries, IntMatrix::Identity(10, 10));
  // Simple current at level 1: (0) -> (1) -> (1,1) -> (1,1,1) -> (0).
  EXPECT_EQ(fundamental_matrix_untwisted(1, {2, 1}).entries,
            from_rows({{0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}));
  EXPECT_THROW(fundamental_matrix_untwisted(5, {2, 1}), InvalidArgument);
}

TEST(GeneralFusionTest, Examples) {
  const LevelContext ctx(1, 2);
  EXPECT_EQ(general_fusion_untwisted(GL({0, 0}), GL({1, 0}), ctx), combo<GL>({{GL({1, 0}), 1}}));
  EXPECT_EQ(general_fusion_untwisted(GL({1, 0}), GL({1, 0}), ctx),
            combo<GL>({{GL({0, 0}), 1}, {GL({2, 0}), 1}}));
  EXPECT_EQ(general_fusion_untwisted(GL({2, 0}), GL({2, 0}), ctx), combo<GL>({{GL({0, 0}), 1}}));
}

TEST(GeneralFusionTest, MatchesSU2ClosedForm) {
  for (int level = 1; level <= 4; ++level) {
    const FusionModel model({1, level});
    for (int a = 0; a <= level; ++a) {
      for (int b = 0; b <= level; ++b) {
        FormalCombination<GL> expected;
        for (const auto& [c, m] : oracle::su2_fusion(a, b, level)) expected.add(GL({c, 0}), m);
        EXPECT_EQ(model.fuse_untwisted(GL({a, 0}), GL({b, 0})), expected)
            << a << " x " << b << " level " << level;
      }
    }
  }
}

TEST(GeneralFusionTest, AcceptsUnnormalizedInputAndRejectsNonPermissible) {
  const FusionModel model({1, 2});
  EXPECT_EQ(model.fuse_untwisted(GL({3, 2}), GL({1, 0})),
            combo<GL>({{GL({0, 0}), 1}, {GL({2, 0}), 1}}));
  EXPECT_THROW(model.fuse_untwisted(GL({3, 0}), GL({1, 0})), InvalidArgument);
  EXPECT_THROW(model.fuse_untwisted(GL({1, 0, 0}), GL({1, 0})), InvalidArgument);
}

TEST(ModuleRouteATest, Examples) {
  EXPECT_EQ(module_matrix_route_a(1, {1, 1}).entries, from_rows({{0, 1}, {1, 0}}));
  EXPECT_EQ(module_matrix_route_a(2, {2, 1}).entries, IntMatrix::Identity(2, 2));
  EXPECT_EQ(module_matrix_route_a(0, {2, 2}).entries, IntMatrix::Identity(4, 4));
}

TEST(ModuleRouteBTest, Examples) {
  const auto b = module_matrix_route_b(GL({1, 0}), {1, 1});
  EXPECT_EQ(b.entries, from_rows({{0, 1}, {1, 0}}));
  EXPECT_LT(b.rounding_residual, kRoundingTolerance);
  EXPECT_EQ(module_matrix_route_b(GL({1, 1, 0, 0}), {2, 1}).entries, IntMatrix::Identity(2, 2));
  EXPECT_EQ(module_matrix_route_b(GL({0, 0, 0, 0, 0, 0}), {3, 2}).entries,
            IntMatrix::Identity(5, 5));
}

TEST(ModuleRouteBTest, RankOneModuleIsSU2Fusion) {
  // tau is inner on SU(2), so the twisted module is the regular one.
  for (int level = 1; level <= 4; ++level) {
    const FusionModel model({1, level});
    for (int a = 0; a <= level; ++a) {
      for (int b = 0; b <= level; ++b) {
        FormalCombination<Sp> expected;
        for (const auto& [c, m] : oracle::su2_fusion(a, b, level)) expected.add(Sp({c}), m);
        EXPECT_EQ(model.fuse_module(GL({a, 0}), Sp({b})), expected);
      }
    }
  }
}

TEST(FuseModuleTest, Examples) {
  EXPECT_EQ(fuse_module(GL({1, 0, 0, 0}), Sp({1, 0}), {2, 1}), combo<Sp>({{Sp({0, 0}), 1}}));
  EXPECT_EQ(fuse_module(GL({0, 0, 0, 0}), Sp({1, 0}), {2, 1}), combo<Sp>({{Sp({1, 0}), 1}}));
  EXPECT_EQ(fuse_module(GL({1, 0}), Sp({1}), {1, 2}),
            combo<Sp>({{Sp({0}), 1}, {Sp({2}), 1}}));
  EXPECT_THROW(fuse_module(GL({1, 0, 0, 0}), Sp({1, 1}), {2, 1}), InvalidArgument);
}

TEST(RouteAgreementTest, WholeGrid) {
  for (const auto& ctx : grid()) {
    const FusionModel model(ctx);
    for (int k = 1; k < ctx.rank(); ++k) {
      const auto a = model.module_route_a(k);
      const auto b = model.module_route_b(exterior_power(k, ctx));
      EXPECT_EQ(a.entries, b.entries) << "N=" << ctx.n() << " level=" << ctx.level() << " k=" << k;
      EXPECT_LT(b.rounding_residual, kRoundingTolerance);
    }
  }
}

TEST(FusionMatrixTest, PairwiseCommute) {
  for (const auto& ctx : grid()) {
    const FusionModel model(ctx);
    std::vector<IntMatrix> untwisted, module;
    for (int k = 0; k <= ctx.rank(); ++k) untwisted.push_back(model.fundamental_untwisted(k).entries);
    for (const auto& f : model.untwisted_basis()) module.push_back(model.module_route_b(f).entries);
    for (const auto& x : untwisted)
      for (const auto& y : untwisted) EXPECT_EQ(x * y, y * x);
    for (const auto& x : module)
      for (const auto& y : module) EXPECT_EQ(x * y, y * x);
  }
}

TEST(K0SquareTest, Examples) {
  const auto a = k0_square({1, 2});
  EXPECT_EQ(a.decomposition, combo<GL>({{GL({0, 0}), 1}}));
  EXPECT_NEAR(a.c_squared, 1.0, 1e-9);
  EXPECT_NEAR(a.paired_sum, 1.0, 1e-9);

  const auto b = k0_square({2, 1});
  EXPECT_EQ(b.decomposition, combo<GL>({{GL({0, 0, 0, 0}), 1}, {GL({1, 1, 0, 0}), 1}}));
  EXPECT_NEAR(b.c_squared, 2.0, 1e-9);
  EXPECT_NEAR(b.paired_sum, 2.0, 1e-9);

  const auto c = k0_square({2, 2});
  EXPECT_EQ(c.decomposition,
            combo<GL>({{GL({0, 0, 0, 0}), 1}, {GL({1, 1, 0, 0}), 1}, {GL({2, 2, 0, 0}), 1}}));
  EXPECT_TRUE(c.consistent());
}

TEST(VerifySuiteTest, Examples) {
  for (const LevelContext ctx : {LevelContext(1, 1), LevelContext(2, 1), LevelContext(1, 4)}) {
    const auto report = verify_suite(ctx);
    for (const auto& check : report.checks)
      EXPECT_TRUE(check.passed) << check.name << ": " << check.detail;
    EXPECT_EQ(report.checks.size(), 10u);
  }
}

TEST(VerifySuiteTest, ReportsCheckThresholds) {
  const auto report = verify_suite(LevelContext(2, 2));
  ASSERT_NE(report.find("route_agreement"), nullptr);
  EXPECT_EQ(report.find("route_agreement")->threshold, 1e-6);
  EXPECT_EQ(report.find("perron_frobenius_module")->threshold, 1e-9);
  EXPECT_EQ(report.find("psi_condition")->threshold, 1e8);
  EXPECT_EQ(report.find("nonexistent"), nullptr);
}

}  // namespace
}  // namespace twistfuse

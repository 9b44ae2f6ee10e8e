#pragma once

#include <string>
#include <vector>

#include "twistfuse/fusion.hpp"

namespace twistfuse {

enum class Comparison { Below, Above, Equal };

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double threshold = 0.0;
  Comparison comparison = Comparison::Below;
  std::string detail;
};

struct VerifyReport {
  int n = 0;
  int level = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
};

/// Runs every consistency check for one (N, l):
///   route_agreement            route A == route B for every fundamental
///   perron_frobenius_untwisted N_f d = d(H_f) d on the untwisted basis
///   perron_frobenius_module    M_f d = d(H_f) d on the twisted basis
///   boundary_vanishing         psi_h(D(g)) = 0 on the wall h_1 + h_2 = l + 1
///   character_reality          characters are real at every D(g)
///   psi_basis                  |det Psi| > 1e-9 and |S| equals the basis size
///   psi_condition              cond(Psi) < 1e8
///   ring_action                M_f M_g = sum_e c_fg^e M_e over the integers
///   k0_square_consistency      |C^2 - sum over paired f of chi_f(D(0))| < 1e-6
///   untwisted_ring             commutativity and associativity of N_f
/// Failures are recorded in the report, never thrown.
VerifyReport verify_suite(const LevelContext& ctx);
VerifyReport verify_suite(const FusionModel& model);

}  // namespace twistfuse

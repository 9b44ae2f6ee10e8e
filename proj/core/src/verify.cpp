#include "twistfuse/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace twistfuse {
namespace {

constexpr double kPerronFrobeniusTolerance = 1e-9;
constexpr double kConditionCeiling = 1e8;

CheckResult below(std::string name, double measured, double threshold,
                  std::string detail = {}) {
  return {std::move(name), measured < threshold, measured, threshold,
          Comparison::Below, std::move(detail)};
}

CheckResult exact(std::string name, double discrepancy, std::string detail = {}) {
  return {std::move(name), discrepancy == 0.0, discrepancy, 0.0, Comparison::Equal,
          std::move(detail)};
}

// Runs `body`; any exception becomes a failed check carrying its message.
CheckResult guarded(const std::string& name, const std::function<CheckResult()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    CheckResult failed;
    failed.name = name;
    failed.measured = std::numeric_limits<double>::infinity();
    failed.detail = e.what();
    return failed;
  }
}

double relative_eigen_error(const IntMatrix& m, const Eigen::VectorXd& d, double eigenvalue) {
  const Eigen::VectorXd lhs = m.cast<double>() * d;
  return (lhs - eigenvalue * d).lpNorm<Eigen::Infinity>() / d.lpNorm<Eigen::Infinity>();
}

Eigen::VectorXd as_vector(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerifyReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

VerifyReport verify_suite(const LevelContext& ctx) {
  return verify_suite(FusionModel(ctx));
}

VerifyReport verify_suite(const FusionModel& model) {
  const LevelContext& ctx = model.context();
  VerifyReport report{ctx.n(), ctx.level(), {}};
  const auto& ubasis = model.untwisted_basis();
  const auto& tbasis = model.twisted_basis();
  const auto& dims = model.quantum_dimensions();

  std::vector<FusionMatrix> route_b;
  std::string route_b_error;
  try {
    for (const auto& f : ubasis) route_b.push_back(model.module_route_b(f));
  } catch (const std::exception& e) {
    route_b.clear();
    route_b_error = e.what();
  }
  auto require_route_b = [&] {
    if (route_b.empty()) throw RouteFailure(route_b_error);
  };

  report.checks.push_back(guarded("route_agreement", [&] {
    double residual = 0.0;
    int mismatched = 0;
    std::ostringstream detail;
    for (int k = 1; k < ctx.rank(); ++k) {
      const auto a = model.module_route_a(k);
      const auto b = model.module_route_b(exterior_power(k, ctx));
      residual = std::max(residual, b.rounding_residual);
      if (a.entries != b.entries) {
        ++mismatched;
        detail << "k=" << k << " differs; ";
      }
    }
    detail << "fundamentals compared: " << ctx.rank() - 1;
    CheckResult r = below("route_agreement", residual, kRoundingTolerance, detail.str());
    r.passed = r.passed && mismatched == 0;
    return r;
  }));

  report.checks.push_back(guarded("perron_frobenius_untwisted", [&] {
    const Eigen::VectorXd d = as_vector(dims.untwisted);
    double worst = 0.0;
    for (std::size_t i = 0; i < ubasis.size(); ++i)
      worst = std::max(worst, relative_eigen_error(model.untwisted_matrix(ubasis[i]).entries,
                                                   d, dims.untwisted[i]));
    return below("perron_frobenius_untwisted", worst, kPerronFrobeniusTolerance);
  }));

  report.checks.push_back(guarded("perron_frobenius_module", [&] {
    require_route_b();
    const Eigen::VectorXd d = as_vector(dims.twisted);
    double worst = 0.0;
    for (std::size_t i = 0; i < ubasis.size(); ++i)
      worst = std::max(worst, relative_eigen_error(route_b[i].entries, d, dims.untwisted[i]));
    return below("perron_frobenius_module", worst, kPerronFrobeniusTolerance);
  }));

  report.checks.push_back(guarded("boundary_vanishing", [&] {
    const auto wall = enumerate_boundary(ctx);
    double worst = 0.0;
    for (const auto& h : wall)
      for (const auto& pt : model.points())
        worst = std::max(worst, std::abs(psi_sp(h, pt).value));
    return below("boundary_vanishing", worst, kCharTolerance,
                 std::to_string(wall.size()) + " wall signatures");
  }));

  report.checks.push_back(guarded("character_reality", [&] {
    double worst = model.max_imaginary_part();
    for (const auto& f : ubasis)
      for (const auto& pt : model.points())
        worst = std::max(worst, std::abs(chi_gl(f, pt).value.imag()));
    return below("character_reality", worst, kCharTolerance);
  }));

  report.checks.push_back(guarded("psi_basis", [&] {
    const double det = std::abs(model.psi_determinant());
    CheckResult r{"psi_basis", det > kBasisDeterminantFloor, det, kBasisDeterminantFloor,
                  Comparison::Above,
                  "|S|=" + std::to_string(model.eval_set().size()) +
                      " permissible h=" + std::to_string(tbasis.size())};
    r.passed = r.passed && model.eval_set().size() == tbasis.size();
    return r;
  }));

  report.checks.push_back(
      below("psi_condition", model.psi_condition_number(), kConditionCeiling));

  report.checks.push_back(guarded("ring_action", [&] {
    require_route_b();
    std::int64_t worst = 0;
    for (std::size_t i = 0; i < ubasis.size(); ++i) {
      const IntMatrix& coeffs = model.untwisted_matrix(ubasis[i]).entries;
      for (std::size_t j = 0; j < ubasis.size(); ++j) {
        const IntMatrix lhs = route_b[i].entries * route_b[j].entries;
        IntMatrix rhs = IntMatrix::Zero(lhs.rows(), lhs.cols());
        for (std::size_t e = 0; e < ubasis.size(); ++e) {
          const std::int64_t c = coeffs(static_cast<Eigen::Index>(e), static_cast<Eigen::Index>(j));
          if (c != 0) rhs += c * route_b[e].entries;
        }
        worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
      }
    }
    return exact("ring_action", static_cast<double>(worst),
                 std::to_string(ubasis.size() * ubasis.size()) + " pairs");
  }));

  report.checks.push_back(guarded("k0_square_consistency", [&] {
    const K0Square k0 = model.k0_square();
    std::ostringstream detail;
    detail.precision(12);
    detail << "C^2=" << k0.c_squared << " paired_sum=" << k0.paired_sum;
    return below("k0_square_consistency", k0.abs_diff(), kRoundingTolerance, detail.str());
  }));

  report.checks.push_back(guarded("untwisted_ring", [&] {
    std::vector<IntMatrix> n;
    for (const auto& f : ubasis) n.push_back(model.untwisted_matrix(f).entries);
    std::int64_t worst = 0;
    for (std::size_t i = 0; i < n.size(); ++i) {
      for (std::size_t j = i; j < n.size(); ++j) {
        const IntMatrix product = n[i] * n[j];
        worst = std::max(worst, (product - n[j] * n[i]).cwiseAbs().maxCoeff());
        // (f g) h against f (g h) for every h at once.
        IntMatrix regrouped = IntMatrix::Zero(product.rows(), product.cols());
        for (std::size_t e = 0; e < n.size(); ++e) {
          const std::int64_t c = n[i](static_cast<Eigen::Index>(e), static_cast<Eigen::Index>(j));
          if (c != 0) regrouped += c * n[e];
        }
        worst = std::max(worst, (product - regrouped).cwiseAbs().maxCoeff());
        // c_fg^e = c_gf^e
        worst = std::max(worst, (n[i].col(static_cast<Eigen::Index>(j)) -
                                 n[j].col(static_cast<Eigen::Index>(i))).cwiseAbs().maxCoeff());
      }
    }
    return exact("untwisted_ring", static_cast<double>(worst),
                 "commutativity and associativity over all triples");
  }));

  return report;
}

}  // namespace twistfuse

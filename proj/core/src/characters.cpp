#include "twistfuse/characters.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

namespace twistfuse {
namespace {

using ComplexMatrix = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic>;
using boost::multiprecision::cpp_int;

constexpr double kDenominatorFloor = 1e-12;

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

CharValue quotient(const ComplexMatrix& numerator, std::complex<double> denominator,
                   const char* what) {
  if (std::abs(denominator) < kDenominatorFloor)
    throw InternalError(std::string(what) +
                        ": Weyl denominator vanishes at evaluation point");
  return CharValue{numerator.partialPivLu().determinant() / denominator};
}

std::int64_t to_int64(const cpp_int& num, const cpp_int& den) {
  if (num % den != 0) throw InternalError("Weyl dimension is not an integer");
  return static_cast<std::int64_t>(num / den);
}

}  // namespace

EvalPoint::EvalPoint(const HalfIntVector& g, const LevelContext& ctx)
    : origin_(g), kappa_(ctx.kappa()) {
  const int n = ctx.n();
  if (g.size() != static_cast<std::size_t>(n))
    throw InvalidArgument("evaluation vector has " + std::to_string(g.size()) +
                          " parts, expected N=" + std::to_string(n));
  if (g.doubled()[0] > ctx.level())
    throw InvalidArgument("evaluation vector (" + g.str() +
                          ") violates g_1 <= level/2");
  // 2 (g_i + N + 1/2 - i) with i counted from 1.
  for (int i = 0; i < n; ++i)
    numerators_.push_back(g.doubled()[i] + 2 * n + 1 - 2 * (i + 1));

  for (std::size_t i = 0; i < size(); ++i) {
    const Rational x = angle(i);
    const bool ordered = (i + 1 == size()) ? x > 0 : x > angle(i + 1);
    if (!ordered || x >= Rational(1, 2))
      throw InternalError("evaluation angles of D(" + g.str() +
                          ") are not strictly ordered inside (0, 1/2)");
  }
}

Rational EvalPoint::angle(std::size_t i) const {
  return Rational(numerators_.at(i), 2 * kappa_);
}

std::complex<double> EvalPoint::zeta_power(std::size_t i, std::int64_t e) const {
  const std::int64_t period = 2 * static_cast<std::int64_t>(kappa_);
  const std::int64_t r = floor_mod(floor_mod(e, period) * numerators_.at(i), period);
  return std::polar(1.0, std::numbers::pi * static_cast<double>(r) / kappa_);
}

std::vector<std::complex<double>> EvalPoint::eigenvalues() const {
  const std::size_t n = size();
  std::vector<std::complex<double>> z(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    z[i] = zeta_power(i, 1);
    z[2 * n - 1 - i] = zeta_power(i, -1);
  }
  return z;
}

EvalPoint eval_point(const HalfIntVector& g, const LevelContext& ctx) {
  return EvalPoint(g, ctx);
}

EvalPoint origin_point(const LevelContext& ctx) {
  return EvalPoint(HalfIntVector(std::vector<int>(ctx.n(), 0)), ctx);
}

CharValue chi_gl(const GLSignature& f, const EvalPoint& pt) {
  const std::size_t n = pt.size();
  const std::size_t m = 2 * n;
  if (f.size() != m)
    throw InvalidArgument("SU(2N) signature (" + f.str() + ") has " +
                          std::to_string(f.size()) + " parts, expected " +
                          std::to_string(m));

  // Column j < N is zeta_j; column j >= N is zeta_{2N-1-j}^{-1}.
  auto entry = [&](std::size_t j, std::int64_t e) {
    return j < n ? pt.zeta_power(j, e) : pt.zeta_power(m - 1 - j, -e);
  };
  ComplexMatrix numerator(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::int64_t e = f[i] + static_cast<std::int64_t>(m - 1 - i);
    for (std::size_t j = 0; j < m; ++j) numerator(i, j) = entry(j, e);
  }
  const auto z = pt.eigenvalues();
  std::complex<double> denominator = 1.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) denominator *= z[i] - z[j];
  return quotient(numerator, denominator, "chi");
}

CharValue psi_sp(const SpSignature& h, const EvalPoint& pt) {
  const std::size_t n = pt.size();
  if (h.size() != n)
    throw InvalidArgument("Sp(N) signature (" + h.str() + ") has " +
                          std::to_string(h.size()) + " parts, expected " +
                          std::to_string(n));
  ComplexMatrix numerator(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t a = h[i] + static_cast<std::int64_t>(n - i);
    for (std::size_t j = 0; j < n; ++j)
      numerator(i, j) = pt.zeta_power(j, a) - pt.zeta_power(j, -a);
  }
  std::complex<double> denominator = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto zi = pt.zeta_power(i, 1);
    const auto zi_inv = pt.zeta_power(i, -1);
    denominator *= zi - zi_inv;
    for (std::size_t j = i + 1; j < n; ++j)
      denominator *= zi + zi_inv - pt.zeta_power(j, 1) - pt.zeta_power(j, -1);
  }
  return quotient(numerator, denominator, "psi");
}

std::int64_t weyl_dim(const GLSignature& f) {
  const std::size_t n = f.size();
  cpp_int num = 1, den = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      num *= f[i] - f[j] + static_cast<int>(j - i);
      den *= static_cast<int>(j - i);
    }
  }
  return to_int64(num, den);
}

std::int64_t weyl_dim(const SpSignature& h) {
  const int n = static_cast<int>(h.size());
  cpp_int num = 1, den = 1;
  for (int i = 0; i < n; ++i) {
    const int a = h[i] + n - i;
    const int rho = n - i;
    num *= a;
    den *= rho;
    for (int j = i + 1; j < n; ++j) {
      const int b = h[j] + n - j;
      const int sigma = n - j;
      num *= (a - b) * (a + b);
      den *= (rho - sigma) * (rho + sigma);
    }
  }
  return to_int64(num, den);
}

QuantumDimensions quantum_dims(const LevelContext& ctx) {
  QuantumDimensions out;
  const EvalPoint origin = origin_point(ctx);
  out.untwisted_basis = enumerate_untwisted_basis(ctx);
  out.twisted_basis = enumerate_twisted_basis(ctx);

  double untwisted_sq = 0.0;
  for (const auto& f : out.untwisted_basis) {
    const double d = chi_gl(f, origin).real();
    if (!(d > 0.0))
      throw InternalError("chi_" + f.str() + "(D(0)) is not positive");
    out.untwisted.push_back(d);
    untwisted_sq += d * d;
  }
  double twisted_sq = 0.0;
  std::vector<double> psi0;
  for (const auto& h : out.twisted_basis) {
    const double v = psi_sp(h, origin).real();
    if (!(v > 0.0))
      throw InternalError("psi_" + h.str() + "(D(0)) is not positive");
    psi0.push_back(v);
    twisted_sq += v * v;
  }
  out.c = std::sqrt(untwisted_sq / twisted_sq);
  for (double v : psi0) out.twisted.push_back(out.c * v);
  return out;
}

ClosedFormReport closed_form_diagnostics(const LevelContext& ctx) {
  const int n = ctx.n();
  const double kappa = ctx.kappa();
  const double pi = std::numbers::pi;
  auto s = [&](double x) { return std::sin(x * pi / kappa); };

  ClosedFormReport report{n, ctx.level(), {}};
  const EvalPoint origin = origin_point(ctx);

  double chi_sq = 0.0;
  for (const auto& f : enumerate_untwisted_basis(ctx)) {
    const double v = chi_gl(f, origin).real();
    chi_sq += v * v;
  }
  double psi_sq = 0.0;
  for (const auto& h : enumerate_twisted_basis(ctx)) {
    const double v = psi_sp(h, origin).real();
    psi_sq += v * v;
  }
  const double c = std::sqrt(chi_sq / psi_sq);

  // (2N)^{-1/2} kappa^{-N+1/2} 2^{N(2N-1)} prod_{1<=i<j<=2N-1} sin((j-i)pi/kappa)
  double untwisted = std::pow(2.0 * n, -0.5) * std::pow(kappa, -n + 0.5) *
                     std::pow(2.0, n * (2 * n - 1));
  for (int i = 1; i <= 2 * n - 1; ++i)
    for (int j = i + 1; j <= 2 * n - 1; ++j) untwisted *= s(j - i);

  // kappa^{-N/2} 2^{N^2} prod_{half-integers 0<i<N} sin(2 i pi/kappa)
  //   prod_{half-integers 0<i<j<N} sin((i+j)pi/kappa) sin((j-i)pi/kappa)
  std::vector<double> halves;
  for (int t = 0; t + 0.5 < n; ++t) halves.push_back(t + 0.5);
  double twisted = std::pow(kappa, -n / 2.0) * std::pow(2.0, n * n);
  for (double i : halves) twisted *= s(2 * i);
  for (std::size_t a = 0; a < halves.size(); ++a)
    for (std::size_t b = a + 1; b < halves.size(); ++b)
      twisted *= s(halves[a] + halves[b]) * s(halves[b] - halves[a]);

  // (2N)^{1/2} kappa^{(N-1)/2} 2^{-N(N-1)}
  //   prod_{1<=2k+1<2N} sin^{k+1}((2k+1)pi/kappa) prod_{k=1}^{N-1} sin^{N-k}(k pi/kappa)
  //   / prod_{k=1}^{2N-2} sin^{2N-k-1}(k pi/kappa)
  double c_inverse = std::sqrt(2.0 * n) * std::pow(kappa, (n - 1) / 2.0) *
                     std::pow(2.0, -n * (n - 1));
  for (int k = 0; 2 * k + 1 < 2 * n; ++k) c_inverse *= std::pow(s(2 * k + 1), k + 1);
  for (int k = 1; k <= n - 1; ++k) c_inverse *= std::pow(s(k), n - k);
  for (int k = 1; k <= 2 * n - 2; ++k) c_inverse /= std::pow(s(k), 2 * n - k - 1);

  double paired_sum = 0.0;
  for (const auto& f : enumerate_paired(ctx)) paired_sum += chi_gl(f, origin).real();

  report.pairs.push_back({"untwisted_inverse_sqrt_sum", 1.0 / std::sqrt(chi_sq), untwisted});
  report.pairs.push_back({"twisted_inverse_sqrt_sum", 1.0 / std::sqrt(psi_sq), twisted});
  report.pairs.push_back({"c_inverse", 1.0 / c, c_inverse});
  report.pairs.push_back({"k0_square_c_squared_vs_paired_sum", c * c, paired_sum});
  return report;
}

}  // namespace twistfuse

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "twistfuse/signature.hpp"

namespace twistfuse {

using Rational = boost::rational<std::int64_t>;

/// Absolute tolerance for reality and vanishing assertions.
inline constexpr double kCharTolerance = 1e-9;

/// The diagonal element D(g) of Sp(N) with eigenvalues zeta_i^{+-1},
/// zeta_i = exp(2 pi i x_i), x_i = (g_i + N + 1/2 - i) / kappa. Angles are
/// exact rationals (in turns); complex values are produced on demand from
/// the reduced angle.
class EvalPoint {
 public:
  EvalPoint(const HalfIntVector& g, const LevelContext& ctx);

  const HalfIntVector& origin() const noexcept { return origin_; }
  int kappa() const noexcept { return kappa_; }
  std::size_t size() const noexcept { return numerators_.size(); }

  /// x_i in turns, 0 < x_N < ... < x_1 < 1/2.
  Rational angle(std::size_t i) const;

  /// zeta_i^e, computed from (e * x_i) mod 1.
  std::complex<double> zeta_power(std::size_t i, std::int64_t e) const;

  /// The 2N eigenvalues zeta_1, ..., zeta_N, zeta_N^{-1}, ..., zeta_1^{-1}.
  std::vector<std::complex<double>> eigenvalues() const;

 private:
  HalfIntVector origin_;
  int kappa_ = 0;
  // x_i = numerators_[i] / (2 kappa)
  std::vector<std::int64_t> numerators_;
};

EvalPoint eval_point(const HalfIntVector& g, const LevelContext& ctx);

/// The origin point D(0); the group element whose traces give quantum
/// dimensions.
EvalPoint origin_point(const LevelContext& ctx);

struct CharValue {
  std::complex<double> value;
  double tol = kCharTolerance;

  double real() const noexcept { return value.real(); }
  bool is_real() const noexcept { return std::abs(value.imag()) < tol; }
};

/// SU(2N) character det(z_j^{f_i + 2N - i}) / prod_{i<j}(z_i - z_j) at D(g).
CharValue chi_gl(const GLSignature& f, const EvalPoint& pt);

/// Sp(N) character
///   det(zeta_j^{a_i} - zeta_j^{-a_i}) /
///   [prod(zeta_i - zeta_i^{-1}) prod_{i<j}(zeta_i + zeta_i^{-1} - zeta_j - zeta_j^{-1})]
/// with a_i = h_i + N - i + 1.
CharValue psi_sp(const SpSignature& h, const EvalPoint& pt);

/// Classical Weyl dimension of V_f for SU(n), n = f.size().
std::int64_t weyl_dim(const GLSignature& f);

/// Classical Weyl dimension of W_h for Sp(N), N = h.size().
std::int64_t weyl_dim(const SpSignature& h);

struct QuantumDimensions {
  std::vector<GLSignature> untwisted_basis;
  std::vector<double> untwisted;  // d(H_f) = chi_f(D(0))
  std::vector<SpSignature> twisted_basis;
  std::vector<double> twisted;    // d(K_h) = C psi_h(D(0))
  double c = 0.0;
};

/// Quantum dimensions of both bases and the normalizing constant
/// C = sqrt(sum_f d(H_f)^2 / sum_h psi_h(D(0))^2). Throws InternalError if any
/// evaluation at D(0) is not strictly positive.
QuantumDimensions quantum_dims(const LevelContext& ctx);

struct DiagnosticPair {
  std::string name;
  double direct = 0.0;
  double closed_form = 0.0;

  double abs_diff() const noexcept { return std::abs(direct - closed_form); }
};

struct ClosedFormReport {
  int n = 0;
  int level = 0;
  std::vector<DiagnosticPair> pairs;
};

/// Direct sums against the printed Kac-Peterson products (evaluated
/// literally, empty products equal to 1), plus the K_0 boxtimes K_0 cross-check
/// C^2 against the sum of chi_f(D(0)) over paired f. Nothing is asserted.
ClosedFormReport closed_form_diagnostics(const LevelContext& ctx);

}  // namespace twistfuse

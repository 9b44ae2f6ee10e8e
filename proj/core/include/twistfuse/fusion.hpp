#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "twistfuse/characters.hpp"
#include "twistfuse/formal_combination.hpp"
#include "twistfuse/signature.hpp"

namespace twistfuse {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Rounding threshold for the evaluation route.
inline constexpr double kRoundingTolerance = 1e-6;
/// |det Psi| below this means the twisted characters fail to span.
inline constexpr double kBasisDeterminantFloor = 1e-9;

/// Structure-constant matrix of one acting label over a canonical basis.
/// Entry (g, h) is the multiplicity of basis label g in label (x) h, so
/// column h is the decomposition of the product with h.
struct FusionMatrix {
  std::string label;
  IntMatrix entries;
  // Largest |x - round(x)| seen when the matrix came from the evaluation route.
  double rounding_residual = 0.0;
};

struct K0Square {
  FormalCombination<GLSignature> decomposition;
  double c_squared = 0.0;
  double paired_sum = 0.0;

  double abs_diff() const noexcept { return std::abs(c_squared - paired_sum); }
  bool consistent(double tol = kRoundingTolerance) const noexcept {
    return abs_diff() < tol;
  }
};

/// Everything needed to compute level-l fusion for one (N, l): canonical
/// bases, the evaluation points D(g), the twisted character table
/// Psi[g, h] = psi_h(D(g)), and quantum dimensions. Construction enumerates
/// and evaluates; queries are const and safe to call concurrently
/// (Jacobi-Trudi matrices are memoized under a mutex).
class FusionModel {
 public:
  explicit FusionModel(const LevelContext& ctx);

  const LevelContext& context() const noexcept { return ctx_; }
  const std::vector<GLSignature>& untwisted_basis() const noexcept { return untwisted_; }
  const std::vector<SpSignature>& twisted_basis() const noexcept { return twisted_; }
  const std::vector<HalfIntVector>& eval_set() const noexcept { return eval_set_; }
  const std::vector<EvalPoint>& points() const noexcept { return points_; }
  const QuantumDimensions& quantum_dimensions() const noexcept { return dims_; }

  /// Throws InvalidArgument when the label is not a (normalized) basis element.
  std::size_t untwisted_index(const GLSignature& f) const;
  std::size_t twisted_index(const SpSignature& h) const;

  /// Normalizes f and checks length and level; the message names the
  /// violated constraint.
  GLSignature require_untwisted(const GLSignature& f) const;
  SpSignature require_twisted(const SpSignature& h) const;

  /// Rows indexed by eval_set(), columns by twisted_basis().
  const Eigen::MatrixXd& psi() const noexcept { return psi_; }
  double psi_determinant() const noexcept { return psi_det_; }
  double psi_condition_number() const noexcept { return psi_cond_; }
  /// Largest |Im| met while tabulating characters at the evaluation points.
  double max_imaginary_part() const noexcept { return max_imag_; }

  /// Matrix of pieri_level(., k) on the untwisted basis; identity for k = 0, 2N.
  FusionMatrix fundamental_untwisted(int k) const;

  /// N_f on the untwisted basis through the dual Jacobi-Trudi determinant
  /// chi_f = det(e_{f'_i - i + j}) evaluated on the fundamental matrices.
  FusionMatrix untwisted_matrix(const GLSignature& f) const;

  /// H_f boxtimes H_g.
  FormalCombination<GLSignature> fuse_untwisted(const GLSignature& f,
                                                const GLSignature& g) const;

  /// Matrix of sundaram_level(., k) on the twisted basis.
  FusionMatrix module_route_a(int k) const;

  /// Solves Psi M = Lambda_f Psi with Lambda_f = diag(chi_f(D(g))) and
  /// rounds. Throws RouteFailure if Psi is singular, the rounding residual
  /// exceeds kRoundingTolerance, or an entry is negative.
  FusionMatrix module_route_b(const GLSignature& f) const;

  /// H_f boxtimes K_h, column h of module_route_b(f).
  FormalCombination<SpSignature> fuse_module(const GLSignature& f,
                                             const SpSignature& h) const;

  /// K_0 boxtimes K_0 as the paired (Cartan-Helgason) signatures, with the
  /// quantum-dimension consistency record.
  K0Square k0_square() const;

 private:
  LevelContext ctx_;
  std::vector<GLSignature> untwisted_;
  std::vector<SpSignature> twisted_;
  std::vector<HalfIntVector> eval_set_;
  std::vector<EvalPoint> points_;
  QuantumDimensions dims_;
  Eigen::MatrixXd psi_;
  Eigen::PartialPivLU<Eigen::MatrixXd> psi_lu_;
  double psi_det_ = 0.0;
  double psi_cond_ = 0.0;
  double max_imag_ = 0.0;

  std::vector<IntMatrix> elementary_;  // fundamental_untwisted(k), k = 0..2N

  mutable std::mutex cache_mutex_;
  mutable std::map<GLSignature, std::shared_ptr<const IntMatrix>> jacobi_trudi_cache_;
};

// Single-shot forms; each builds a FusionModel for ctx.
FusionMatrix fundamental_matrix_untwisted(int k, const LevelContext& ctx);
FormalCombination<GLSignature> general_fusion_untwisted(const GLSignature& f,
                                                        const GLSignature& g,
                                                        const LevelContext& ctx);
FusionMatrix module_matrix_route_a(int k, const LevelContext& ctx);
FusionMatrix module_matrix_route_b(const GLSignature& f, const LevelContext& ctx);
FormalCombination<SpSignature> fuse_module(const GLSignature& f,
                                           const SpSignature& h,
                                           const LevelContext& ctx);
K0Square k0_square(const LevelContext& ctx);

/// The signature (1^k, 0^{2N-k}) of the k-th exterior power.
GLSignature exterior_power(int k, const LevelContext& ctx);

}  // namespace twistfuse

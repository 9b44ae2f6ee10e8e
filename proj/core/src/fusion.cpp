#include "twistfuse/fusion.hpp"

#include <bit>
#include <cmath>
#include <limits>

#include "twistfuse/branching.hpp"

namespace twistfuse {
namespace {

void check_degree(int k, const LevelContext& ctx) {
  if (k < 0 || k > ctx.rank())
    throw InvalidArgument("exterior power degree k=" + std::to_string(k) +
                          " outside [0, 2N=" + std::to_string(ctx.rank()) + "]");
}

template <class Label>
std::size_t index_of(const std::vector<Label>& basis, const Label& label,
                     const char* what) {
  auto it = std::lower_bound(basis.begin(), basis.end(), label);
  if (it == basis.end() || *it != label)
    throw InvalidArgument(std::string(what) + " (" + label.str() +
                          ") is not in the level-l basis");
  return static_cast<std::size_t>(it - basis.begin());
}

// Conjugate partition of a normalized signature: f'_j = #{i : f_i >= j}.
std::vector<int> conjugate(const GLSignature& f) {
  std::vector<int> cols(f[0], 0);
  for (int j = 1; j <= f[0]; ++j)
    for (int p : f.parts()) cols[j - 1] += p >= j ? 1 : 0;
  return cols;
}

}  // namespace

GLSignature exterior_power(int k, const LevelContext& ctx) {
  check_degree(k, ctx);
  std::vector<int> parts(ctx.rank(), 0);
  std::fill_n(parts.begin(), k, 1);
  return GLSignature(std::move(parts));
}

FusionModel::FusionModel(const LevelContext& ctx)
    : ctx_(ctx),
      untwisted_(enumerate_untwisted_basis(ctx)),
      twisted_(enumerate_twisted_basis(ctx)),
      eval_set_(enumerate_eval_set(ctx)),
      dims_(quantum_dims(ctx)) {
  for (const auto& g : eval_set_) points_.emplace_back(g, ctx);

  psi_.resize(static_cast<Eigen::Index>(points_.size()),
              static_cast<Eigen::Index>(twisted_.size()));
  for (std::size_t r = 0; r < points_.size(); ++r) {
    for (std::size_t c = 0; c < twisted_.size(); ++c) {
      const CharValue v = psi_sp(twisted_[c], points_[r]);
      max_imag_ = std::max(max_imag_, std::abs(v.value.imag()));
      psi_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v.real();
    }
  }
  if (psi_.rows() == psi_.cols()) {
    psi_lu_.compute(psi_);
    psi_det_ = psi_lu_.determinant();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(psi_);
    const auto& sv = svd.singularValues();
    psi_cond_ = sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1)
                                        : std::numeric_limits<double>::infinity();
  } else {
    psi_cond_ = std::numeric_limits<double>::infinity();
  }

  const auto size = static_cast<Eigen::Index>(untwisted_.size());
  for (int k = 0; k <= ctx_.rank(); ++k) {
    if (k == 0 || k == ctx_.rank()) {
      elementary_.push_back(IntMatrix::Identity(size, size));
      continue;
    }
    IntMatrix m = IntMatrix::Zero(size, size);
    for (Eigen::Index col = 0; col < size; ++col) {
      for (const auto& [g, mult] : pieri_level(untwisted_[col], k, ctx_))
        m(static_cast<Eigen::Index>(untwisted_index(g)), col) += mult;
    }
    elementary_.push_back(std::move(m));
  }
}

std::size_t FusionModel::untwisted_index(const GLSignature& f) const {
  return index_of(untwisted_, f, "SU(2N) signature");
}

std::size_t FusionModel::twisted_index(const SpSignature& h) const {
  return index_of(twisted_, h, "Sp(N) signature");
}

GLSignature FusionModel::require_untwisted(const GLSignature& f) const {
  if (f.size() != static_cast<std::size_t>(ctx_.rank()))
    throw InvalidArgument("signature (" + f.str() + ") has " +
                          std::to_string(f.size()) + " parts, expected 2N=" +
                          std::to_string(ctx_.rank()));
  if (!is_permissible(f, ctx_.level()))
    throw InvalidArgument("signature (" + f.str() + ") violates f_1 - f_2N <= " +
                          std::to_string(ctx_.level()));
  return normalize_gl(f);
}

SpSignature FusionModel::require_twisted(const SpSignature& h) const {
  if (h.size() != static_cast<std::size_t>(ctx_.n()))
    throw InvalidArgument("signature (" + h.str() + ") has " +
                          std::to_string(h.size()) + " parts, expected N=" +
                          std::to_string(ctx_.n()));
  if (!is_permissible(h, ctx_.level()))
    throw InvalidArgument("signature (" + h.str() + ") violates h_1 + h_2 <= " +
                          std::to_string(ctx_.level()));
  return h;
}

FusionMatrix FusionModel::fundamental_untwisted(int k) const {
  check_degree(k, ctx_);
  return {"Lambda^" + std::to_string(k), elementary_[k], 0.0};
}

FusionMatrix FusionModel::untwisted_matrix(const GLSignature& f_in) const {
  const GLSignature f = require_untwisted(f_in);
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = jacobi_trudi_cache_.find(f); it != jacobi_trudi_cache_.end())
      return {f.str(), *it->second, 0.0};
  }

  const auto size = static_cast<Eigen::Index>(untwisted_.size());
  const std::vector<int> cols = conjugate(f);
  const int m = static_cast<int>(cols.size());
  const int rank = ctx_.rank();

  // Leibniz expansion over column subsets: partial[mask] is the signed sum
  // over assignments of rows 0..|mask|-1 to the columns in mask.
  std::vector<IntMatrix> partial(std::size_t{1} << m);
  std::vector<bool> reached(partial.size(), false);
  partial[0] = IntMatrix::Identity(size, size);
  reached[0] = true;
  for (std::size_t mask = 0; mask + 1 < partial.size(); ++mask) {
    if (!reached[mask]) continue;
    const int row = std::popcount(mask);
    for (int col = 0; col < m; ++col) {
      if (mask & (std::size_t{1} << col)) continue;
      const int e = cols[row] - row + col;
      if (e < 0 || e > rank) continue;
      // Sign from the inversions this column makes with columns already used.
      const int inversions = std::popcount(mask >> (col + 1));
      const std::int64_t sign = inversions % 2 ? -1 : 1;
      const std::size_t next = mask | (std::size_t{1} << col);
      IntMatrix term = (e == 0 || e == rank) ? partial[mask]
                                             : IntMatrix(partial[mask] * elementary_[e]);
      if (!reached[next]) {
        partial[next] = sign * term;
        reached[next] = true;
      } else {
        partial[next] += sign * term;
      }
    }
  }
  IntMatrix result = reached.back() ? partial.back() : IntMatrix::Zero(size, size);
  if ((result.array() < 0).any())
    throw InternalError("negative fusion coefficient in Jacobi-Trudi expansion of " +
                        f.str());

  auto shared = std::make_shared<const IntMatrix>(std::move(result));
  {
    std::lock_guard lock(cache_mutex_);
    jacobi_trudi_cache_.emplace(f, shared);
  }
  return {f.str(), *shared, 0.0};
}

FormalCombination<GLSignature> FusionModel::fuse_untwisted(const GLSignature& f,
                                                           const GLSignature& g) const {
  const auto matrix = untwisted_matrix(f);
  const auto col = static_cast<Eigen::Index>(untwisted_index(require_untwisted(g)));
  FormalCombination<GLSignature> out;
  for (Eigen::Index row = 0; row < matrix.entries.rows(); ++row)
    out.add(untwisted_[row], matrix.entries(row, col));
  return out;
}

FusionMatrix FusionModel::module_route_a(int k) const {
  check_degree(k, ctx_);
  const auto size = static_cast<Eigen::Index>(twisted_.size());
  IntMatrix m = IntMatrix::Zero(size, size);
  for (Eigen::Index col = 0; col < size; ++col) {
    for (const auto& [g, mult] : sundaram_level(twisted_[col], k, ctx_)) {
      if (!is_permissible(g, ctx_.level()))
        throw InternalError("route A produced non-permissible (" + g.str() + ")");
      m(static_cast<Eigen::Index>(twisted_index(g)), col) += mult;
    }
  }
  return {"Lambda^" + std::to_string(k), std::move(m), 0.0};
}

FusionMatrix FusionModel::module_route_b(const GLSignature& f_in) const {
  const GLSignature f = require_untwisted(f_in);
  if (psi_.rows() != psi_.cols())
    throw RouteFailure("evaluation set has " + std::to_string(psi_.rows()) +
                       " points but the twisted basis has " +
                       std::to_string(psi_.cols()) + " elements");
  if (std::abs(psi_det_) < kBasisDeterminantFloor)
    throw RouteFailure("twisted characters do not form a basis: |det Psi| = " +
                       std::to_string(std::abs(psi_det_)));

  const Eigen::Index size = psi_.rows();
  Eigen::VectorXd lambda(size);
  for (Eigen::Index r = 0; r < size; ++r) {
    const CharValue v = chi_gl(f, points_[r]);
    if (!v.is_real())
      throw RouteFailure("chi_" + f.str() + " is not real at D(" +
                         eval_set_[r].str() + ")");
    lambda(r) = v.real();
  }
  const Eigen::MatrixXd exact = psi_lu_.solve(lambda.asDiagonal() * psi_);

  FusionMatrix out{f.str(), IntMatrix(size, size), 0.0};
  for (Eigen::Index r = 0; r < size; ++r) {
    for (Eigen::Index c = 0; c < size; ++c) {
      const double rounded = std::round(exact(r, c));
      out.rounding_residual = std::max(out.rounding_residual, std::abs(exact(r, c) - rounded));
      out.entries(r, c) = static_cast<std::int64_t>(rounded);
    }
  }
  if (!(out.rounding_residual < kRoundingTolerance))
    throw RouteFailure("evaluation route for H_" + f.str() +
                       " is not integral: rounding residual " +
                       std::to_string(out.rounding_residual));
  if ((out.entries.array() < 0).any())
    throw RouteFailure("evaluation route for H_" + f.str() +
                       " produced a negative multiplicity");
  return out;
}

FormalCombination<SpSignature> FusionModel::fuse_module(const GLSignature& f,
                                                        const SpSignature& h) const {
  const auto col = static_cast<Eigen::Index>(twisted_index(require_twisted(h)));
  const auto matrix = module_route_b(f);
  FormalCombination<SpSignature> out;
  for (Eigen::Index row = 0; row < matrix.entries.rows(); ++row)
    out.add(twisted_[row], matrix.entries(row, col));
  return out;
}

K0Square FusionModel::k0_square() const {
  K0Square out;
  for (const auto& f : enumerate_paired(ctx_)) {
    out.decomposition.add(f, 1);
    out.paired_sum += dims_.untwisted[untwisted_index(f)];
  }
  out.c_squared = dims_.c * dims_.c;
  return out;
}

FusionMatrix fundamental_matrix_untwisted(int k, const LevelContext& ctx) {
  return FusionModel(ctx).fundamental_untwisted(k);
}

FormalCombination<GLSignature> general_fusion_untwisted(const GLSignature& f,
                                                        const GLSignature& g,
                                                        const LevelContext& ctx) {
  return FusionModel(ctx).fuse_untwisted(f, g);
}

FusionMatrix module_matrix_route_a(int k, const LevelContext& ctx) {
  return FusionModel(ctx).module_route_a(k);
}

FusionMatrix module_matrix_route_b(const GLSignature& f, const LevelContext& ctx) {
  return FusionModel(ctx).module_route_b(f);
}

FormalCombination<SpSignature> fuse_module(const GLSignature& f,
                                           const SpSignature& h,
                                           const LevelContext& ctx) {
  return FusionModel(ctx).fuse_module(f, h);
}

K0Square k0_square(const LevelContext& ctx) { return FusionModel(ctx).k0_square(); }

}  // namespace twistfuse

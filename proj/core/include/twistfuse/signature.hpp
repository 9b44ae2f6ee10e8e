#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "twistfuse/error.hpp"

namespace twistfuse {

/// The pair (N, level) fixing the loop group SU(2N) and the central
/// extension. kappa = 2N + level is the denominator of every evaluation angle.
class LevelContext {
 public:
  LevelContext(int n, int level);

  int n() const noexcept { return n_; }
  int level() const noexcept { return level_; }
  int rank() const noexcept { return 2 * n_; }
  int kappa() const noexcept { return 2 * n_ + level_; }

  friend auto operator<=>(const LevelContext&, const LevelContext&) = default;

 private:
  int n_;
  int level_;
};

namespace detail {

void check_signature(std::span<const int> parts, bool nonnegative,
                     const char* what);
std::string join_parts(std::span<const int> parts);

}  // namespace detail

struct GLTag {
  static constexpr bool nonnegative = false;
  static constexpr const char* name = "SU(2N) signature";
};

struct SpTag {
  static constexpr bool nonnegative = true;
  static constexpr const char* name = "Sp(N) signature";
};

/// Weakly decreasing integer tuple labelling an irreducible representation.
/// GLSignature labels SU(2N) (and untwisted level-l) representations and may
/// carry negative parts before normalization; SpSignature labels Sp(N) (and
/// twisted) representations and is nonnegative. Ordering is lexicographic on
/// parts, which is the canonical basis order everywhere.
template <class Tag>
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<int> parts) : parts_(std::move(parts)) {
    detail::check_signature(parts_, Tag::nonnegative, Tag::name);
  }
  Signature(std::initializer_list<int> parts)
      : Signature(std::vector<int>(parts)) {}

  std::span<const int> parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  int boxes() const noexcept {
    int total = 0;
    for (int p : parts_) total += p;
    return total;
  }

  /// "a,b,c"; also the JSON key format.
  std::string str() const { return detail::join_parts(parts_); }

  friend auto operator<=>(const Signature&, const Signature&) = default;

 private:
  std::vector<int> parts_;
};

using GLSignature = Signature<GLTag>;
using SpSignature = Signature<SpTag>;

/// Subtracts the last part from every part. Idempotent.
GLSignature normalize_gl(const GLSignature& f);

/// f_1 - f_2N <= level.
bool is_permissible(const GLSignature& f, int level);

/// h_1 + h_2, with h_2 taken as 0 when N = 1.
int leading_pair_sum(const SpSignature& h);

/// h_1 + h_2 <= level.
bool is_permissible(const SpSignature& h, int level);

enum class Parity { Integral, HalfIntegral };

/// Element of the evaluation set: N weakly decreasing nonnegative values in
/// (1/2)Z sharing one parity, stored exactly as doubled integers.
class HalfIntVector {
 public:
  HalfIntVector() = default;
  explicit HalfIntVector(std::vector<int> doubled);

  std::span<const int> doubled() const noexcept { return doubled_; }
  std::size_t size() const noexcept { return doubled_.size(); }
  Parity parity() const noexcept { return parity_; }
  double value(std::size_t i) const { return doubled_[i] / 2.0; }

  /// "0,0" or "1/2,1/2".
  std::string str() const;

  // Integral points first, then lexicographic on parts.
  friend auto operator<=>(const HalfIntVector&, const HalfIntVector&) = default;

 private:
  Parity parity_ = Parity::Integral;
  std::vector<int> doubled_;
};

/// Normalized GLSignatures with f_1 <= level; binomial(2N-1+level, level) of them.
std::vector<GLSignature> enumerate_untwisted_basis(const LevelContext& ctx);

/// SpSignatures with h_1 + h_2 <= level.
std::vector<SpSignature> enumerate_twisted_basis(const LevelContext& ctx);

/// Permissible normalized GLSignatures with f_{2i-1} = f_{2i}.
std::vector<GLSignature> enumerate_paired(const LevelContext& ctx);

/// The evaluation set: uniform-parity HalfIntVectors with g_1 <= level/2.
std::vector<HalfIntVector> enumerate_eval_set(const LevelContext& ctx);

/// SpSignatures on the affine wall h_1 + h_2 = level + 1.
std::vector<SpSignature> enumerate_boundary(const LevelContext& ctx);

namespace detail {

std::vector<std::vector<int>> add_vertical_strips(std::span<const int> parts,
                                                  int p, int max_rows);
std::vector<std::vector<int>> remove_vertical_strips(
    std::span<const int> parts, int q);

}  // namespace detail

/// Every weakly decreasing result of adding one box to each of p distinct
/// rows among the first max_rows rows, in lexicographic order of the chosen
/// row sets. Empty when p > max_rows.
template <class Tag>
std::vector<Signature<Tag>> add_vertical_strips(const Signature<Tag>& s, int p,
                                                int max_rows) {
  std::vector<Signature<Tag>> out;
  for (auto& parts : detail::add_vertical_strips(s.parts(), p, max_rows))
    out.emplace_back(std::move(parts));
  return out;
}

/// Every weakly decreasing, nonnegative result of removing one box from each
/// of q distinct rows.
template <class Tag>
std::vector<Signature<Tag>> remove_vertical_strips(const Signature<Tag>& s,
                                                   int q) {
  std::vector<Signature<Tag>> out;
  for (auto& parts : detail::remove_vertical_strips(s.parts(), q))
    out.emplace_back(std::move(parts));
  return out;
}

}  // namespace twistfuse

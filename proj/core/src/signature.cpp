#include "twistfuse/signature.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace twistfuse {

LevelContext::LevelContext(int n, int level) : n_(n), level_(level) {
  if (n < 1) throw InvalidArgument("N must be a positive integer");
  if (level < 1) throw InvalidArgument("level must be a positive integer");
}

namespace detail {

void check_signature(std::span<const int> parts, bool nonnegative,
                     const char* what) {
  if (parts.empty())
    throw InvalidArgument(std::string(what) + " must have at least one part");
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    if (parts[i] < parts[i + 1])
      throw InvalidArgument(std::string(what) + " (" + join_parts(parts) +
                            ") is not weakly decreasing");
  }
  if (nonnegative && parts.back() < 0)
    throw InvalidArgument(std::string(what) + " (" + join_parts(parts) +
                          ") has a negative part");
}

std::string join_parts(std::span<const int> parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out;
}

namespace {

bool weakly_decreasing(const std::vector<int>& v) {
  return std::is_sorted(v.rbegin(), v.rend());
}

// Visits every choice of `count` rows out of `rows`, lexicographically.
void for_each_row_subset(int rows, int count,
                         const std::function<void(const std::vector<int>&)>& fn) {
  if (count < 0 || count > rows) return;
  std::vector<int> chosen(count);
  for (int i = 0; i < count; ++i) chosen[i] = i;
  while (true) {
    fn(chosen);
    int i = count - 1;
    while (i >= 0 && chosen[i] == rows - count + i) --i;
    if (i < 0) return;
    ++chosen[i];
    for (int j = i + 1; j < count; ++j) chosen[j] = chosen[j - 1] + 1;
  }
}

}  // namespace

std::vector<std::vector<int>> add_vertical_strips(std::span<const int> parts,
                                                  int p, int max_rows) {
  if (p < 0) throw InvalidArgument("strip size must be nonnegative");
  if (max_rows < 0 || static_cast<std::size_t>(max_rows) > parts.size())
    throw InvalidArgument("max_rows must lie in [0, number of parts]");
  std::vector<std::vector<int>> out;
  for_each_row_subset(max_rows, p, [&](const std::vector<int>& rows) {
    std::vector<int> next(parts.begin(), parts.end());
    for (int r : rows) ++next[r];
    if (weakly_decreasing(next)) out.push_back(std::move(next));
  });
  return out;
}

std::vector<std::vector<int>> remove_vertical_strips(
    std::span<const int> parts, int q) {
  if (q < 0) throw InvalidArgument("strip size must be nonnegative");
  std::vector<std::vector<int>> out;
  for_each_row_subset(static_cast<int>(parts.size()), q,
                      [&](const std::vector<int>& rows) {
                        std::vector<int> next(parts.begin(), parts.end());
                        for (int r : rows) --next[r];
                        if (weakly_decreasing(next) && next.back() >= 0)
                          out.push_back(std::move(next));
                      });
  return out;
}

}  // namespace detail

GLSignature normalize_gl(const GLSignature& f) {
  std::vector<int> parts(f.parts().begin(), f.parts().end());
  const int last = parts.back();
  for (int& p : parts) p -= last;
  return GLSignature(std::move(parts));
}

bool is_permissible(const GLSignature& f, int level) {
  return f[0] - f[f.size() - 1] <= level;
}

int leading_pair_sum(const SpSignature& h) {
  return h[0] + (h.size() > 1 ? h[1] : 0);
}

bool is_permissible(const SpSignature& h, int level) {
  return leading_pair_sum(h) <= level;
}

HalfIntVector::HalfIntVector(std::vector<int> doubled)
    : doubled_(std::move(doubled)) {
  if (doubled_.empty())
    throw InvalidArgument("evaluation vector must have at least one part");
  detail::check_signature(doubled_, true, "evaluation vector (doubled)");
  parity_ = doubled_[0] % 2 == 0 ? Parity::Integral : Parity::HalfIntegral;
  for (int d : doubled_) {
    if ((d % 2 == 0) != (parity_ == Parity::Integral))
      throw InvalidArgument("evaluation vector mixes integral and half-integral parts");
  }
}

std::string HalfIntVector::str() const {
  std::string out;
  for (std::size_t i = 0; i < doubled_.size(); ++i) {
    if (i) out += ',';
    if (doubled_[i] % 2 == 0)
      out += std::to_string(doubled_[i] / 2);
    else
      out += std::to_string(doubled_[i]) + "/2";
  }
  return out;
}

namespace {

// Weakly decreasing tuples of the given length with entries in [0, hi] that
// satisfy `keep`; `step` restricts entries to a residue class (step 2 with
// offset 0/1 gives even/odd values).
std::vector<std::vector<int>> decreasing_tuples(
    std::size_t length, int hi, int offset, int step,
    const std::function<bool(const std::vector<int>&)>& keep) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int bound) {
    if (cur.size() == length) {
      if (keep(cur)) out.push_back(cur);
      return;
    }
    for (int v = offset; v <= bound; v += step) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(hi);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<GLSignature> enumerate_untwisted_basis(const LevelContext& ctx) {
  const auto tuples = decreasing_tuples(
      ctx.rank(), ctx.level(), 0, 1,
      [](const std::vector<int>& t) { return t.back() == 0; });
  return {tuples.begin(), tuples.end()};
}

std::vector<SpSignature> enumerate_twisted_basis(const LevelContext& ctx) {
  const int level = ctx.level();
  const auto tuples = decreasing_tuples(
      ctx.n(), level, 0, 1, [level](const std::vector<int>& t) {
        return t[0] + (t.size() > 1 ? t[1] : 0) <= level;
      });
  return {tuples.begin(), tuples.end()};
}

std::vector<GLSignature> enumerate_paired(const LevelContext& ctx) {
  std::vector<GLSignature> out;
  for (auto& f : enumerate_untwisted_basis(ctx)) {
    bool paired = true;
    for (std::size_t i = 0; i + 1 < f.size(); i += 2) paired &= f[i] == f[i + 1];
    if (paired) out.push_back(std::move(f));
  }
  return out;
}

std::vector<HalfIntVector> enumerate_eval_set(const LevelContext& ctx) {
  std::vector<HalfIntVector> out;
  auto all = [](const std::vector<int>&) { return true; };
  for (int offset : {0, 1}) {
    for (auto& t : decreasing_tuples(ctx.n(), ctx.level(), offset, 2, all))
      out.emplace_back(std::move(t));
  }
  return out;
}

std::vector<SpSignature> enumerate_boundary(const LevelContext& ctx) {
  const int wall = ctx.level() + 1;
  const auto tuples = decreasing_tuples(
      ctx.n(), wall, 0, 1, [wall](const std::vector<int>& t) {
        return t[0] + (t.size() > 1 ? t[1] : 0) == wall;
      });
  return {tuples.begin(), tuples.end()};
}

}  // namespace twistfuse

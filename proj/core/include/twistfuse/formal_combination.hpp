#pragma once

#include <algorithm>
#include <cstdint>
#include <map>

namespace twistfuse {

/// Finite Z-linear combination of basis labels. Zero coefficients are never
/// stored; iteration follows the labels' canonical order.
template <class Label>
class FormalCombination {
 public:
  using Terms = std::map<Label, std::int64_t>;

  FormalCombination() = default;

  void add(const Label& label, std::int64_t multiplicity) {
    if (multiplicity == 0) return;
    auto [it, inserted] = terms_.try_emplace(label, multiplicity);
    if (!inserted) {
      it->second += multiplicity;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::int64_t coefficient(const Label& label) const {
    auto it = terms_.find(label);
    return it == terms_.end() ? 0 : it->second;
  }

  bool all_nonnegative() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second >= 0; });
  }

  std::int64_t total_multiplicity() const {
    std::int64_t total = 0;
    for (const auto& [_, m] : terms_) total += m;
    return total;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  friend bool operator==(const FormalCombination&,
                         const FormalCombination&) = default;

 private:
  Terms terms_;
};

}  // namespace twistfuse

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tstar/counts.hpp"
#include "tstar/errors.hpp"
#include "tstar/graph.hpp"

namespace tstar {

// Walks the spanning subgraphs of G^l_n(i) that miss only edges inside the
// K_{n-2i-l} part. Members come out as labelled graphs in the build_g vertex
// order, one per subset of missing clique edges; the first is G^l_n(i).
class family_member_cursor {
 public:
  // Throws size_error if the family has more than `cap` members, or more
  // than 2^62 in any case.
  explicit family_member_cursor(const family_params& p, std::optional<std::uint64_t> cap = std::nullopt)
      : base_(family_params::make(p.n, p.ell, p.i)), full_(build_g(base_)) {
    const int first = base_.independent_size();
    const int m = base_.clique_size();
    for (int v = 1; v < m; ++v)
      for (int u = 0; u < v; ++u) slots_.emplace_back(first + u, first + v);
    if (slots_.size() > 62) throw size_error("family has 2^" + std::to_string(slots_.size()) + " members");
    size_ = std::uint64_t{1} << slots_.size();
    if (cap && size_ > *cap)
      throw size_error("family has " + std::to_string(size_) + " members, above the cap of " + std::to_string(*cap));
  }

  const family_params& base() const noexcept { return base_; }
  std::uint64_t size() const noexcept { return size_; }
  std::uint64_t missing_mask() const noexcept { return mask_; }
  const std::vector<std::pair<int, int>>& slots() const noexcept { return slots_; }

  std::optional<graph> next() {
    if (done_) return std::nullopt;
    graph g = full_;
    for (std::size_t s = 0; s < slots_.size(); ++s)
      if ((mask_ >> s) & 1U) g.remove_edge(slots_[s].first, slots_[s].second);
    if (++mask_ == size_) done_ = true;
    return g;
  }

 private:
  family_params base_;
  graph full_;
  std::vector<std::pair<int, int>> slots_;
  std::uint64_t size_ = 1;
  std::uint64_t mask_ = 0;
  bool done_ = false;
};

inline family_member_cursor enumerate_family(const family_params& p, std::optional<std::uint64_t> cap = std::nullopt) {
  return family_member_cursor(p, cap);
}

}  // namespace tstar

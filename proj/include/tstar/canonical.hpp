#pragma once

// Canonical labelling by equitable refinement and an exhaustive search tree.
//
// Cells start as degree classes in increasing degree order and are split by
// neighbour counts into each splitter cell until stable; the search branches
// on every vertex of the first non-singleton cell. The canonical labelling is
// the leaf with the lexicographically largest relabelled adjacency rows. Every
// leaf is visited (no automorphism pruning), which is fine for the <= 10
// vertex graphs the search works with and makes the set of optimal leaves
// exactly one coset of the automorphism group.

#include <array>
#include <string>
#include <vector>

#include "tstar/graph.hpp"
#include "tstar/graph6.hpp"

namespace tstar {

using cell_list = std::vector<vertex_set>;

inline cell_list degree_partition(const graph& g) {
  std::array<vertex_set, graph::max_order> by_degree{};
  for (int v = 0; v < g.order(); ++v) by_degree[static_cast<std::size_t>(g.degree(v))] |= bit(v);
  cell_list cells;
  for (vertex_set c : by_degree)
    if (c) cells.push_back(c);
  return cells;
}

// Splits cells until every vertex of a cell has the same number of
// neighbours in every cell. Subcells are ordered by increasing count.
inline void refine(const graph& g, cell_list& cells) {
  std::array<vertex_set, graph::max_order + 1> bucket{};
  cell_list next;
  for (bool split = true; split;) {
    split = false;
    for (std::size_t w = 0; w < cells.size(); ++w) {
      const vertex_set splitter = cells[w];
      next.clear();
      for (vertex_set x : cells) {
        if (popcount(x) == 1) {
          next.push_back(x);
          continue;
        }
        int lo = graph::max_order;
        int hi = 0;
        for (vertex_set s = x; s; s &= s - 1) {
          const int v = lowest(s);
          const int c = popcount(g.neighbors(v) & splitter);
          bucket[static_cast<std::size_t>(c)] |= bit(v);
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        }
        for (int c = lo; c <= hi; ++c) {
          if (bucket[static_cast<std::size_t>(c)]) next.push_back(bucket[static_cast<std::size_t>(c)]);
          bucket[static_cast<std::size_t>(c)] = 0;
        }
      }
      if (next.size() != cells.size()) {
        split = true;
        cells.swap(next);
      }
    }
  }
}

struct canonical_labeling {
  std::vector<int> position;        // vertex -> canonical position
  std::vector<vertex_set> code;     // relabelled adjacency rows
  vertex_set last_orbit = 0;        // vertices some optimal leaf places last
  std::size_t leaves = 0;
};

namespace detail {

class canonical_search {
 public:
  explicit canonical_search(const graph& g) : g_(g), n_(g.order()) {}

  canonical_labeling run() {
    canonical_labeling out;
    if (n_ == 0) return out;
    cell_list root = degree_partition(g_);
    descend(root);
    out.position = best_position_;
    out.code = best_code_;
    out.last_orbit = last_orbit_;
    out.leaves = leaves_;
    return out;
  }

 private:
  void descend(cell_list& cells) {
    refine(g_, cells);
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (popcount(cells[c]) > 1) {
        target = c;
        break;
      }
    }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    const vertex_set cell = cells[target];
    for (vertex_set s = cell; s; s &= s - 1) {
      cell_list child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
      child.push_back(bit(lowest(s)));
      child.push_back(cell & ~bit(lowest(s)));
      child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());
      descend(child);
    }
  }

  void leaf(const cell_list& cells) {
    ++leaves_;
    position_.assign(static_cast<std::size_t>(n_), 0);
    for (int p = 0; p < n_; ++p) position_[static_cast<std::size_t>(lowest(cells[static_cast<std::size_t>(p)]))] = p;
    code_.assign(static_cast<std::size_t>(n_), 0);
    for (int p = 0; p < n_; ++p) {
      vertex_set row = 0;
      for (vertex_set r = g_.neighbors(lowest(cells[static_cast<std::size_t>(p)])); r; r &= r - 1)
        row |= bit(position_[static_cast<std::size_t>(lowest(r))]);
      code_[static_cast<std::size_t>(p)] = row;
    }
    const vertex_set last = cells.back();
    if (best_code_.empty() || best_code_ < code_) {
      best_code_ = code_;
      best_position_ = position_;
      last_orbit_ = last;
    } else if (best_code_ == code_) {
      last_orbit_ |= last;
    }
  }

  const graph& g_;
  int n_;
  std::vector<int> position_;
  std::vector<vertex_set> code_;
  std::vector<int> best_position_;
  std::vector<vertex_set> best_code_;
  vertex_set last_orbit_ = 0;
  std::size_t leaves_ = 0;
};

}  // namespace detail

inline canonical_labeling canonical_label(const graph& g) { return detail::canonical_search(g).run(); }

inline graph canonical_graph(const graph& g) { return relabel(g, canonical_label(g).position); }

// graph6 of the canonically relabelled graph; equal strings iff isomorphic.
inline std::string canonical_form(const graph& g) { return graph6_encode(canonical_graph(g)); }

}  // namespace tstar

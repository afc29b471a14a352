#pragma once

// Isomorph-free generation of small graphs by canonical augmentation.
//
// A graph on m+1 vertices is grown from one on m vertices by adding vertex m
// with an arbitrary neighbourhood. The child is kept only when vertex m is in
// the orbit of the vertex the canonical labelling puts last, and siblings
// with equal canonical code are kept once. Every isomorphism class then
// arises from exactly one parent class, and exactly once from it.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <thread>
#include <type_traits>
#include <unordered_set>
#include <vector>

#include "tstar/canonical.hpp"
#include "tstar/errors.hpp"
#include "tstar/graph.hpp"

namespace tstar {

constexpr int enumeration_limit = 10;

inline void validate_enumeration(int n, int min_degree) {
  if (n < 1 || n > enumeration_limit)
    throw argument_error("graph enumeration supports 1 <= n <= 10 (got n=" + std::to_string(n) +
                         "); larger orders are out of reach for the exhaustive deciders");
  if (min_degree < 0) throw argument_error("minimum degree must be nonnegative");
}

namespace detail {

class augmenter {
 public:
  augmenter(int n, int min_degree) : n_(n), d_(min_degree) {}

  // Smallest minimum degree a graph on m vertices may have and still grow
  // into one with minimum degree d on n vertices.
  int need(int m) const { return d_ - (n_ - m); }

  // Canonical children of `parent` in a fixed order.
  std::vector<graph> children(const graph& parent) const {
    const int m = parent.order();
    const int req = need(m + 1);
    std::vector<graph> out;
    std::set<std::vector<vertex_set>> seen;
    vertex_set low = 0;   // vertices that must gain an edge
    for (int u = 0; u < m; ++u) {
      if (parent.degree(u) + 1 < req) return out;
      if (parent.degree(u) < req) low |= bit(u);
    }
    const vertex_set all = low_bits(m);
    for (vertex_set s = 0;; ++s) {
      if ((s & low) == low && popcount(s) >= req) {
        graph child(m + 1);
        for (int u = 0; u < m; ++u)
          for (vertex_set r = parent.neighbors(u) & ~low_bits(u + 1); r; r &= r - 1) child.add_edge(u, lowest(r));
        for (vertex_set r = s; r; r &= r - 1) child.add_edge(m, lowest(r));
        if (accept(child)) {
          auto lab = canonical_label(child);
          if ((lab.last_orbit >> m) & 1U) {
            if (seen.insert(lab.code).second) out.push_back(std::move(child));
          }
        }
      }
      if (s == all) break;
    }
    return out;
  }

  template <class Consumer>
  bool grow(const graph& g, Consumer& consume) const {
    if (g.order() == n_) return emit(g, consume);
    for (const graph& c : children(g))
      if (!grow(c, consume)) return false;
    return true;
  }

  // Graphs of the given order reachable from the root, in generation order.
  std::vector<graph> level(int order) const {
    std::vector<graph> cur{graph(1)};
    for (int m = 1; m < order; ++m) {
      std::vector<graph> next;
      for (const graph& g : cur) {
        auto c = children(g);
        next.insert(next.end(), std::make_move_iterator(c.begin()), std::make_move_iterator(c.end()));
      }
      cur.swap(next);
    }
    return cur;
  }

  int order() const { return n_; }

 private:
  // The new vertex must have maximum degree and survive to the last cell of
  // the refined degree partition.
  static bool accept(const graph& child) {
    const int v = child.order() - 1;
    const int dv = child.degree(v);
    for (int u = 0; u < v; ++u)
      if (child.degree(u) > dv) return false;
    cell_list cells = degree_partition(child);
    refine(child, cells);
    return (cells.back() >> v) & 1U;
  }

  template <class Consumer>
  static bool emit(const graph& g, Consumer& consume) {
    if constexpr (std::is_same_v<std::invoke_result_t<Consumer&, const graph&>, bool>) {
      return consume(g);
    } else {
      consume(g);
      return true;
    }
  }

  int n_;
  int d_;
};

}  // namespace detail

// Calls consume(g) once per isomorphism class of n-vertex graphs with minimum
// degree >= min_degree. A consumer returning bool may return false to stop.
template <class Consumer>
void enumerate_graphs(int n, int min_degree, Consumer&& consume) {
  validate_enumeration(n, min_degree);
  if (min_degree > n - 1) return;
  const detail::augmenter a(n, min_degree);
  a.grow(graph(1), consume);
}

// Same classes collected into a vector. With several workers the subtrees
// below a fixed level are shared out; the result order is the sequential one.
inline std::vector<graph> graphs_up_to_iso(int n, int min_degree, unsigned workers = 1) {
  validate_enumeration(n, min_degree);
  std::vector<graph> out;
  if (min_degree > n - 1) return out;
  const detail::augmenter a(n, min_degree);
  if (workers <= 1 || n <= 4) {
    auto keep = [&](const graph& g) { out.push_back(g); };
    a.grow(graph(1), keep);
    return out;
  }
  const auto roots = a.level(n - 2);
  std::vector<std::vector<graph>> parts(roots.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t j; (j = next.fetch_add(1)) < roots.size();) {
      auto keep = [&](const graph& g) { parts[j].push_back(g); };
      a.grow(roots[j], keep);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  return out;
}

inline std::size_t count_graphs(int n, int min_degree = 0) {
  std::size_t c = 0;
  enumerate_graphs(n, min_degree, [&](const graph&) { ++c; });
  return c;
}

// Oracle path: every labelled graph on n vertices, deduplicated by canonical
// form. Representatives come in order of first appearance. Limited to n <= 7.
inline std::vector<graph> labeled_sweep_classes(int n, int min_degree = 0) {
  if (n < 1 || n > 7) throw argument_error("labelled sweep supports 1 <= n <= 7");
  std::vector<std::pair<int, int>> slots;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) slots.emplace_back(u, v);
  std::unordered_set<std::string> seen;
  std::vector<graph> out;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    graph g(n);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1U) g.add_edge(slots[s].first, slots[s].second);
    if (g.min_degree() < min_degree) continue;
    if (seen.insert(canonical_form(g)).second) out.push_back(g);
  }
  return out;
}

}  // namespace tstar

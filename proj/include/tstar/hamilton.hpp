#pragma once

// Hamilton cycle and path engines over a vertex subset of a graph.
//
// Two independent routes exist: a subset dynamic program (reachable path
// endpoints per visited set, usable up to 20 vertices) and a depth-first
// backtracker that also honours forced edges. The deciders pick whichever
// applies; tests run both against each other.

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tstar/errors.hpp"
#include "tstar/graph.hpp"

namespace tstar {

using edge = std::pair<int, int>;

namespace hamilton {

constexpr int dp_limit = 20;

namespace detail {

// Subgraph on `keep` compressed to indices 0..m-1.
struct compact_graph {
  int m = 0;
  std::array<std::uint32_t, dp_limit> adj{};

  compact_graph(const graph& g, vertex_set keep) {
    std::array<int, graph::max_order> index{};
    for (vertex_set s = keep; s; s &= s - 1) index[static_cast<std::size_t>(lowest(s))] = m++;
    if (m > dp_limit) throw argument_error("subset DP limited to 20 vertices");
    for (vertex_set s = keep; s; s &= s - 1) {
      const int u = lowest(s);
      for (vertex_set r = g.neighbors(u) & keep; r; r &= r - 1)
        adj[static_cast<std::size_t>(index[static_cast<std::size_t>(u)])] |= std::uint32_t{1}
                                                                              << index[static_cast<std::size_t>(lowest(r))];
    }
  }

  std::uint32_t full() const { return m == 32 ? ~0U : (1U << m) - 1; }
};

// reach[mask] = endpoints of paths that start in `starts` and visit exactly mask.
inline std::vector<std::uint32_t> reach_table(const compact_graph& c, std::uint32_t starts) {
  std::vector<std::uint32_t> reach(std::size_t{1} << c.m, 0);
  for (std::uint32_t s = starts; s; s &= s - 1) reach[s & (~s + 1)] = s & (~s + 1);
  for (std::uint32_t mask = 1; mask <= c.full(); ++mask) {
    for (std::uint32_t ends = reach[mask]; ends; ends &= ends - 1) {
      const int e = std::countr_zero(ends);
      for (std::uint32_t next = c.adj[static_cast<std::size_t>(e)] & ~mask; next; next &= next - 1) {
        const std::uint32_t w = next & (~next + 1);
        reach[mask | w] |= w;
      }
    }
    if (mask == c.full()) break;
  }
  return reach;
}

}  // namespace detail

inline bool has_cycle_dp(const graph& g, vertex_set keep) {
  const detail::compact_graph c(g, keep);
  if (c.m < 3) return false;
  const auto reach = detail::reach_table(c, 1U);
  return (reach[c.full()] & c.adj[0]) != 0;
}

inline bool has_path_dp(const graph& g, vertex_set keep) {
  const detail::compact_graph c(g, keep);
  if (c.m == 0) return false;
  return detail::reach_table(c, c.full())[c.full()] != 0;
}

// For each vertex of `keep` (in increasing order), the set of vertices that
// end a spanning path starting there, in original labels.
inline std::vector<vertex_set> spanning_path_ends_dp(const graph& g, vertex_set keep) {
  const detail::compact_graph c(g, keep);
  std::vector<int> label;
  for (vertex_set s = keep; s; s &= s - 1) label.push_back(lowest(s));
  std::vector<vertex_set> out;
  for (int s = 0; s < c.m; ++s) {
    const auto reach = detail::reach_table(c, 1U << s);
    vertex_set ends = 0;
    for (std::uint32_t e = reach[c.full()]; e; e &= e - 1) ends |= bit(label[static_cast<std::size_t>(std::countr_zero(e))]);
    out.push_back(ends);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Backtracking

// Depth-first cycle search on the subgraph induced by `keep`, optionally
// forced to use a given set of edges. The walk starts at a forced vertex when
// there is one; a vertex carrying an untraversed forced edge must leave along
// it, and a vertex with two forced edges cannot be entered along a free one.
// Branches are cut when some unvisited vertex has fewer than two usable
// neighbours or the unvisited part is disconnected from the walk's head.
class cycle_search {
 public:
  cycle_search(const graph& g, vertex_set keep, std::span<const edge> forced = {}) : g_(g), keep_(keep) {
    m_ = popcount(keep);
    for (auto [u, v] : forced) {
      if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v || !((keep >> u) & 1U) || !((keep >> v) & 1U) ||
          !g.adjacent(u, v)) {
        feasible_ = false;
        continue;
      }
      if ((forced_[static_cast<std::size_t>(u)] >> v) & 1U) continue;
      forced_[static_cast<std::size_t>(u)] |= bit(v);
      forced_[static_cast<std::size_t>(v)] |= bit(u);
      forced_list_.emplace_back(u, v);
    }
    for (vertex_set s = keep; s; s &= s - 1) {
      const int v = lowest(s);
      if (popcount(forced_[static_cast<std::size_t>(v)]) > 2) feasible_ = false;
      if (popcount(forced_[static_cast<std::size_t>(v)]) == 2) saturated_ |= bit(v);
    }
  }

  // True iff some Hamilton cycle of the induced subgraph contains every forced edge.
  bool exists() {
    bool found = false;
    run([&](std::span<const int>) {
      found = true;
      return false;
    });
    return found;
  }

  // Calls visit(order) once per Hamilton cycle (up to reversal) through the
  // forced edges; visit returns false to stop early.
  template <class Visit>
  void run(Visit&& visit) {
    if (!feasible_ || m_ < 3) return;
    start_ = forced_list_.empty() ? lowest(keep_) : forced_list_.front().first;
    order_.assign(static_cast<std::size_t>(m_), -1);
    position_.fill(-1);
    order_[0] = start_;
    position_[static_cast<std::size_t>(start_)] = 0;
    stop_ = false;
    extend(start_, bit(start_), 1, visit);
  }

 private:
  template <class Visit>
  void extend(int cur, vertex_set visited, int depth, Visit& visit) {
    if (stop_) return;
    if (depth == m_) {
      if (!g_.adjacent(cur, start_)) return;
      // orientation: count each undirected cycle once when no forced edge fixes it
      if (forced_list_.empty() && order_[1] > cur) return;
      for (auto [u, v] : forced_list_) {
        const int pu = position_[static_cast<std::size_t>(u)];
        const int pv = position_[static_cast<std::size_t>(v)];
        const int gap = pu > pv ? pu - pv : pv - pu;
        if (gap != 1 && gap != m_ - 1) return;
      }
      if (!visit(std::span<const int>(order_))) stop_ = true;
      return;
    }
    const vertex_set unvisited = keep_ & ~visited;
    vertex_set candidates;
    const vertex_set pending = forced_[static_cast<std::size_t>(cur)] & unvisited;
    if (pending) {
      if (cur == start_) {
        candidates = pending & (~pending + 1);
      } else {
        if (popcount(pending) > 1) return;
        candidates = pending;
      }
    } else {
      candidates = g_.neighbors(cur) & unvisited & ~saturated_;
    }
    for (; candidates; candidates &= candidates - 1) {
      const int w = lowest(candidates);
      const vertex_set now = visited | bit(w);
      if (!viable(w, now)) continue;
      order_[static_cast<std::size_t>(depth)] = w;
      position_[static_cast<std::size_t>(w)] = depth;
      extend(w, now, depth + 1, visit);
      position_[static_cast<std::size_t>(w)] = -1;
      if (stop_) return;
    }
  }

  bool viable(int head, vertex_set visited) const {
    const vertex_set rest = keep_ & ~visited;
    if (!rest) return true;
    const vertex_set open = rest | bit(head) | bit(start_);
    for (vertex_set s = rest; s; s &= s - 1) {
      if (popcount(g_.neighbors(lowest(s)) & open) < 2) return false;
    }
    // rest must hang together through the head
    vertex_set seen = bit(head);
    vertex_set frontier = seen;
    const vertex_set region = rest | bit(head);
    while (frontier) {
      vertex_set next = 0;
      for (vertex_set f = frontier; f; f &= f - 1) next |= g_.neighbors(lowest(f));
      next &= region & ~seen;
      seen |= next;
      frontier = next;
    }
    return (seen & rest) == rest;
  }

  const graph& g_;
  vertex_set keep_;
  int m_ = 0;
  std::array<vertex_set, graph::max_order> forced_{};
  std::vector<edge> forced_list_;
  vertex_set saturated_ = 0;
  bool feasible_ = true;
  int start_ = 0;
  std::vector<int> order_;
  std::array<int, graph::max_order> position_{};
  bool stop_ = false;
};

inline bool has_cycle_backtrack(const graph& g, vertex_set keep, std::span<const edge> forced = {}) {
  return cycle_search(g, keep, forced).exists();
}

// Spanning path from a to b: a Hamilton cycle through the edge ab of g + ab.
inline bool has_path_between_backtrack(const graph& g, vertex_set keep, int a, int b) {
  if (a == b) return popcount(keep) == 1 && ((keep >> a) & 1U);
  if (popcount(keep) == 2) return g.adjacent(a, b);
  graph h = g;
  if (!h.adjacent(a, b)) h.add_edge(a, b);
  const edge ab{a, b};
  return cycle_search(h, keep, std::span<const edge>(&ab, 1)).exists();
}

// Spanning path anywhere: a Hamilton cycle of g plus one apex vertex.
inline bool has_path_backtrack(const graph& g, vertex_set keep) {
  const int m = popcount(keep);
  if (m == 0) return false;
  if (m == 1) return true;
  if (g.order() >= graph::max_order) throw argument_error("path search needs one spare vertex slot");
  graph h(g.order() + 1);
  for (int u = 0; u < g.order(); ++u)
    for (vertex_set r = g.neighbors(u) & ~low_bits(u + 1); r; r &= r - 1) h.add_edge(u, lowest(r));
  const int apex = g.order();
  for (vertex_set s = keep; s; s &= s - 1) h.add_edge(apex, lowest(s));
  return cycle_search(h, keep | bit(apex)).exists();
}

// ---------------------------------------------------------------------------
// Front ends choosing a route by size

inline bool has_cycle(const graph& g, vertex_set keep) {
  return popcount(keep) <= dp_limit ? has_cycle_dp(g, keep) : has_cycle_backtrack(g, keep);
}

inline bool has_path(const graph& g, vertex_set keep) {
  return popcount(keep) <= dp_limit ? has_path_dp(g, keep) : has_path_backtrack(g, keep);
}

}  // namespace hamilton
}  // namespace tstar

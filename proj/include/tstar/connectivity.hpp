#pragma once

#include <algorithm>
#include <queue>
#include <vector>

#include "tstar/graph.hpp"

namespace tstar {

inline vertex_set component_of(const graph& g, int v, vertex_set within) {
  vertex_set seen = bit(v);
  vertex_set frontier = seen;
  while (frontier) {
    vertex_set next = 0;
    for (vertex_set f = frontier; f; f &= f - 1) next |= g.neighbors(lowest(f));
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

inline bool is_connected(const graph& g) {
  if (g.order() <= 1) return true;
  return component_of(g, 0, g.vertices()) == g.vertices();
}

inline int component_count(const graph& g, vertex_set within) {
  int c = 0;
  for (vertex_set rest = within; rest; ++c) rest &= ~component_of(g, lowest(rest), within);
  return c;
}

namespace detail {

// Maximum number of internally disjoint s-t paths, s and t nonadjacent.
// Each vertex v splits into v_in = 2v and v_out = 2v+1 joined by a unit arc;
// edges become infinite-capacity arcs out->in in both directions.
inline int local_vertex_connectivity(const graph& g, int s, int t) {
  const int n = g.order();
  const int nodes = 2 * n;
  constexpr int inf = 1 << 20;
  std::vector<int> cap(static_cast<std::size_t>(nodes) * nodes, 0);
  auto at = [&](int a, int b) -> int& { return cap[static_cast<std::size_t>(a) * nodes + b]; };
  for (int v = 0; v < n; ++v) {
    at(2 * v, 2 * v + 1) = (v == s || v == t) ? inf : 1;
    for (vertex_set r = g.neighbors(v); r; r &= r - 1) at(2 * v + 1, 2 * lowest(r)) = inf;
  }
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  std::vector<int> parent(static_cast<std::size_t>(nodes));
  for (;;) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[static_cast<std::size_t>(source)] = source;
    std::queue<int> q;
    q.push(source);
    while (!q.empty() && parent[static_cast<std::size_t>(sink)] < 0) {
      const int a = q.front();
      q.pop();
      for (int b = 0; b < nodes; ++b) {
        if (parent[static_cast<std::size_t>(b)] < 0 && at(a, b) > 0) {
          parent[static_cast<std::size_t>(b)] = a;
          q.push(b);
        }
      }
    }
    if (parent[static_cast<std::size_t>(sink)] < 0) break;
    for (int b = sink; b != source; b = parent[static_cast<std::size_t>(b)]) {
      const int a = parent[static_cast<std::size_t>(b)];
      at(a, b) -= 1;
      at(b, a) += 1;
    }
    ++flow;
  }
  return flow;
}

}  // namespace detail

// Minimum vertex cut over all nonadjacent pairs (Menger); K_n gives n-1.
inline int vertex_connectivity(const graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  if (!is_connected(g)) return 0;
  int best = n - 1;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (!g.adjacent(s, t)) best = std::min(best, detail::local_vertex_connectivity(g, s, t));
  return best;
}

inline bool is_k_connected(const graph& g, int k) { return g.order() > k && vertex_connectivity(g) >= k; }

}  // namespace tstar

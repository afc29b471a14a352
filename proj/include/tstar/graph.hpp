#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "tstar/counts.hpp"
#include "tstar/errors.hpp"

namespace tstar {

using vertex_set = std::uint64_t;

constexpr vertex_set bit(int v) { return vertex_set{1} << v; }
constexpr vertex_set low_bits(int n) { return n >= 64 ? ~vertex_set{0} : bit(n) - 1; }
inline int popcount(vertex_set s) { return std::popcount(s); }
inline int lowest(vertex_set s) { return std::countr_zero(s); }

// Simple undirected graph on vertices 0..n-1, n <= 64, one adjacency word per
// vertex. Rows beyond n stay zero so defaulted equality is structural.
class graph {
 public:
  static constexpr int max_order = 64;

  graph() = default;

  explicit graph(int n) : n_(n) {
    if (n < 0 || n > max_order)
      throw argument_error("graph order must lie in [0, 64] (got " + std::to_string(n) + ")");
  }

  int order() const noexcept { return n_; }
  vertex_set vertices() const noexcept { return low_bits(n_); }
  vertex_set neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const { return (rows_[static_cast<std::size_t>(u)] >> v) & 1U; }
  int degree(int v) const { return popcount(neighbors(v)); }

  void add_edge(int u, int v) {
    check_pair(u, v);
    rows_[static_cast<std::size_t>(u)] |= bit(v);
    rows_[static_cast<std::size_t>(v)] |= bit(u);
  }

  void remove_edge(int u, int v) {
    check_pair(u, v);
    rows_[static_cast<std::size_t>(u)] &= ~bit(v);
    rows_[static_cast<std::size_t>(v)] &= ~bit(u);
  }

  int min_degree() const {
    if (n_ == 0) return 0;
    int m = n_;
    for (int v = 0; v < n_; ++v) m = std::min(m, degree(v));
    return m;
  }

  long long edge_count() const {
    long long s = 0;
    for (int v = 0; v < n_; ++v) s += degree(v);
    return s / 2;
  }

  friend bool operator==(const graph&, const graph&) = default;

 private:
  void check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
      throw argument_error("invalid edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
  }

  int n_ = 0;
  std::array<vertex_set, max_order> rows_{};
};

inline long long edge_count(const graph& g) { return g.edge_count(); }

inline degree_list degree_sequence(const graph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
  return degree_list(std::move(d));
}

template <class Int = big_int>
Int count_stars(const graph& g, int t) {
  return stars_from_degrees<Int>(degree_sequence(g), t);
}

// Subgraph induced on `keep`, relabelled to 0..|keep|-1 in increasing order.
inline graph induced_subgraph(const graph& g, vertex_set keep) {
  std::array<int, graph::max_order> index{};
  int m = 0;
  for (vertex_set s = keep; s; s &= s - 1) index[static_cast<std::size_t>(lowest(s))] = m++;
  graph h(m);
  for (vertex_set s = keep; s; s &= s - 1) {
    const int u = lowest(s);
    for (vertex_set r = g.neighbors(u) & keep & ~low_bits(u + 1); r; r &= r - 1)
      h.add_edge(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(lowest(r))]);
  }
  return h;
}

// g relabelled so that vertex v becomes position[v].
inline graph relabel(const graph& g, const std::vector<int>& position) {
  graph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (vertex_set r = g.neighbors(u) & ~low_bits(u + 1); r; r &= r - 1)
      h.add_edge(position[static_cast<std::size_t>(u)], position[static_cast<std::size_t>(lowest(r))]);
  return h;
}

// ---------------------------------------------------------------------------
// Small named graphs

inline graph complete_graph(int n) {
  graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline graph empty_graph(int n) { return graph(n); }

inline graph path_graph(int n) {
  graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline graph cycle_graph(int n) {
  graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

inline graph star_graph(int leaves) {
  graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

inline graph petersen_graph() {
  graph g(10);
  for (int v = 0; v < 5; ++v) {
    g.add_edge(v, (v + 1) % 5);
    g.add_edge(v, v + 5);
    g.add_edge(5 + v, 5 + (v + 2) % 5);
  }
  return g;
}

// a + b with every vertex of a joined to every vertex of b when `join`,
// plain disjoint union otherwise. Vertices of a come first.
inline graph combine(const graph& a, const graph& b, bool join) {
  const int na = a.order();
  graph g(na + b.order());
  for (int u = 0; u < na; ++u)
    for (vertex_set r = a.neighbors(u) & ~low_bits(u + 1); r; r &= r - 1) g.add_edge(u, lowest(r));
  for (int u = 0; u < b.order(); ++u) {
    for (vertex_set r = b.neighbors(u) & ~low_bits(u + 1); r; r &= r - 1) g.add_edge(na + u, na + lowest(r));
    if (join)
      for (int v = 0; v < na; ++v) g.add_edge(v, na + u);
  }
  return g;
}

inline graph graph_join(const graph& a, const graph& b) { return combine(a, b, true); }
inline graph disjoint_union(const graph& a, const graph& b) { return combine(a, b, false); }

// ---------------------------------------------------------------------------
// Extremal families

// K_{i+l} + (I_i u K_{n-2i-l}); vertices ordered I, then the clique part,
// then the dominating clique, so degrees are nondecreasing in vertex order.
// With i + l = 0 this is I_1 u K_{n-1}.
inline graph build_g(const family_params& p) {
  const auto q = family_params::make(p.n, p.ell, p.i);
  const graph low = disjoint_union(empty_graph(q.independent_size()), complete_graph(q.clique_size()));
  return graph_join(low, complete_graph(q.dominating_size()));
}

// K_{k-1} + (K_i u K_{n-k-i+1}); for k = 1 this is K_i u K_{n-i}.
inline graph build_h(const conn_family_params& p) {
  const auto q = conn_family_params::make(p.n, p.k, p.i);
  const graph low = disjoint_union(complete_graph(q.small_clique_size()), complete_graph(q.large_clique_size()));
  return graph_join(low, complete_graph(q.cut_size()));
}

}  // namespace tstar

#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tstar/connectivity.hpp"
#include "tstar/errors.hpp"
#include "tstar/graph.hpp"
#include "tstar/hamilton.hpp"

namespace tstar {

// ---------------------------------------------------------------------------
// Single-graph deciders
//
// Small orders: K_1 and K_2 are not Hamiltonian, K_1 is traceable, and K_1
// and K_2 count as Hamiltonian-connected.

inline bool is_hamiltonian(const graph& g) {
  if (g.order() < 3) return false;
  return hamilton::has_cycle(g, g.vertices());
}

inline bool is_traceable(const graph& g) {
  if (g.order() == 0) return false;
  return hamilton::has_path(g, g.vertices());
}

inline bool is_hamiltonian_connected(const graph& g) {
  const int n = g.order();
  if (n == 0) return false;
  if (n == 1) return true;
  if (n == 2) return g.adjacent(0, 1);
  const vertex_set all = g.vertices();
  if (g.min_degree() < 2) return false;
  if (n <= hamilton::dp_limit) {
    const auto ends = hamilton::spanning_path_ends_dp(g, all);
    for (int s = 0; s < n; ++s)
      if (ends[static_cast<std::size_t>(s)] != (all & ~bit(s))) return false;
    return true;
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!hamilton::has_path_between_backtrack(g, all, a, b)) return false;
  return true;
}

namespace detail {

// Calls visit(edges) for every linear forest with exactly `size` edges drawn
// from `pool` (edges taken in pool order). Returns false if visit stopped it.
template <class Visit>
bool for_each_linear_forest(const std::vector<edge>& pool, int size, Visit&& visit) {
  std::array<int, graph::max_order> deg{};
  std::array<int, graph::max_order> other_end{};
  for (int v = 0; v < graph::max_order; ++v) other_end[static_cast<std::size_t>(v)] = v;
  std::vector<edge> chosen;
  chosen.reserve(static_cast<std::size_t>(size));

  auto rec = [&](auto&& self, std::size_t from) -> bool {
    if (static_cast<int>(chosen.size()) == size) return visit(static_cast<const std::vector<edge>&>(chosen));
    const std::size_t needed = static_cast<std::size_t>(size) - chosen.size();
    for (std::size_t e = from; e + needed <= pool.size(); ++e) {
      const auto [u, v] = pool[e];
      auto& du = deg[static_cast<std::size_t>(u)];
      auto& dv = deg[static_cast<std::size_t>(v)];
      if (du == 2 || dv == 2 || other_end[static_cast<std::size_t>(u)] == v) continue;
      const int a = other_end[static_cast<std::size_t>(u)];
      const int b = other_end[static_cast<std::size_t>(v)];
      ++du;
      ++dv;
      other_end[static_cast<std::size_t>(a)] = b;
      other_end[static_cast<std::size_t>(b)] = a;
      chosen.push_back(pool[e]);
      const bool go_on = self(self, e + 1);
      chosen.pop_back();
      // a and b are the two ends again; u, v were ends before the merge
      other_end[static_cast<std::size_t>(a)] = u;
      other_end[static_cast<std::size_t>(u)] = a;
      other_end[static_cast<std::size_t>(b)] = v;
      other_end[static_cast<std::size_t>(v)] = b;
      --du;
      --dv;
      if (!go_on) return false;
    }
    return true;
  };
  return rec(rec, 0);
}

inline std::vector<edge> edge_list(const graph& g) {
  std::vector<edge> out;
  for (int v = 1; v < g.order(); ++v)
    for (int u = 0; u < v; ++u)
      if (g.adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

// Column-order slot of edge (u, v), u < v.
constexpr int edge_slot(int u, int v) { return u < v ? v * (v - 1) / 2 + u : u * (u - 1) / 2 + v; }
constexpr int cover_route_limit = 11;  // C(11, 2) = 55 slots fit one word

inline std::vector<std::uint64_t> hamilton_cycle_edge_masks(const graph& g) {
  std::vector<std::uint64_t> masks;
  hamilton::cycle_search search(g, g.vertices());
  search.run([&](std::span<const int> order) {
    std::uint64_t m = 0;
    for (std::size_t j = 0; j < order.size(); ++j)
      m |= std::uint64_t{1} << edge_slot(order[j], order[(j + 1) % order.size()]);
    masks.push_back(m);
    return true;
  });
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return masks;
}

template <class Extends>
int edge_level_by(const graph& g, int k_max, Extends&& extends) {
  const auto pool = edge_list(g);
  for (int size = 1; size <= k_max; ++size) {
    bool all_extend = true;
    for_each_linear_forest(pool, size, [&](const std::vector<edge>& forest) {
      all_extend = extends(forest);
      return all_extend;
    });
    if (!all_extend) return size - 1;
  }
  return k_max;
}

}  // namespace detail

// Largest j <= k_max such that every linear forest with at most j edges lies
// on a Hamilton cycle; -1 when g is not Hamiltonian. Forest sizes are tried
// in increasing order.
inline int edge_hamiltonicity_level_backtrack(const graph& g, int k_max) {
  if (!is_hamiltonian(g)) return -1;
  return detail::edge_level_by(g, k_max, [&](const std::vector<edge>& forest) {
    return hamilton::has_cycle_backtrack(g, g.vertices(), forest);
  });
}

// Same quantity via the list of all Hamilton cycles as edge masks: a forest
// extends iff its mask is covered by one of them. Needs n <= 11.
inline int edge_hamiltonicity_level_cover(const graph& g, int k_max) {
  if (g.order() > detail::cover_route_limit) throw argument_error("cover route limited to 11 vertices");
  if (g.order() < 3) return -1;
  const auto cycles = detail::hamilton_cycle_edge_masks(g);
  if (cycles.empty()) return -1;
  return detail::edge_level_by(g, k_max, [&](const std::vector<edge>& forest) {
    std::uint64_t m = 0;
    for (auto [u, v] : forest) m |= std::uint64_t{1} << detail::edge_slot(u, v);
    return std::any_of(cycles.begin(), cycles.end(), [m](std::uint64_t c) { return (m & ~c) == 0; });
  });
}

inline int edge_hamiltonicity_level(const graph& g, int k_max) {
  return g.order() <= detail::cover_route_limit ? edge_hamiltonicity_level_cover(g, k_max)
                                                : edge_hamiltonicity_level_backtrack(g, k_max);
}

inline void validate_hamiltonicity_k(const graph& g, int k, const char* what) {
  if (k < 0 || k > g.order() - 3)
    throw argument_error(std::string(what) + ": k must lie in [0, n-3] (got k=" + std::to_string(k) +
                         ", n=" + std::to_string(g.order()) + ")");
}

inline bool is_k_edge_hamiltonian(const graph& g, int k) {
  validate_hamiltonicity_k(g, k, "k-edge Hamiltonicity");
  return edge_hamiltonicity_level(g, k) >= k;
}

// Largest j <= k_max such that deleting any j or fewer vertices leaves a
// Hamiltonian graph; -1 when g itself is not Hamiltonian. Deletion sets are
// tried smallest first.
inline int vertex_hamiltonicity_level(const graph& g, int k_max) {
  if (!is_hamiltonian(g)) return -1;
  const int n = g.order();
  const vertex_set all = g.vertices();
  for (int size = 1; size <= k_max; ++size) {
    if (n - size < 3) return size - 1;
    // subsets of `size` vertices in increasing order (Gosper)
    vertex_set s = low_bits(size);
    while ((s & ~all) == 0) {
      if (!hamilton::has_cycle(g, all & ~s)) return size - 1;
      const vertex_set c = s & (~s + 1);
      const vertex_set r = s + c;
      if (r == 0) break;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return k_max;
}

inline bool is_k_hamiltonian(const graph& g, int k) {
  validate_hamiltonicity_k(g, k, "k-Hamiltonicity");
  return vertex_hamiltonicity_level(g, k) >= k;
}

// ---------------------------------------------------------------------------
// Property descriptors

enum class property_kind { hamiltonian, traceable, hamiltonian_connected, k_edge_hamiltonian, k_hamiltonian, k_connected };

// One forbidden property. Each is (n + offset)-stable, with offset -1, 0, 1,
// k, k for traceability, Hamiltonicity, Hamiltonian-connectedness, k-edge and
// k-Hamiltonicity; k-connectedness is (n + k - 2)-stable but is bounded by
// its own family rather than the main one.
struct property_spec {
  property_kind kind = property_kind::hamiltonian;
  int k = 0;

  static constexpr property_spec hamiltonian() { return {property_kind::hamiltonian, 0}; }
  static constexpr property_spec traceable() { return {property_kind::traceable, 0}; }
  static constexpr property_spec hamiltonian_connected() { return {property_kind::hamiltonian_connected, 0}; }
  static constexpr property_spec k_edge_hamiltonian(int k) { return {property_kind::k_edge_hamiltonian, k}; }
  static constexpr property_spec k_hamiltonian(int k) { return {property_kind::k_hamiltonian, k}; }
  static constexpr property_spec k_connected(int k) { return {property_kind::k_connected, k}; }

  constexpr int offset() const {
    switch (kind) {
      case property_kind::traceable: return -1;
      case property_kind::hamiltonian: return 0;
      case property_kind::hamiltonian_connected: return 1;
      case property_kind::k_edge_hamiltonian:
      case property_kind::k_hamiltonian: return k;
      case property_kind::k_connected: return k - 2;
    }
    return 0;
  }

  constexpr int stability_threshold(int n) const { return n + offset(); }

  // n(P): smallest order from which every complete graph has the property.
  constexpr int min_order() const {
    switch (kind) {
      case property_kind::traceable: return 2;
      case property_kind::hamiltonian: return 3;
      case property_kind::hamiltonian_connected: return 2;
      case property_kind::k_edge_hamiltonian: return 3;
      case property_kind::k_hamiltonian: return k + 3;
      case property_kind::k_connected: return k + 1;
    }
    return 0;
  }

  constexpr bool main_family() const { return kind != property_kind::k_connected; }
  constexpr bool takes_k() const {
    return kind == property_kind::k_edge_hamiltonian || kind == property_kind::k_hamiltonian ||
           kind == property_kind::k_connected;
  }

  std::string name() const {
    switch (kind) {
      case property_kind::hamiltonian: return "hamiltonian";
      case property_kind::traceable: return "traceable";
      case property_kind::hamiltonian_connected: return "hamiltonian-connected";
      case property_kind::k_edge_hamiltonian: return "k-edge-hamiltonian";
      case property_kind::k_hamiltonian: return "k-hamiltonian";
      case property_kind::k_connected: return "k-connected";
    }
    return "?";
  }

  std::string label() const { return takes_k() ? name() + "(" + std::to_string(k) + ")" : name(); }

  friend constexpr bool operator==(const property_spec&, const property_spec&) = default;
};

inline std::optional<property_kind> parse_property_kind(std::string_view s) {
  if (s == "hamiltonian") return property_kind::hamiltonian;
  if (s == "traceable") return property_kind::traceable;
  if (s == "hamiltonian-connected") return property_kind::hamiltonian_connected;
  if (s == "k-edge-hamiltonian") return property_kind::k_edge_hamiltonian;
  if (s == "k-hamiltonian") return property_kind::k_hamiltonian;
  if (s == "k-connected") return property_kind::k_connected;
  return std::nullopt;
}

inline bool has_property(const graph& g, const property_spec& p) {
  if (g.order() < p.min_order())
    throw property_domain_error(p.label() + " needs n >= " + std::to_string(p.min_order()) + " (got " +
                                std::to_string(g.order()) + ")");
  switch (p.kind) {
    case property_kind::hamiltonian: return is_hamiltonian(g);
    case property_kind::traceable: return is_traceable(g);
    case property_kind::hamiltonian_connected: return is_hamiltonian_connected(g);
    case property_kind::k_edge_hamiltonian: return is_k_edge_hamiltonian(g, p.k);
    case property_kind::k_hamiltonian: return is_k_hamiltonian(g, p.k);
    case property_kind::k_connected:
      if (p.k < 1) throw argument_error("k-connectivity: k must be at least 1");
      return is_k_connected(g, p.k);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Closure and degree witness

// Repeatedly joins nonadjacent u, v with d(u) + d(v) >= threshold until no
// such pair remains. The fixpoint does not depend on the order of additions.
inline graph bc_closure(const graph& g, int threshold) {
  if (threshold < 0) throw argument_error("closure threshold must be nonnegative");
  graph h = g;
  const int n = h.order();
  for (bool changed = true; changed;) {
    changed = false;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!h.adjacent(u, v) && h.degree(u) + h.degree(v) >= threshold) {
          h.add_edge(u, v);
          changed = true;
        }
  }
  return h;
}

// Index i* with at least i* vertices of degree <= i* + offset and few
// vertices of degree >= n - i*: at most i* + l of them for the main family,
// at most k - 1 for k-connectivity (whose offset is k - 2).
struct degree_witness {
  int i_star = 0;
  int low_count = 0;   // vertices of degree <= i* + offset
  int high_count = 0;  // vertices of degree >= n - i*

  friend bool operator==(const degree_witness&, const degree_witness&) = default;
};

// Smallest index satisfying the degree condition, if any. Graphs lacking the
// property always have one; graphs having it may or may not.
inline std::optional<degree_witness> chvatal_witness(const graph& g, const property_spec& p) {
  const int n = g.order();
  if (n < p.min_order())
    throw property_domain_error(p.label() + " needs n >= " + std::to_string(p.min_order()));
  const auto d = degree_sequence(g);
  const int off = p.offset();
  const bool conn = p.kind == property_kind::k_connected;
  const int top = conn ? h_top_index(n, p.k) : g_top_index(n, off);
  for (int i = 1; i <= top; ++i) {
    const int high_pos = conn ? n - p.k + 1 : n - i - off;  // 1-based position that must stay <= n-i-1
    if (high_pos < 1 || high_pos > n) continue;
    if (d[i - 1] <= i + off && d[high_pos - 1] <= n - i - 1) {
      degree_witness w;
      w.i_star = i;
      for (int x : d.values()) {
        if (x <= i + off) ++w.low_count;
        if (x >= n - i) ++w.high_count;
      }
      return w;
    }
  }
  return std::nullopt;
}

struct property_report {
  bool has_property = false;
  std::optional<degree_witness> witness;
};

inline property_report check_property(const graph& g, const property_spec& p) {
  return {has_property(g, p), chvatal_witness(g, p)};
}

}  // namespace tstar

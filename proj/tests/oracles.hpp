#pragma once

// Slow reference implementations used only by the tests. None of them shares
// code with the library beyond the graph container itself.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tstar/graph.hpp"

namespace oracle {

using tstar::graph;
using big = boost::multiprecision::cpp_int;

inline big choose(long long m, long long t) {
  if (t < 0 || m < 0 || t > m) return 0;
  big r = 1;
  for (long long j = 0; j < t; ++j) r = r * (m - j) / (j + 1);
  return r;
}

inline big stars(const graph& g, int t) {
  if (t == 1) {
    long long e = 0;
    for (int u = 0; u < g.order(); ++u)
      for (int v = u + 1; v < g.order(); ++v) e += g.adjacent(u, v);
    return e;
  }
  big s = 0;
  for (int v = 0; v < g.order(); ++v) {
    int deg = 0;
    for (int u = 0; u < g.order(); ++u) deg += g.adjacent(u, v);
    s += choose(deg, t);
  }
  return s;
}

// Adjacency by definition of K_{i+l} + (I_i u K_{n-2i-l}): vertices
// [0, i) independent, [i, n-i-l) the clique part, the rest dominating.
inline graph family_g(int n, int ell, int i) {
  graph g(n);
  const int clique_end = n - i - ell;
  auto kind = [&](int v) { return v < i ? 0 : (v < clique_end ? 1 : 2); };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const int a = kind(u), b = kind(v);
      if (a == 2 || b == 2 || (a == 1 && b == 1)) g.add_edge(u, v);
    }
  return g;
}

// K_{k-1} + (K_i u K_{n-k-i+1}): [0, i) small clique, then the large one,
// then the cut.
inline graph family_h(int n, int k, int i) {
  graph g(n);
  const int large_end = n - k + 1;
  auto kind = [&](int v) { return v < i ? 0 : (v < large_end ? 1 : 2); };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (kind(u) == 2 || kind(v) == 2 || kind(u) == kind(v)) g.add_edge(u, v);
  return g;
}

inline std::vector<int> alive(const graph& g, std::uint64_t removed) {
  std::vector<int> vs;
  for (int v = 0; v < g.order(); ++v)
    if (!((removed >> v) & 1U)) vs.push_back(v);
  return vs;
}

// Hamilton cycles as sorted edge lists, each cycle once per direction.
inline std::vector<std::vector<std::pair<int, int>>> cycles(const graph& g, std::uint64_t removed = 0) {
  std::vector<std::vector<std::pair<int, int>>> out;
  auto vs = alive(g, removed);
  if (vs.size() < 3) return out;
  do {
    bool ok = true;
    for (std::size_t j = 0; j < vs.size() && ok; ++j) ok = g.adjacent(vs[j], vs[(j + 1) % vs.size()]);
    if (!ok) continue;
    std::vector<std::pair<int, int>> es;
    for (std::size_t j = 0; j < vs.size(); ++j) {
      int a = vs[j], b = vs[(j + 1) % vs.size()];
      es.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(es.begin(), es.end());
    out.push_back(es);
  } while (std::next_permutation(vs.begin() + 1, vs.end()));
  return out;
}

inline bool hamiltonian(const graph& g, std::uint64_t removed = 0) {
  auto vs = alive(g, removed);
  if (vs.size() < 3) return false;
  do {
    bool ok = true;
    for (std::size_t j = 0; j < vs.size() && ok; ++j) ok = g.adjacent(vs[j], vs[(j + 1) % vs.size()]);
    if (ok) return true;
  } while (std::next_permutation(vs.begin() + 1, vs.end()));
  return false;
}

inline bool path_between(const graph& g, int a, int b) {
  std::vector<int> mid;
  for (int v = 0; v < g.order(); ++v)
    if (v != a && v != b) mid.push_back(v);
  do {
    std::vector<int> p{a};
    p.insert(p.end(), mid.begin(), mid.end());
    p.push_back(b);
    bool ok = true;
    for (std::size_t j = 0; j + 1 < p.size() && ok; ++j) ok = g.adjacent(p[j], p[j + 1]);
    if (ok) return true;
  } while (std::next_permutation(mid.begin(), mid.end()));
  return false;
}

inline bool traceable(const graph& g) {
  if (g.order() == 1) return true;
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      if (path_between(g, a, b)) return true;
  return false;
}

inline bool hamiltonian_connected(const graph& g) {
  if (g.order() == 1) return true;
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b)
      if (!path_between(g, a, b)) return false;
  return true;
}

// Disjoint paths: every vertex of degree <= 2 and no cycle.
inline bool linear_forest(const std::vector<std::pair<int, int>>& es, int n) {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  std::vector<int> root(static_cast<std::size_t>(n));
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int x) { return root[static_cast<std::size_t>(x)] == x ? x : root[static_cast<std::size_t>(x)] = find(root[static_cast<std::size_t>(x)]); };
  for (auto [a, b] : es) {
    if (++deg[static_cast<std::size_t>(a)] > 2 || ++deg[static_cast<std::size_t>(b)] > 2) return false;
    const int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    root[static_cast<std::size_t>(ra)] = rb;
  }
  return true;
}

inline bool k_edge_hamiltonian(const graph& g, int k) {
  const auto cs = cycles(g);
  if (cs.empty()) return false;
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v)) es.emplace_back(u, v);
  const std::size_t m = es.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    if (std::popcount(mask) > k) continue;
    std::vector<std::pair<int, int>> f;
    for (std::size_t j = 0; j < m; ++j)
      if ((mask >> j) & 1U) f.push_back(es[j]);
    if (!linear_forest(f, g.order())) continue;
    bool covered = false;
    for (const auto& c : cs) {
      if (std::includes(c.begin(), c.end(), f.begin(), f.end())) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

inline bool k_hamiltonian(const graph& g, int k) {
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s)
    if (std::popcount(s) <= k && !hamiltonian(g, s)) return false;
  return true;
}

inline bool connected_after(const graph& g, std::uint64_t removed) {
  auto vs = alive(g, removed);
  if (vs.empty()) return true;
  std::set<int> seen{vs[0]};
  std::vector<int> stack{vs[0]};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : vs)
      if (g.adjacent(u, v) && seen.insert(v).second) stack.push_back(v);
  }
  return seen.size() == vs.size();
}

// Smallest set whose removal disconnects g; n - 1 when none does.
inline int connectivity(const graph& g) {
  const int n = g.order();
  int best = std::max(0, n - 1);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const int c = std::popcount(s);
    if (c < best && c <= n - 2 && !connected_after(g, s)) best = c;
  }
  return best;
}

// Number of unlabelled graphs on n vertices by Burnside's lemma, summing
// over cycle types of S_n: a permutation with cycle lengths c_1..c_r acts on
// vertex pairs with sum floor(c_j/2) + sum_{a<b} gcd(c_a, c_b) cycles.
inline big unlabeled_graph_count(int n) {
  big total = 0;
  big factorial = 1;
  for (int j = 2; j <= n; ++j) factorial *= j;
  std::vector<int> parts;
  std::function<void(int, int)> walk = [&](int left, int max_part) {
    if (left == 0) {
      long long pair_cycles = 0;
      for (std::size_t a = 0; a < parts.size(); ++a) {
        pair_cycles += parts[a] / 2;
        for (std::size_t b = a + 1; b < parts.size(); ++b) pair_cycles += std::gcd(parts[a], parts[b]);
      }
      // size of the conjugacy class: n! / prod(c^m_c m_c!)
      big denom = 1;
      for (std::size_t a = 0; a < parts.size();) {
        std::size_t b = a;
        while (b < parts.size() && parts[b] == parts[a]) ++b;
        for (std::size_t r = 1; r <= b - a; ++r) denom *= parts[a] * static_cast<long long>(r);
        a = b;
      }
      total += (factorial / denom) * (big{1} << static_cast<unsigned>(pair_cycles));
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      parts.push_back(p);
      walk(left - p, p);
      parts.pop_back();
    }
  };
  walk(n, n);
  return total / factorial;
}

inline graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline graph shuffled(const graph& g, std::mt19937_64& rng) {
  std::vector<int> pos(static_cast<std::size_t>(g.order()));
  std::iota(pos.begin(), pos.end(), 0);
  std::shuffle(pos.begin(), pos.end(), rng);
  graph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v)) h.add_edge(pos[static_cast<std::size_t>(u)], pos[static_cast<std::size_t>(v)]);
  return h;
}

}  // namespace oracle

#pragma once

// Closed-form star counts for the extremal families
//
//   G^l_n(i) = K_{i+l} + (I_i u K_{n-2i-l})       -1 <= l <= n-3, 1 <= i <= (n-1-l)/2
//   H^k_n(i) = K_{k-1} + (K_i u K_{n-k-i+1})      1 <= k <= n-2,  1 <= i <= (n-k+1)/2
//
// together with the endpoint bounds, the extremal-set descriptor and the
// threshold helpers built on them. Nothing here touches a graph object.
//
// Star convention: s_t = sum_v C(d(v), t) for t >= 2 and s_1 = e(G), half the
// degree sum. Every function below that returns a star count follows it; the
// one exception is gap_series, whose t = 1 values are degree sums (2 e(G)).

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tstar/binomial.hpp"
#include "tstar/errors.hpp"

namespace tstar {

using star_count = big_int;

// ---------------------------------------------------------------------------
// Index ranges

// i_0 for the G family: floor((n-1-l)/2).
constexpr int g_top_index(int n, int ell) { return (n - 1 - ell) / 2; }

// i_d for the G family: max{1, d-l}.
constexpr int g_floor_index(int d, int ell) { return std::max(1, d - ell); }

// Largest admissible minimum degree: floor((n+l-1)/2). Beyond it no n-vertex
// graph lacking an (n+l)-stable property exists.
constexpr int g_max_min_degree(int n, int ell) { return (n + ell - 1) / 2; }

constexpr int h_top_index(int n, int k) { return (n - k + 1) / 2; }
constexpr int h_floor_index(int d, int k) { return std::max(1, d - k + 2); }
constexpr int h_max_min_degree(int n, int k) { return (n + k - 3) / 2; }

inline void validate_g_shape(int n, int ell) {
  if (n < 3) throw argument_error("G family: n must be at least 3 (got " + std::to_string(n) + ")");
  if (ell < -1 || ell > n - 3)
    throw argument_error("G family: ell must lie in [-1, n-3] (got " + std::to_string(ell) + ")");
}

inline void validate_h_shape(int n, int k) {
  if (n < 3) throw argument_error("H family: n must be at least 3 (got " + std::to_string(n) + ")");
  if (k < 1 || k > n - 2)
    throw argument_error("H family: k must lie in [1, n-2] (got " + std::to_string(k) + ")");
}

inline void validate_t(int n, int t) {
  if (t < 1 || t > n - 1)
    throw argument_error("t must lie in [1, n-1] (got t=" + std::to_string(t) + ", n=" + std::to_string(n) + ")");
}

// (n, l, i) naming one member G^l_n(i).
struct family_params {
  int n = 0;
  int ell = 0;
  int i = 0;

  static family_params make(int n, int ell, int i) {
    validate_g_shape(n, ell);
    const int top = g_top_index(n, ell);
    if (i < 1 || i > top)
      throw argument_error("G family: i must lie in [1, " + std::to_string(top) + "] (got " + std::to_string(i) + ")");
    return {n, ell, i};
  }

  int top_index() const { return g_top_index(n, ell); }
  // sizes of the three vertex classes: I_i, K_{n-2i-l}, K_{i+l}
  int independent_size() const { return i; }
  int clique_size() const { return n - 2 * i - ell; }
  int dominating_size() const { return i + ell; }

  friend bool operator==(const family_params&, const family_params&) = default;
  friend auto operator<=>(const family_params&, const family_params&) = default;
};

// (n, k, i) naming one member H^k_n(i).
struct conn_family_params {
  int n = 0;
  int k = 0;
  int i = 0;

  static conn_family_params make(int n, int k, int i) {
    validate_h_shape(n, k);
    const int top = h_top_index(n, k);
    if (i < 1 || i > top)
      throw argument_error("H family: i must lie in [1, " + std::to_string(top) + "] (got " + std::to_string(i) + ")");
    return {n, k, i};
  }

  int top_index() const { return h_top_index(n, k); }
  int small_clique_size() const { return i; }
  int large_clique_size() const { return n - k - i + 1; }
  int cut_size() const { return k - 1; }

  friend bool operator==(const conn_family_params&, const conn_family_params&) = default;
};

// ---------------------------------------------------------------------------
// Degree lists

// Nondecreasing degree sequence.
class degree_list {
 public:
  degree_list() = default;

  explicit degree_list(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    std::sort(degrees_.begin(), degrees_.end());
    const int n = size();
    for (int d : degrees_)
      if (d < 0 || (n > 0 && d > n - 1))
        throw invalid_degree_list("degree " + std::to_string(d) + " outside [0, n-1] for n=" + std::to_string(n));
  }

  int size() const { return static_cast<int>(degrees_.size()); }
  int operator[](int j) const { return degrees_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& values() const { return degrees_; }
  long long sum() const {
    long long s = 0;
    for (int d : degrees_) s += d;
    return s;
  }
  int min() const { return degrees_.empty() ? 0 : degrees_.front(); }

  friend bool operator==(const degree_list&, const degree_list&) = default;

 private:
  std::vector<int> degrees_;
};

template <class Int = big_int>
Int stars_from_degrees(const degree_list& degs, int t) {
  validate_t(degs.size(), t);
  if (t == 1) {
    const long long s = degs.sum();
    if (s % 2 != 0) throw invalid_degree_list("odd degree sum " + std::to_string(s));
    return Int{s / 2};
  }
  Int total{0};
  for (int d : degs.values()) total += binom<Int>(d, t);
  return total;
}

namespace detail {

struct degree_class {
  long long multiplicity;
  long long degree;
};

using three_classes = std::array<degree_class, 3>;

inline three_classes g_classes(int n, int ell, int i) {
  return {{{i, i + ell}, {n - 2 * i - ell, n - i - 1}, {i + ell, n - 1}}};
}

inline three_classes h_classes(int n, int k, int i) {
  return {{{i, i + k - 2}, {n - k - i + 1, n - i - 1}, {k - 1, n - 1}}};
}

inline std::vector<int> expand(const three_classes& classes) {
  std::vector<int> out;
  for (const auto& c : classes) out.insert(out.end(), static_cast<std::size_t>(c.multiplicity), static_cast<int>(c.degree));
  return out;
}

// Sum over classes; with `doubled` the t = 1 value is the degree sum.
template <class Int, class Choose>
Int class_stars(const three_classes& classes, int t, bool doubled, Choose&& choose) {
  Int total{0};
  if (t == 1) {
    long long s = 0;
    for (const auto& c : classes) s += c.multiplicity * c.degree;
    return Int{doubled ? s : s / 2};
  }
  for (const auto& c : classes)
    if (c.multiplicity > 0) total += c.multiplicity * Int(choose(c.degree, t));
  return total;
}

template <class Int>
auto direct_choose() {
  return [](long long m, long long t) { return binom<Int>(m, t); };
}

}  // namespace detail

// i copies of i+l, n-2i-l copies of n-i-1, i+l copies of n-1.
inline degree_list degree_list_g(const family_params& p) {
  const auto checked = family_params::make(p.n, p.ell, p.i);
  return degree_list(detail::expand(detail::g_classes(checked.n, checked.ell, checked.i)));
}

// i copies of i+k-2, n-k-i+1 copies of n-i-1, k-1 copies of n-1.
inline degree_list degree_list_h(const conn_family_params& p) {
  const auto checked = conn_family_params::make(p.n, p.k, p.i);
  return degree_list(detail::expand(detail::h_classes(checked.n, checked.k, checked.i)));
}

template <class Int = big_int>
Int st_g_closed(const family_params& p, int t) {
  const auto q = family_params::make(p.n, p.ell, p.i);
  validate_t(q.n, t);
  return detail::class_stars<Int>(detail::g_classes(q.n, q.ell, q.i), t, false, detail::direct_choose<Int>());
}

template <class Int>
Int st_g_closed(const family_params& p, int t, const binomial_table<Int>& table) {
  validate_t(p.n, t);
  return detail::class_stars<Int>(detail::g_classes(p.n, p.ell, p.i), t, false, std::cref(table));
}

template <class Int = big_int>
Int st_h_closed(const conn_family_params& p, int t) {
  const auto q = conn_family_params::make(p.n, p.k, p.i);
  validate_t(q.n, t);
  return detail::class_stars<Int>(detail::h_classes(q.n, q.k, q.i), t, false, detail::direct_choose<Int>());
}

template <class Int>
Int st_h_closed(const conn_family_params& p, int t, const binomial_table<Int>& table) {
  validate_t(p.n, t);
  return detail::class_stars<Int>(detail::h_classes(p.n, p.k, p.i), t, false, std::cref(table));
}

// ---------------------------------------------------------------------------
// Gap series over the family index

enum class family_kind { g, h };

// values[j] is the count at index i_lo + j; deltas[j] = values[j+1] - values[j].
// At t = 1 the values are degree sums rather than edge counts, so that for
// the H family the t = 1 increments come out as 4i + 2k - 2n - 4.
template <class Int = big_int>
struct gap_series {
  family_kind kind = family_kind::g;
  int n = 0;
  int param = 0;  // l for G, k for H
  int t = 0;
  int i_lo = 0;
  int i_hi = 0;
  std::vector<Int> values;
  std::vector<Int> deltas;

  bool deltas_nondecreasing() const {
    return std::adjacent_find(deltas.begin(), deltas.end(), [](const Int& a, const Int& b) { return b < a; }) ==
           deltas.end();
  }
};

namespace detail {

template <class Int, class Classes, class Choose>
gap_series<Int> build_series(family_kind kind, int n, int param, int t, int i_lo, int i_hi, int top, Classes&& classes,
                             Choose&& choose) {
  if (i_lo < 1 || i_hi > top || i_lo > i_hi)
    throw argument_error("gap series: index range [" + std::to_string(i_lo) + ", " + std::to_string(i_hi) +
                         "] is empty or outside [1, " + std::to_string(top) + "]");
  validate_t(n, t);
  gap_series<Int> s;
  s.kind = kind;
  s.n = n;
  s.param = param;
  s.t = t;
  s.i_lo = i_lo;
  s.i_hi = i_hi;
  s.values.reserve(static_cast<std::size_t>(i_hi - i_lo + 1));
  for (int i = i_lo; i <= i_hi; ++i) s.values.push_back(class_stars<Int>(classes(i), t, true, choose));
  for (std::size_t j = 1; j < s.values.size(); ++j) s.deltas.push_back(s.values[j] - s.values[j - 1]);
  return s;
}

}  // namespace detail

template <class Int = big_int>
gap_series<Int> gap_series_g(int n, int ell, int t, int i_lo, int i_hi) {
  validate_g_shape(n, ell);
  return detail::build_series<Int>(
      family_kind::g, n, ell, t, i_lo, i_hi, g_top_index(n, ell),
      [&](int i) { return detail::g_classes(n, ell, i); }, detail::direct_choose<Int>());
}

template <class Int>
gap_series<Int> gap_series_g(int n, int ell, int t, int i_lo, int i_hi, const binomial_table<Int>& table) {
  validate_g_shape(n, ell);
  return detail::build_series<Int>(
      family_kind::g, n, ell, t, i_lo, i_hi, g_top_index(n, ell),
      [&](int i) { return detail::g_classes(n, ell, i); }, std::cref(table));
}

template <class Int = big_int>
gap_series<Int> gap_series_h(int n, int k, int t, int i_lo, int i_hi) {
  validate_h_shape(n, k);
  return detail::build_series<Int>(
      family_kind::h, n, k, t, i_lo, i_hi, h_top_index(n, k),
      [&](int i) { return detail::h_classes(n, k, i); }, detail::direct_choose<Int>());
}

template <class Int>
gap_series<Int> gap_series_h(int n, int k, int t, int i_lo, int i_hi, const binomial_table<Int>& table) {
  validate_h_shape(n, k);
  return detail::build_series<Int>(
      family_kind::h, n, k, t, i_lo, i_hi, h_top_index(n, k),
      [&](int i) { return detail::h_classes(n, k, i); }, std::cref(table));
}

// ---------------------------------------------------------------------------
// Endpoint bounds

enum class endpoint { id, i0, both };

inline std::string to_string(endpoint e) {
  switch (e) {
    case endpoint::id: return "ID";
    case endpoint::i0: return "I0";
    case endpoint::both: return "BOTH";
  }
  return "?";
}

struct bound_result {
  star_count value;
  endpoint argmax = endpoint::both;
  int i_d = 0;
  int i_0 = 0;
  star_count at_floor;  // count at i_d
  star_count at_top;    // count at i_0
};

inline endpoint compare_endpoints(const star_count& at_floor, const star_count& at_top) {
  if (at_floor == at_top) return endpoint::both;
  return at_floor > at_top ? endpoint::id : endpoint::i0;
}

inline void validate_g_bound(int n, int ell, int d, int t) {
  validate_g_shape(n, ell);
  validate_t(n, t);
  if (d < 0) throw argument_error("minimum degree d must be nonnegative");
  if (d > g_max_min_degree(n, ell))
    throw empty_domain_error("no " + std::to_string(n) + "-vertex graph lacking an (n" + (ell < 0 ? "" : "+") +
                             std::to_string(ell) + ")-stable property has minimum degree " + std::to_string(d) +
                             " (limit " + std::to_string(g_max_min_degree(n, ell)) + ")");
}

// max{ s_t(G^l_n(i_d)), s_t(G^l_n(i_0)) } with the attaining endpoint(s).
inline bound_result bound_main(int n, int ell, int d, int t) {
  validate_g_bound(n, ell, d, t);
  bound_result r;
  r.i_d = g_floor_index(d, ell);
  r.i_0 = g_top_index(n, ell);
  r.at_floor = st_g_closed(family_params{n, ell, r.i_d}, t);
  r.at_top = st_g_closed(family_params{n, ell, r.i_0}, t);
  r.argmax = compare_endpoints(r.at_floor, r.at_top);
  r.value = std::max(r.at_floor, r.at_top);
  return r;
}

// Non-k-connected bound: the left endpoint alone at t = 1, the larger
// endpoint otherwise.
inline bound_result bound_kconn(int n, int k, int d, int t) {
  validate_h_shape(n, k);
  validate_t(n, t);
  if (d < 0) throw argument_error("minimum degree d must be nonnegative");
  if (d > h_max_min_degree(n, k))
    throw empty_domain_error("minimum degree " + std::to_string(d) + " exceeds (n+k-3)/2 = " +
                             std::to_string(h_max_min_degree(n, k)));
  bound_result r;
  r.i_d = h_floor_index(d, k);
  r.i_0 = h_top_index(n, k);
  r.at_floor = st_h_closed(conn_family_params{n, k, r.i_d}, t);
  r.at_top = st_h_closed(conn_family_params{n, k, r.i_0}, t);
  if (t == 1) {
    r.value = r.at_floor;
    r.argmax = r.i_d == r.i_0 ? endpoint::both : endpoint::id;
  } else {
    r.argmax = compare_endpoints(r.at_floor, r.at_top);
    r.value = std::max(r.at_floor, r.at_top);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Extremal set description

struct extremal_component {
  int i = 0;
  bool whole_family = false;  // all of the spanning-subgraph family, else G(i) alone
  big_int labeled_members;    // 2^C(n-2i-l, 2) for a family, 1 otherwise

  friend bool operator==(const extremal_component&, const extremal_component&) = default;
};

struct extremal_descriptor {
  int n = 0;
  int ell = 0;
  int d = 0;
  int t = 0;
  int i_d = 0;
  int i_0 = 0;
  endpoint sign = endpoint::both;  // which endpoint count is larger
  std::vector<extremal_component> components;
};

inline big_int family_member_count(const family_params& p) {
  const long long m = p.clique_size();
  return big_int{1} << static_cast<unsigned>(m * (m - 1) / 2);
}

// Every graph attaining bound_main, as a union of single graphs G(i) and whole
// families. A vertex of the K_{n-2i-l} part has degree n-i-1; once that drops
// below t those vertices carry no stars and their mutual edges are free.
inline extremal_descriptor extremal_family_descriptor(int n, int ell, int d, int t) {
  const auto b = bound_main(n, ell, d, t);
  extremal_descriptor out;
  out.n = n;
  out.ell = ell;
  out.d = d;
  out.t = t;
  out.i_d = b.i_d;
  out.i_0 = b.i_0;
  out.sign = b.argmax;

  auto add = [&](int i, bool family) {
    for (auto& c : out.components) {
      if (c.i == i) {
        if (family && !c.whole_family) {
          c.whole_family = true;
          c.labeled_members = family_member_count(family_params{n, ell, i});
        }
        return;
      }
    }
    out.components.push_back({i, family, family ? family_member_count(family_params{n, ell, i}) : big_int{1}});
  };
  auto family_case = [&](int i) { return t > n - i - 1; };

  switch (b.argmax) {
    case endpoint::i0: add(b.i_0, family_case(b.i_0)); break;
    case endpoint::id: add(b.i_d, family_case(b.i_d)); break;
    case endpoint::both:
      add(b.i_d, family_case(b.i_d));
      add(b.i_0, family_case(b.i_0));
      break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// The l = 0 gap f(n, t) = s_t(G^0_n(1)) - s_t(G^0_n(i_0))

inline void validate_gap(int n, int t) {
  if (n < 4) throw argument_error("gap_f: n must be at least 4");
  validate_t(n, t);
}

inline big_int gap_f(int n, int t) {
  validate_gap(n, t);
  return st_g_closed(family_params{n, 0, 1}, t) - st_g_closed(family_params{n, 0, g_top_index(n, 0)}, t);
}

template <class Int>
Int gap_f(int n, int t, const binomial_table<Int>& table) {
  validate_gap(n, t);
  return st_g_closed(family_params{n, 0, 1}, t, table) - st_g_closed(family_params{n, 0, g_top_index(n, 0)}, t, table);
}

// Parity-split closed form of f, evaluated over the rationals:
//   odd n:  C(n-1,t) [(n-1)/2 - t + t/(n-1)] - C((n-1)/2, t) (n+1)/2
//   even n: C(n-1,t) [n/2 - t + t/(n-1)]     - C(n/2, t) [n/2 - t + 1 + 2t/n]
// It rests on the t >= 2 star formula.
inline big_rational gap_f_closed(int n, int t) {
  validate_gap(n, t);
  if (t < 2) throw argument_error("gap_f_closed: requires t >= 2");
  const big_rational top{binom(n - 1, t)};
  const big_rational nn{n};
  const big_rational tt{t};
  if (n % 2 == 1) {
    return top * ((nn - 1) / 2 - tt + tt / (nn - 1)) - big_rational{binom((n - 1) / 2, t)} * ((nn + 1) / 2);
  }
  return top * (nn / 2 - tt + tt / (nn - 1)) - big_rational{binom(n / 2, t)} * (nn / 2 - tt + 1 + 2 * tt / nn);
}

// ---------------------------------------------------------------------------
// Threshold comparison of the two unconstrained endpoints G(1) and G(i_0)

enum class ordering { g1_larger, i0_larger, equal };

inline std::string to_string(ordering o) {
  switch (o) {
    case ordering::g1_larger: return "G1_LARGER";
    case ordering::i0_larger: return "I0_LARGER";
    case ordering::equal: return "EQUAL";
  }
  return "?";
}

struct threshold_result {
  int n = 0;
  int ell = 0;
  int t = 0;
  ordering order = ordering::equal;
  bool strict = false;
  big_int difference;  // s_t(G(i_0)) - s_t(G(1))
  // Predicted ordering: for t >= (n+l+1)/2 G(1) <= G(i_0) (strict when
  // 0 <= l <= n-5); for l = 0, n >= 4 and smaller t, G(i_0) <= G(1); both
  // l = 0 branches strict once n >= 6.
  bool prediction_applies = false;
  bool prediction_requires_strict = false;
  bool prediction_matches = true;
};

inline bool at_or_above_threshold(int n, int ell, int t) { return 2 * t >= n + ell + 1; }

template <class Int>
threshold_result threshold_compare(int n, int ell, int t, const binomial_table<Int>& table) {
  validate_g_shape(n, ell);
  validate_t(n, t);
  threshold_result r;
  r.n = n;
  r.ell = ell;
  r.t = t;
  const Int g1 = st_g_closed(family_params{n, ell, 1}, t, table);
  const Int g0 = st_g_closed(family_params{n, ell, g_top_index(n, ell)}, t, table);
  r.difference = big_int(g0 - g1);
  r.order = g1 == g0 ? ordering::equal : (g1 > g0 ? ordering::g1_larger : ordering::i0_larger);
  r.strict = r.order != ordering::equal;

  std::optional<ordering> predicted;
  if (at_or_above_threshold(n, ell, t)) {
    predicted = ordering::i0_larger;
    r.prediction_requires_strict = (ell >= 0 && ell <= n - 5) || (ell == 0 && n >= 6);
  } else if (ell == 0 && n >= 4) {
    predicted = ordering::g1_larger;
    r.prediction_requires_strict = n >= 6;
  }
  r.prediction_applies = predicted.has_value();
  if (predicted) {
    const bool weak_ok = r.order == *predicted || r.order == ordering::equal;
    r.prediction_matches = weak_ok && (!r.prediction_requires_strict || r.order == *predicted);
  }
  return r;
}

inline threshold_result threshold_compare(int n, int ell, int t) {
  const binomial_table<big_int> table(n);
  return threshold_compare(n, ell, t, table);
}

// ---------------------------------------------------------------------------
// Scanner for the open small-t regime: t < (n+l+1)/2

struct conjecture_row {
  int n = 0;
  int ell = 0;
  int t = 0;
  int sign = 0;  // sign of s_t(G(i_0)) - s_t(G(1)); -1 is the conjectured outcome
};

// For a fixed pattern (l and either t or the distance below the threshold),
// the smallest scanned n from which every later scanned n shows sign -1.
struct persistence_entry {
  int ell = 0;
  int key = 0;        // t, or ceil((n+l+1)/2) - t
  int first_n = 0;    // first n at which the pattern was scanned
  int last_n = 0;
  std::optional<int> persistent_from;
};

struct conjecture_scan_result {
  std::vector<conjecture_row> rows;
  std::vector<persistence_entry> by_t;
  std::vector<persistence_entry> by_offset;
};

inline conjecture_scan_result conjecture_scan(int n_lo, int n_hi, int ell_lo, int ell_hi,
                                              const std::function<void(const conjecture_row&)>& emit = {}) {
  if (n_lo > n_hi || ell_lo > ell_hi) throw argument_error("conjecture_scan: empty range");
  if (n_lo < 3) throw argument_error("conjecture_scan: n must be at least 3");
  const binomial_table<big_int> table(n_hi);
  conjecture_scan_result out;
  std::map<std::pair<int, int>, persistence_entry> by_t;
  std::map<std::pair<int, int>, persistence_entry> by_offset;
  auto track = [](std::map<std::pair<int, int>, persistence_entry>& m, int ell, int key, int n, int sign) {
    auto [it, fresh] = m.try_emplace({ell, key});
    auto& e = it->second;
    if (fresh) {
      e.ell = ell;
      e.key = key;
      e.first_n = n;
    }
    e.last_n = n;
    if (sign < 0) {
      if (!e.persistent_from) e.persistent_from = n;
    } else {
      e.persistent_from.reset();
    }
  };

  for (int n = n_lo; n <= n_hi; ++n) {
    for (int ell = std::max(ell_lo, -1); ell <= std::min(ell_hi, n - 3); ++ell) {
      const int top = g_top_index(n, ell);
      for (int t = 1; t <= n - 1 && !at_or_above_threshold(n, ell, t); ++t) {
        const big_int g1 = st_g_closed(family_params{n, ell, 1}, t, table);
        const big_int g0 = st_g_closed(family_params{n, ell, top}, t, table);
        conjecture_row row{n, ell, t, g0 < g1 ? -1 : (g0 == g1 ? 0 : 1)};
        if (emit) emit(row);
        out.rows.push_back(row);
        const int threshold = (n + ell + 2) / 2;  // ceil((n+l+1)/2)
        track(by_t, ell, t, n, row.sign);
        track(by_offset, ell, threshold - t, n, row.sign);
      }
    }
  }
  for (auto& [key, e] : by_t) out.by_t.push_back(e);
  for (auto& [key, e] : by_offset) out.by_offset.push_back(e);
  return out;
}

}  // namespace tstar

#pragma once

// Brute-force extremal oracle over isomorph-free enumeration.
//
// For each order the oracle enumerates every graph once, records its
// minimum degree and star counts, and classifies it once per property kind
// by a level: "has P(k)" is then "level >= k". Individual (n, d, P, t) cells
// are answered from these tables and compared with the closed-form bounds
// and, for the main family, with the predicted extremal set.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "tstar/canonical.hpp"
#include "tstar/connectivity.hpp"
#include "tstar/counts.hpp"
#include "tstar/enumerate.hpp"
#include "tstar/errors.hpp"
#include "tstar/family.hpp"
#include "tstar/graph.hpp"
#include "tstar/properties.hpp"

namespace tstar {

enum class search_mode { max_only, max_with_extremals };
enum class verdict { matches_bound, below_bound, violation, empty_domain };
enum class set_status { match, mismatch, not_applicable };

inline std::string to_string(verdict v) {
  switch (v) {
    case verdict::matches_bound: return "MATCHES_BOUND";
    case verdict::below_bound: return "BELOW_BOUND";
    case verdict::violation: return "VIOLATION";
    case verdict::empty_domain: return "EMPTY_DOMAIN";
  }
  return "?";
}

inline std::string to_string(set_status s) {
  switch (s) {
    case set_status::match: return "MATCH";
    case set_status::mismatch: return "MISMATCH";
    case set_status::not_applicable: return "NOT_APPLICABLE";
  }
  return "?";
}

struct search_task {
  int n = 0;
  int d = 0;
  property_spec property;
  int t = 1;
  search_mode mode = search_mode::max_with_extremals;
};

struct search_report {
  search_task task;
  verdict outcome = verdict::empty_domain;
  std::optional<star_count> max_count;  // none when no graph qualifies
  std::vector<std::string> extremal_graphs;  // sorted canonical graph6
  star_count bound;
  endpoint bound_argmax = endpoint::both;
  set_status extremal_set = set_status::not_applicable;
  std::vector<std::string> predicted;  // sorted canonical graph6, main family only
  std::size_t candidates = 0;          // graphs with delta >= d lacking the property

  // -1 / 0 in ell_or_k position for the main properties, k otherwise
  int parameter() const { return task.property.kind == property_kind::k_connected ? task.property.k : task.property.offset(); }
};

// Rejects malformed tasks; a too-large d is not an error but an empty domain.
inline void validate_task(const search_task& task) {
  const auto& p = task.property;
  if (task.n < 3 || task.n > enumeration_limit)
    throw argument_error("search supports 3 <= n <= 10 (got n=" + std::to_string(task.n) + ")");
  if (p.kind == property_kind::k_edge_hamiltonian || p.kind == property_kind::k_hamiltonian) {
    if (p.k < 1 || p.k > task.n - 3)
      throw argument_error(p.name() + ": k must lie in [1, n-3] (got k=" + std::to_string(p.k) + ")");
  } else if (p.kind == property_kind::k_connected) {
    if (p.k < 1 || p.k > task.n - 2)
      throw argument_error("k-connected: k must lie in [1, n-2] (got k=" + std::to_string(p.k) + ")");
  }
  if (task.n < p.min_order())
    throw argument_error(p.label() + " needs n >= " + std::to_string(p.min_order()));
  validate_t(task.n, task.t);
  if (task.d < 0) throw argument_error("minimum degree d must be nonnegative");
}

inline int max_min_degree(int n, const property_spec& p) {
  return p.main_family() ? g_max_min_degree(n, p.offset()) : h_max_min_degree(n, p.k);
}

inline constexpr std::uint64_t default_budget = 10'000'000;

class extremal_oracle {
 public:
  explicit extremal_oracle(unsigned workers = 1, std::optional<std::uint64_t> budget = std::nullopt)
      : workers_(std::max(1U, workers)), budget_(budget) {}

  std::uint64_t evaluations() const noexcept { return evaluations_; }

  search_report run(const search_task& task) {
    validate_task(task);
    search_report r;
    r.task = task;
    const auto& p = task.property;
    if (task.d > max_min_degree(task.n, p)) {
      r.outcome = verdict::empty_domain;
      return r;
    }
    const bound_result b = p.main_family() ? bound_main(task.n, p.offset(), task.d, task.t)
                                           : bound_kconn(task.n, p.k, task.d, task.t);
    r.bound = b.value;
    r.bound_argmax = b.argmax;

    const auto& pop = population(task.n);
    const auto& lv = levels(task.n, p.kind);
    long long best = -1;
    std::vector<std::size_t> argmax;
    for (std::size_t j = 0; j < pop.graphs.size(); ++j) {
      if (pop.min_degree[j] < task.d || holds(p, lv[j])) continue;
      ++r.candidates;
      const long long s = pop.stars[j][static_cast<std::size_t>(task.t)];
      if (s > best) {
        best = s;
        argmax.clear();
      }
      if (s == best) argmax.push_back(j);
    }
    if (best < 0) {
      r.outcome = verdict::below_bound;
    } else {
      r.max_count = star_count{best};
      r.outcome = *r.max_count == r.bound ? verdict::matches_bound
                  : *r.max_count < r.bound ? verdict::below_bound
                                           : verdict::violation;
    }
    if (task.mode == search_mode::max_with_extremals) {
      for (std::size_t j : argmax) r.extremal_graphs.push_back(canonical(task.n, j));
      std::sort(r.extremal_graphs.begin(), r.extremal_graphs.end());
      if (p.main_family()) {
        r.predicted = predicted_extremal_set(task.n, p.offset(), task.d, task.t);
        r.extremal_set = r.predicted == r.extremal_graphs ? set_status::match : set_status::mismatch;
      }
    }
    return r;
  }

  // Property-lacking graphs of order n (any minimum degree) with no degree
  // witness; empty when the witness theorem holds throughout.
  std::vector<std::string> witness_failures(int n, const property_spec& p) {
    const auto& pop = population(n);
    const auto& lv = levels(n, p.kind);
    std::vector<std::string> bad;
    for (std::size_t j = 0; j < pop.graphs.size(); ++j)
      if (!holds(p, lv[j]) && !chvatal_witness(pop.graphs[j], p)) bad.push_back(canonical(n, j));
    return bad;
  }

  // Canonical forms of every member of the spanning-subgraph family at i, up
  // to isomorphism: K_{i+l} + (I_i u H) for each graph H on n-2i-l vertices.
  const std::vector<std::string>& family_classes(int n, int ell, int i) {
    const auto key = std::make_tuple(n, ell, i);
    auto it = families_.find(key);
    if (it != families_.end()) return it->second;
    const auto fp = family_params::make(n, ell, i);
    std::set<std::string> forms;
    for (const graph& h : graphs_up_to_iso(fp.clique_size(), 0))
      forms.insert(canonical_form(graph_join(complete_graph(fp.dominating_size()),
                                             disjoint_union(empty_graph(fp.independent_size()), h))));
    return families_.emplace(key, std::vector<std::string>(forms.begin(), forms.end())).first->second;
  }

  std::vector<std::string> predicted_extremal_set(int n, int ell, int d, int t) {
    const auto desc = extremal_family_descriptor(n, ell, d, t);
    std::set<std::string> forms;
    for (const auto& c : desc.components) {
      if (c.whole_family) {
        const auto& f = family_classes(n, ell, c.i);
        forms.insert(f.begin(), f.end());
      } else {
        forms.insert(canonical_form(build_g(family_params{n, ell, c.i})));
      }
    }
    return {forms.begin(), forms.end()};
  }

  std::size_t population_size(int n) { return population(n).graphs.size(); }

  static bool holds(const property_spec& p, int level) {
    switch (p.kind) {
      case property_kind::hamiltonian:
      case property_kind::traceable:
      case property_kind::hamiltonian_connected: return level >= 1;
      default: return level >= p.k;
    }
  }

 private:
  struct graph_table {
    std::vector<graph> graphs;
    std::vector<int> min_degree;
    std::vector<std::vector<long long>> stars;  // stars[j][t], t = 0..n-1
    std::vector<std::string> canon;             // filled lazily
  };

  const graph_table& population(int n) {
    auto it = tables_.find(n);
    if (it != tables_.end()) return it->second;
    graph_table tab;
    tab.graphs = graphs_up_to_iso(n, 0, workers_);
    for (const graph& g : tab.graphs) {
      tab.min_degree.push_back(g.min_degree());
      std::vector<long long> s(static_cast<std::size_t>(n), 0);
      for (int t = 1; t < n; ++t) s[static_cast<std::size_t>(t)] = count_stars<long long>(g, t);
      tab.stars.push_back(std::move(s));
    }
    tab.canon.resize(tab.graphs.size());
    return tables_.emplace(n, std::move(tab)).first->second;
  }

  const std::string& canonical(int n, std::size_t j) {
    auto& tab = tables_.at(n);
    if (tab.canon[j].empty()) tab.canon[j] = canonical_form(tab.graphs[j]);
    return tab.canon[j];
  }

  static int level_of(const graph& g, property_kind kind) {
    const int kmax = std::max(0, g.order() - 3);
    switch (kind) {
      case property_kind::hamiltonian: return is_hamiltonian(g) ? 1 : 0;
      case property_kind::traceable: return is_traceable(g) ? 1 : 0;
      case property_kind::hamiltonian_connected: return is_hamiltonian_connected(g) ? 1 : 0;
      case property_kind::k_edge_hamiltonian: return edge_hamiltonicity_level(g, kmax);
      case property_kind::k_hamiltonian: return vertex_hamiltonicity_level(g, kmax);
      case property_kind::k_connected: return vertex_connectivity(g);
    }
    return 0;
  }

  const std::vector<int>& levels(int n, property_kind kind) {
    const auto key = std::make_pair(n, kind);
    auto it = levels_.find(key);
    if (it != levels_.end()) return it->second;
    const auto& pop = population(n);
    const std::uint64_t cost = pop.graphs.size();
    if (budget_ && evaluations_ + cost > *budget_)
      throw budget_exceeded("evaluation budget of " + std::to_string(*budget_) + " exhausted at n=" +
                            std::to_string(n));
    evaluations_ += cost;
    std::vector<int> out(pop.graphs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t j; (j = next.fetch_add(1)) < out.size();) out[j] = level_of(pop.graphs[j], kind);
    };
    if (workers_ == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers_; ++w) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }
    return levels_.emplace(key, std::move(out)).first->second;
  }

  unsigned workers_;
  std::optional<std::uint64_t> budget_;
  std::uint64_t evaluations_ = 0;
  std::map<int, graph_table> tables_;
  std::map<std::pair<int, property_kind>, std::vector<int>> levels_;
  std::map<std::tuple<int, int, int>, std::vector<std::string>> families_;
};

inline search_report extremal_search(const search_task& task) { return extremal_oracle().run(task); }

// ---------------------------------------------------------------------------
// Verification sweep

struct verify_config {
  int n_min = 4;
  int n_max = 7;
  std::vector<property_kind> kinds{property_kind::hamiltonian,   property_kind::traceable,
                                   property_kind::hamiltonian_connected, property_kind::k_edge_hamiltonian,
                                   property_kind::k_hamiltonian, property_kind::k_connected};
  int kedge_n_max = 7;           // k-edge rows only up to this order
  std::optional<int> k_max;      // cap on k for k-edge and k-Hamiltonicity
  search_mode mode = search_mode::max_with_extremals;
  unsigned workers = 1;
  std::optional<std::uint64_t> budget;
};

struct verify_summary {
  std::vector<search_report> rows;
  bool complete = true;
  std::string stop_reason;
  std::size_t matches = 0;
  std::size_t below = 0;
  std::size_t violations = 0;
  std::size_t empty = 0;
  std::size_t set_matches = 0;
  std::size_t set_mismatches = 0;
  std::size_t multiplicity_cells = 0;  // matched cells whose extremal set has a whole family
  std::vector<std::pair<std::string, std::string>> witness_failures;  // (property label, graph6)

  bool passed() const {
    return complete && below == 0 && violations == 0 && set_mismatches == 0 && witness_failures.empty();
  }
};

// Properties swept at order n under the config, in output order.
inline std::vector<property_spec> sweep_properties(const verify_config& cfg, int n) {
  std::vector<property_spec> out;
  for (property_kind kind : cfg.kinds) {
    switch (kind) {
      case property_kind::hamiltonian: out.push_back(property_spec::hamiltonian()); break;
      case property_kind::traceable: out.push_back(property_spec::traceable()); break;
      case property_kind::hamiltonian_connected: out.push_back(property_spec::hamiltonian_connected()); break;
      case property_kind::k_edge_hamiltonian:
        if (n > cfg.kedge_n_max) break;
        for (int k = 1; k <= n - 3 && (!cfg.k_max || k <= *cfg.k_max); ++k)
          out.push_back(property_spec::k_edge_hamiltonian(k));
        break;
      case property_kind::k_hamiltonian:
        for (int k = 1; k <= n - 3 && (!cfg.k_max || k <= *cfg.k_max); ++k)
          out.push_back(property_spec::k_hamiltonian(k));
        break;
      case property_kind::k_connected:
        for (int k = 1; k <= n - 2; ++k) out.push_back(property_spec::k_connected(k));
        break;
    }
  }
  return out;
}

// Every (n, property, d, t) cell in order; row(report) sees each as it lands.
template <class RowSink>
verify_summary run_verification(const verify_config& cfg, RowSink&& row) {
  if (cfg.n_min < 3 || cfg.n_max > enumeration_limit || cfg.n_min > cfg.n_max)
    throw argument_error("verification orders must satisfy 3 <= n_min <= n_max <= 10");
  verify_summary sum;
  extremal_oracle oracle(cfg.workers, cfg.budget);
  try {
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
      for (const property_spec& p : sweep_properties(cfg, n)) {
        for (int d = 0; d <= max_min_degree(n, p); ++d) {
          for (int t = 1; t < n; ++t) {
            auto r = oracle.run(search_task{n, d, p, t, cfg.mode});
            switch (r.outcome) {
              case verdict::matches_bound: ++sum.matches; break;
              case verdict::below_bound: ++sum.below; break;
              case verdict::violation: ++sum.violations; break;
              case verdict::empty_domain: ++sum.empty; break;
            }
            if (r.extremal_set == set_status::match) ++sum.set_matches;
            if (r.extremal_set == set_status::mismatch) ++sum.set_mismatches;
            if (r.extremal_set == set_status::match && r.task.t > 1) {
              const auto desc = extremal_family_descriptor(n, p.offset(), d, t);
              for (const auto& c : desc.components)
                if (c.whole_family && c.labeled_members > 1) {
                  ++sum.multiplicity_cells;
                  break;
                }
            }
            row(r);
            sum.rows.push_back(std::move(r));
          }
        }
        for (auto& g6 : oracle.witness_failures(n, p)) sum.witness_failures.emplace_back(p.label(), g6);
      }
    }
  } catch (const budget_exceeded& e) {
    sum.complete = false;
    sum.stop_reason = e.what();
  }
  return sum;
}

inline verify_summary run_verification(const verify_config& cfg) {
  return run_verification(cfg, [](const search_report&) {});
}

// ---------------------------------------------------------------------------
// The two-member family at n = 10, l = 0, d = 4

struct family_check_row {
  int t = 0;
  star_count first;   // K_4 + (I_4 u K_2)
  star_count second;  // K_4 + (I_4 u I_2)
  star_count bound;
};

struct family_check_report {
  int i_d = 0;
  int i_0 = 0;
  std::size_t members = 0;
  bool both_non_hamiltonian = false;
  std::vector<family_check_row> rows;  // t = 5..9
  bool ok = false;
};

inline family_check_report verify_example_34() {
  constexpr int n = 10, ell = 0, d = 4;
  family_check_report out;
  out.i_d = g_floor_index(d, ell);
  out.i_0 = g_top_index(n, ell);
  std::vector<graph> members;
  auto cursor = enumerate_family(family_params{n, ell, out.i_0});
  while (auto g = cursor.next()) members.push_back(*g);
  out.members = members.size();
  out.both_non_hamiltonian =
      std::none_of(members.begin(), members.end(), [](const graph& g) { return is_hamiltonian(g); });
  bool ok = out.i_d == 4 && out.i_0 == 4 && members.size() == 2 && out.both_non_hamiltonian;
  for (int t = 5; t <= 9; ++t) {
    family_check_row row{t, count_stars(members[0], t), count_stars(members[1], t), bound_main(n, ell, d, t).value};
    if (t == 5)
      ok = ok && row.first != row.second;
    else
      ok = ok && row.first == row.second && row.first == row.bound;
    out.rows.push_back(row);
  }
  out.ok = ok;
  return out;
}

}  // namespace tstar

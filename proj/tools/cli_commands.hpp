#pragma once

// Subcommands of the tstar tool. Each command writes to the given streams and
// returns the process exit code, so the test suite can drive them directly.
//
// Exit codes: 0 success, 2 bad arguments, 3 empty domain, 4 budget
// exhausted, 5 verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "tstar/tstar.hpp"

namespace tstar::cli {

enum exit_code : int { ok = 0, bad_arguments = 2, empty_domain = 3, over_budget = 4, verification_failed = 5 };

using json = nlohmann::ordered_json;

struct int_range {
  int lo = 0;
  int hi = 0;
};

// "a:b" or a single integer.
inline int_range parse_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw argument_error("bad range '" + text + "'");
    return v;
  };
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    const int v = to_int(text);
    return {v, v};
  }
  const int_range r{to_int(text.substr(0, colon)), to_int(text.substr(colon + 1))};
  if (r.lo > r.hi) throw argument_error("empty range '" + text + "'");
  return r;
}

inline std::optional<std::uint64_t> budget_from_env() {
  const char* v = std::getenv("STAR_EXTREMAL_BUDGET");
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  const unsigned long long b = std::strtoull(v, &end, 10);
  if (*end != '\0') throw argument_error("STAR_EXTREMAL_BUDGET must be a nonnegative integer");
  return b;
}

// Graph6 lines from --graph values, else from the input stream. Blank lines
// are skipped.
inline std::vector<graph> read_graphs(const std::vector<std::string>& given, std::istream& in) {
  std::vector<graph> out;
  if (!given.empty()) {
    for (const auto& s : given) out.push_back(graph6_decode(s));
    return out;
  }
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(graph6_decode(line));
  }
  return out;
}

inline std::string join_strings(const std::vector<std::string>& v, char sep) {
  std::string s;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j) s += sep;
    s += v[j];
  }
  return s;
}

inline property_spec make_property(const std::string& name, int k) {
  const auto kind = parse_property_kind(name);
  if (!kind) throw argument_error("unknown property '" + name + "'");
  property_spec p{*kind, 0};
  if (p.takes_k()) {
    if (k < 0) throw argument_error(name + " needs -k");
    p.k = k;
  }
  return p;
}

// ---------------------------------------------------------------------------

struct construct_options {
  std::string family = "G";
  int n = 0;
  int ell = 0;
  int k = 1;
  int i = 1;
};

inline int cmd_construct(const construct_options& o, std::ostream& out) {
  graph g = o.family == "G" ? build_g(family_params{o.n, o.ell, o.i}) : build_h(conn_family_params{o.n, o.k, o.i});
  out << graph6_encode(g) << '\n';
  return ok;
}

inline int cmd_stars(const std::vector<graph>& graphs, int t, std::ostream& out) {
  for (const graph& g : graphs) {
    validate_t(std::max(g.order(), 2), t);
    out << count_stars(g, t) << '\n';
  }
  return ok;
}

inline int cmd_check(const std::vector<graph>& graphs, const property_spec& p, std::ostream& out) {
  out << "graph6,property,k,has_property,witness_i,low_count,high_count\n";
  for (const graph& g : graphs) {
    const auto r = check_property(g, p);
    out << graph6_encode(g) << ',' << p.name() << ',' << (p.takes_k() ? std::to_string(p.k) : "") << ','
        << (r.has_property ? "true" : "false") << ',';
    if (r.witness)
      out << r.witness->i_star << ',' << r.witness->low_count << ',' << r.witness->high_count;
    else
      out << ",,";
    out << '\n';
  }
  return ok;
}

struct bound_options {
  bool kconn = false;
  int n = 0;
  int ell = 0;
  int k = 1;
  int d = 0;
  int t = 1;
  std::string format = "csv";
};

inline int cmd_bound(const bound_options& o, std::ostream& out) {
  const bound_result b = o.kconn ? bound_kconn(o.n, o.k, o.d, o.t) : bound_main(o.n, o.ell, o.d, o.t);
  std::string size;
  std::vector<std::string> parts;
  if (!o.kconn) {
    const auto desc = extremal_family_descriptor(o.n, o.ell, o.d, o.t);
    big_int total = 0;
    for (const auto& c : desc.components) {
      total += c.labeled_members;
      parts.push_back((c.whole_family ? "family(" : "G(") + std::to_string(c.i) + ")");
    }
    size = total.str();
  }
  if (o.format == "json") {
    json j{{"n", o.n},
           {"ell_or_k", o.kconn ? o.k : o.ell},
           {"kind", o.kconn ? "kconn" : "main"},
           {"d", o.d},
           {"t", o.t},
           {"bound", b.value.str()},
           {"argmax", to_string(b.argmax)},
           {"i_d", b.i_d},
           {"i_0", b.i_0},
           {"at_i_d", b.at_floor.str()},
           {"at_i_0", b.at_top.str()}};
    if (!o.kconn) {
      j["family_size"] = size;
      j["extremal_set"] = parts;
    }
    out << j.dump(2) << '\n';
    return ok;
  }
  out << "n,ell_or_k,d,t,bound,argmax,i_d,i_0,at_i_d,at_i_0,family_size,extremal_set\n";
  out << o.n << ',' << (o.kconn ? o.k : o.ell) << ',' << o.d << ',' << o.t << ',' << b.value << ','
      << to_string(b.argmax) << ',' << b.i_d << ',' << b.i_0 << ',' << b.at_floor << ',' << b.at_top << ',' << size
      << ',' << join_strings(parts, ';') << '\n';
  return ok;
}

// ---------------------------------------------------------------------------
// verify

inline json report_json(const search_report& r) {
  json j{{"n", r.task.n},
         {"ell_or_k", r.parameter()},
         {"d", r.task.d},
         {"t", r.task.t},
         {"property", r.task.property.name()},
         {"bound", r.outcome == verdict::empty_domain ? json(nullptr) : json(r.bound.str())},
         {"observed_max", r.max_count ? json(r.max_count->str()) : json(nullptr)},
         {"verdict", to_string(r.outcome)},
         {"extremal_set", to_string(r.extremal_set)},
         {"candidates", r.candidates},
         {"extremal_graphs", r.extremal_graphs},
         {"predicted", r.predicted}};
  return j;
}

inline const char* csv_header() { return "n,ell_or_k,d,t,property,bound,observed_max,verdict,extremal_count\n"; }

inline void write_csv_row(std::ostream& out, const search_report& r) {
  out << r.task.n << ',' << r.parameter() << ',' << r.task.d << ',' << r.task.t << ',' << r.task.property.name()
      << ',' << (r.outcome == verdict::empty_domain ? std::string() : r.bound.str()) << ','
      << (r.max_count ? r.max_count->str() : std::string()) << ',' << to_string(r.outcome) << ','
      << r.extremal_graphs.size() << '\n';
}

inline json summary_json(const verify_config& cfg, const verify_summary& s) {
  json failures = json::array();
  for (const auto& [label, g6] : s.witness_failures) failures.push_back({{"property", label}, {"graph6", g6}});
  return json{{"n_min", cfg.n_min},
              {"n_max", cfg.n_max},
              {"complete", s.complete},
              {"stop_reason", s.complete ? json(nullptr) : json(s.stop_reason)},
              {"passed", s.passed()},
              {"counts",
               {{"rows", s.rows.size()},
                {"matches_bound", s.matches},
                {"below_bound", s.below},
                {"violation", s.violations},
                {"set_match", s.set_matches},
                {"set_mismatch", s.set_mismatches},
                {"multiplicity_cells", s.multiplicity_cells}}},
              {"witness_failures", failures}};
}

inline int verify_exit(const verify_summary& s) {
  if (!s.complete) return over_budget;
  return s.passed() ? ok : verification_failed;
}

inline int cmd_verify(const verify_config& cfg, const std::string& format, std::ostream& out, std::ostream& err) {
  if (format == "json") {
    const auto s = run_verification(cfg);
    json report = summary_json(cfg, s);
    json rows = json::array();
    for (const auto& r : s.rows) rows.push_back(report_json(r));
    report["rows"] = rows;
    out << report.dump(2) << '\n';
    if (!s.complete) err << "incomplete: " << s.stop_reason << '\n';
    return verify_exit(s);
  }
  out << csv_header();
  const auto s = run_verification(cfg, [&](const search_report& r) { write_csv_row(out, r); });
  if (!s.complete) {
    out << "# incomplete: " << s.stop_reason << '\n';
    err << "incomplete: " << s.stop_reason << '\n';
  }
  for (const auto& [label, g6] : s.witness_failures) err << "no degree witness: " << label << ' ' << g6 << '\n';
  return verify_exit(s);
}

inline int cmd_family_check(std::ostream& out) {
  const auto r = verify_example_34();
  out << "t,first_member,second_member,bound,equal\n";
  for (const auto& row : r.rows)
    out << row.t << ',' << row.first << ',' << row.second << ',' << row.bound << ','
        << (row.first == row.second ? "true" : "false") << '\n';
  return r.ok ? ok : verification_failed;
}

// ---------------------------------------------------------------------------
// scan

inline int cmd_scan_threshold(int_range n, int_range ell, unsigned workers, std::ostream& out) {
  if (n.lo < 3) throw argument_error("scan: n must be at least 3");
  const binomial_table<big_int> table(n.hi);
  const int count = n.hi - n.lo + 1;
  std::vector<std::vector<threshold_result>> per_n(static_cast<std::size_t>(count));
  std::atomic<int> next{0};
  auto work = [&] {
    for (int j; (j = next.fetch_add(1)) < count;) {
      const int m = n.lo + j;
      for (int l = std::max(ell.lo, -1); l <= std::min(ell.hi, m - 3); ++l)
        for (int t = 1; t < m; ++t) per_n[static_cast<std::size_t>(j)].push_back(threshold_compare(m, l, t, table));
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  std::size_t rows = 0;
  bool consistent = true;
  out << "n,ell,t,difference,ordering,prediction_applies,prediction_strict,consistent\n";
  for (const auto& block : per_n) {
    for (const auto& r : block) {
      ++rows;
      consistent = consistent && r.prediction_matches;
      out << r.n << ',' << r.ell << ',' << r.t << ',' << r.difference << ',' << to_string(r.order) << ','
          << (r.prediction_applies ? "true" : "false") << ',' << (r.prediction_requires_strict ? "true" : "false")
          << ',' << (r.prediction_matches ? "true" : "false") << '\n';
    }
  }
  if (rows == 0) throw argument_error("scan: no (n, ell) pair in range");
  return consistent ? ok : verification_failed;
}

inline int cmd_scan_conjecture(int_range n, int_range ell, bool summary, std::ostream& out) {
  if (summary) {
    const auto s = conjecture_scan(n.lo, n.hi, ell.lo, ell.hi);
    if (s.rows.empty()) throw argument_error("scan: no (n, ell, t) below threshold in range");
    out << "pattern,ell,key,first_n,last_n,negative_from\n";
    auto dump = [&](const char* name, const std::vector<persistence_entry>& v) {
      for (const auto& e : v)
        out << name << ',' << e.ell << ',' << e.key << ',' << e.first_n << ',' << e.last_n << ','
            << (e.persistent_from ? std::to_string(*e.persistent_from) : std::string()) << '\n';
    };
    dump("t", s.by_t);
    dump("offset", s.by_offset);
    return ok;
  }
  out << "n,ell,t,sign\n";
  std::size_t rows = 0;
  conjecture_scan(n.lo, n.hi, ell.lo, ell.hi, [&](const conjecture_row& r) {
    ++rows;
    out << r.n << ',' << r.ell << ',' << r.t << ',' << r.sign << '\n';
  });
  if (rows == 0) throw argument_error("scan: no (n, ell, t) below threshold in range");
  return ok;
}

inline int cmd_closure(const std::vector<graph>& graphs, int threshold, std::ostream& out) {
  for (const graph& g : graphs) out << graph6_encode(bc_closure(g, threshold)) << '\n';
  return ok;
}

// ---------------------------------------------------------------------------
// Front end

inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Star counts, extremal families and exhaustive checks for Hamiltonicity-type properties", "tstar"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tstar 1.0.0");

  std::string out_path;
  app.add_option("--out", out_path, "Write results to this file instead of standard output");

  construct_options co;
  auto* construct = app.add_subcommand("construct", "Print G^l_n(i) or H^k_n(i) as graph6");
  construct->add_option("--family", co.family, "G or H")->check(CLI::IsMember({"G", "H"}))->required();
  construct->add_option("-n", co.n, "Order")->required();
  construct->add_option("-l,--ell", co.ell, "ell for the G family");
  construct->add_option("-k", co.k, "k for the H family");
  construct->add_option("-i", co.i, "Index i")->required();

  std::vector<std::string> graphs_in;
  std::string input_path;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("-g,--graph", graphs_in, "graph6 string (repeatable); otherwise read lines from input");
    sub->add_option("--input", input_path, "Read graph6 lines from this file")->check(CLI::ExistingFile);
  };

  int t = 1;
  auto* stars = app.add_subcommand("stars", "Count t-stars of graph6 input");
  stars->add_option("-t", t, "Star size (t = 1 counts edges)")->required();
  add_input(stars);

  std::string prop_name;
  int prop_k = -1;
  auto* check = app.add_subcommand("check", "Decide a property and report the degree witness");
  check->add_option("--property", prop_name, "hamiltonian, traceable, hamiltonian-connected, k-edge-hamiltonian, "
                                             "k-hamiltonian or k-connected")
      ->required();
  check->add_option("-k", prop_k, "k for the quantified properties");
  add_input(check);

  bound_options bo;
  auto* bound = app.add_subcommand("bound", "Closed-form bound with its extremal set");
  auto* main_flag = bound->add_flag("--main", "Main family G (default)");
  bound->add_flag("--kconn", bo.kconn, "Non-k-connected family H")->excludes(main_flag);
  bound->add_option("-n", bo.n, "Order")->required();
  bound->add_option("-l,--ell", bo.ell, "ell for --main");
  bound->add_option("-k", bo.k, "k for --kconn");
  bound->add_option("-d", bo.d, "Minimum degree")->required();
  bound->add_option("-t", bo.t, "Star size")->required();
  bound->add_option("--format", bo.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  verify_config vc;
  int verify_n = 7;
  std::vector<std::string> verify_props;
  bool verify_all = false;
  bool family_check = false;
  bool max_only = false;
  std::optional<std::uint64_t> budget;
  int k_max = -1;
  unsigned workers = 1;
  std::string verify_format = "csv";
  auto* verify = app.add_subcommand("verify", "Exhaustive oracle sweep against the bounds and extremal sets");
  verify->add_option("-n,--n-max", verify_n, "Largest order (<= 10)")->capture_default_str();
  verify->add_option("--n-min", vc.n_min, "Smallest order")->capture_default_str();
  verify->add_option("--property", verify_props, "Restrict to these properties (repeatable)");
  verify->add_flag("--all", verify_all, "Every property (the default)");
  verify->add_option("--kedge-n-max", vc.kedge_n_max, "Largest order for k-edge-hamiltonian rows")
      ->capture_default_str();
  verify->add_option("--k-max", k_max, "Cap on k for k-edge and k-Hamiltonicity");
  verify->add_flag("--max-only", max_only, "Skip extremal-set collection");
  verify->add_option("--budget", budget, "Decider evaluations allowed (default STAR_EXTREMAL_BUDGET or 10000000)");
  verify->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1U, 256U));
  verify->add_option("--format", verify_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  verify->add_flag("--family-check", family_check, "Only the n = 10, d = 4 two-member family check");

  bool scan_threshold = false;
  bool scan_conjecture = false;
  bool scan_summary = false;
  std::string scan_n = "4:100";
  std::string scan_ell;
  unsigned scan_workers = 1;
  auto* scan = app.add_subcommand("scan", "Endpoint comparison tables");
  auto* thr = scan->add_flag("--threshold", scan_threshold, "Check the ordering at and above (n+l+1)/2");
  scan->add_flag("--conjecture", scan_conjecture, "Signs below the threshold")->excludes(thr);
  scan->add_flag("--summary", scan_summary, "With --conjecture: per-pattern persistence instead of rows");
  scan->add_option("-n", scan_n, "Order range a:b")->capture_default_str();
  scan->add_option("-l,--ell", scan_ell, "ell range a:b (default 0 for --threshold, -1:6 for --conjecture)");
  scan->add_option("--workers", scan_workers, "Worker threads")->check(CLI::Range(1U, 256U));

  int closure_threshold = 0;
  auto* closure = app.add_subcommand("closure", "Degree-sum closure of graph6 input");
  closure->add_option("--threshold,-s", closure_threshold, "Join nonadjacent pairs with degree sum >= this")
      ->required();
  add_input(closure);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : bad_arguments;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "cannot open " << out_path << '\n';
      return bad_arguments;
    }
  }
  std::ostream& sink = out_path.empty() ? out : file;

  try {
    auto load = [&] {
      if (!input_path.empty()) {
        std::ifstream f(input_path);
        return read_graphs(graphs_in, f);
      }
      return read_graphs(graphs_in, in);
    };
    if (construct->parsed()) return cmd_construct(co, sink);
    if (stars->parsed()) return cmd_stars(load(), t, sink);
    if (check->parsed()) return cmd_check(load(), make_property(prop_name, prop_k), sink);
    if (bound->parsed()) return cmd_bound(bo, sink);
    if (closure->parsed()) return cmd_closure(load(), closure_threshold, sink);
    if (verify->parsed()) {
      if (family_check) return cmd_family_check(sink);
      vc.n_max = verify_n;
      if (vc.n_min > vc.n_max) vc.n_min = vc.n_max;
      if (!verify_props.empty() && verify_all) throw argument_error("--all and --property are exclusive");
      if (!verify_props.empty()) {
        vc.kinds.clear();
        for (const auto& name : verify_props) {
          const auto kind = parse_property_kind(name);
          if (!kind) throw argument_error("unknown property '" + name + "'");
          vc.kinds.push_back(*kind);
        }
      }
      if (k_max >= 0) vc.k_max = k_max;
      vc.mode = max_only ? search_mode::max_only : search_mode::max_with_extremals;
      vc.workers = workers;
      vc.budget = budget ? budget : budget_from_env();
      if (!vc.budget) vc.budget = default_budget;
      return cmd_verify(vc, verify_format, sink, err);
    }
    if (scan->parsed()) {
      if (!scan_threshold && !scan_conjecture) throw argument_error("scan needs --threshold or --conjecture");
      const int_range nr = parse_range(scan_n);
      const int_range lr = parse_range(scan_ell.empty() ? (scan_threshold ? "0" : "-1:6") : scan_ell);
      if (scan_threshold) return cmd_scan_threshold(nr, lr, scan_workers, sink);
      return cmd_scan_conjecture(nr, lr, scan_summary, sink);
    }
  } catch (const empty_domain_error& e) {
    err << "empty domain: " << e.what() << '\n';
    return empty_domain;
  } catch (const budget_exceeded& e) {
    err << e.what() << '\n';
    return over_budget;
  } catch (const parse_error& e) {
    err << "graph6: " << e.what() << '\n';
    return bad_arguments;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return bad_arguments;
  } catch (const std::domain_error& e) {
    err << e.what() << '\n';
    return bad_arguments;
  } catch (const std::length_error& e) {
    err << e.what() << '\n';
    return bad_arguments;
  }
  return bad_arguments;
}

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"tstar"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

}  // namespace tstar::cli

#include <gtest/gtest.h>

#include <sstream>

#include "cli_commands.hpp"

using namespace tstar;

namespace {

struct result {
  int code;
  std::string out;
  std::string err;
};

result run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Cli, Construct) {
  auto r = run({"construct", "--family", "G", "-n", "10", "-l", "0", "-i", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(graph6_decode(lines(r.out).at(0)), build_g(family_params{10, 0, 4}));
  r = run({"construct", "--family", "H", "-n", "6", "-k", "1", "-i", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(canonical_form(graph6_decode(lines(r.out).at(0))),
            canonical_form(disjoint_union(complete_graph(3), complete_graph(3))));
  r = run({"construct", "--family", "G", "-n", "6", "-l", "0", "-i", "3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("[1, 2]"), std::string::npos);
  r = run({"construct", "--family", "G", "-n", "6", "-l", "-1", "-i", "2"});
  EXPECT_EQ(r.code, 0);
}

TEST(Cli, Stars) {
  const std::string g = graph6_encode(build_g(family_params{6, 0, 1}));
  EXPECT_EQ(run({"stars", "-t", "2"}, g + "\n").out, "34\n");
  EXPECT_EQ(run({"stars", "-t", "1", "-g", g}).out, "11\n");
  EXPECT_EQ(run({"stars", "-t", "2", "-g", graph6_encode(empty_graph(5))}).out, "0\n");
  EXPECT_EQ(run({"stars", "-t", "2"}, "B\x20\n").code, 2);
}

TEST(Cli, Check) {
  auto r = run({"check", "--property", "hamiltonian", "-g", graph6_encode(build_g(family_params{6, 0, 2}))});
  EXPECT_EQ(r.code, 0);
  auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 2U);
  EXPECT_EQ(ls[0], "graph6,property,k,has_property,witness_i,low_count,high_count");
  EXPECT_NE(ls[1].find(",false,2,"), std::string::npos);
  r = run({"check", "--property", "hamiltonian", "-g", graph6_encode(complete_graph(5))});
  EXPECT_NE(lines(r.out)[1].find(",true,"), std::string::npos);
  r = run({"check", "--property", "k-connected", "-k", "2", "-g", graph6_encode(build_h(conn_family_params{6, 2, 1}))});
  EXPECT_NE(lines(r.out)[1].find(",false,"), std::string::npos);
  EXPECT_EQ(run({"check", "--property", "planar", "-g", "Bw"}).code, 2);
  EXPECT_EQ(run({"check", "--property", "k-connected", "-g", "Bw"}).code, 2);
}

TEST(Cli, Bound) {
  auto r = run({"bound", "--main", "-n", "10", "-l", "0", "-d", "4", "-t", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).at(1), "10,0,4,6,336,BOTH,4,4,336,336,2,family(4)");
  r = run({"bound", "--kconn", "-n", "6", "-k", "2", "-d", "1", "-t", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).at(1).substr(0, 13), "6,2,1,1,11,ID");
  EXPECT_EQ(run({"bound", "--main", "-n", "10", "-l", "0", "-d", "5", "-t", "6"}).code, 3);
  r = run({"bound", "-n", "10", "-d", "4", "-t", "6", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["bound"], "336");
  EXPECT_EQ(j["family_size"], "2");
}

TEST(Cli, Closure) {
  EXPECT_EQ(run({"closure", "-s", "4", "-g", graph6_encode(cycle_graph(5))}).out,
            graph6_encode(complete_graph(5)) + "\n");
  EXPECT_EQ(run({"closure", "-s", "10", "-g", graph6_encode(petersen_graph())}).out,
            graph6_encode(petersen_graph()) + "\n");
  graph k6e = complete_graph(6);
  k6e.remove_edge(2, 4);
  EXPECT_EQ(run({"closure", "-s", "6"}, graph6_encode(k6e) + "\n").out, graph6_encode(complete_graph(6)) + "\n");
}

TEST(Cli, VerifySmall) {
  auto r = run({"verify", "-n", "5"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto ls = lines(r.out);
  EXPECT_EQ(ls.at(0), "n,ell_or_k,d,t,property,bound,observed_max,verdict,extremal_count");
  for (std::size_t j = 1; j < ls.size(); ++j) EXPECT_NE(ls[j].find("MATCHES_BOUND"), std::string::npos) << ls[j];
  r = run({"verify", "-n", "5", "--property", "hamiltonian", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["complete"].get<bool>());
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_FALSE(j["rows"].empty());
}

TEST(Cli, VerifyBudgetAndDeterminism) {
  auto r = run({"verify", "-n", "6", "--budget", "100"});
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.out.find("# incomplete"), std::string::npos);
  const auto a = run({"verify", "-n", "6", "--workers", "1"});
  const auto b = run({"verify", "-n", "6", "--workers", "3"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"verify", "-n", "11"}).code, 2);
  EXPECT_EQ(run({"verify", "--family-check"}).code, 0);
}

TEST(Cli, Scan) {
  auto r = run({"scan", "--threshold", "-n", "4:40", "-l", "0"});
  EXPECT_EQ(r.code, 0);
  for (const auto& l : lines(r.out)) EXPECT_EQ(l.find(",false\n"), std::string::npos);
  r = run({"scan", "--conjecture", "-n", "4:30", "-l", "-1:3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).at(0), "n,ell,t,sign");
  EXPECT_EQ(run({"scan", "--threshold", "-n", "9:4"}).code, 2);
  EXPECT_EQ(run({"scan", "-n", "4:9"}).code, 2);
  const auto a = run({"scan", "--threshold", "-n", "4:60", "-l", "-1:5", "--workers", "1"});
  const auto b = run({"scan", "--threshold", "-n", "4:60", "-l", "-1:5", "--workers", "4"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ArgumentErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"bound", "-n", "x", "-d", "1", "-t", "1"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

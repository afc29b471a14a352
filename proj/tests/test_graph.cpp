#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "tstar/canonical.hpp"
#include "tstar/family.hpp"
#include "tstar/graph.hpp"
#include "tstar/graph6.hpp"

using namespace tstar;

TEST(Graph, EdgesAndDegrees) {
  graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_EQ(g.min_degree(), 0);
  EXPECT_EQ(edge_count(g), 2);
  g.remove_edge(0, 1);
  EXPECT_FALSE(g.adjacent(0, 1));
  EXPECT_THROW(g.add_edge(2, 2), argument_error);
  EXPECT_THROW(g.add_edge(0, 4), argument_error);
  EXPECT_THROW(graph(65), argument_error);
}

TEST(Graph, NamedGraphs) {
  EXPECT_EQ(edge_count(complete_graph(7)), 21);
  EXPECT_EQ(edge_count(cycle_graph(5)), 5);
  EXPECT_EQ(edge_count(path_graph(5)), 4);
  EXPECT_EQ(star_graph(3).order(), 4);
  const graph p = petersen_graph();
  EXPECT_EQ(edge_count(p), 15);
  for (int v = 0; v < 10; ++v) EXPECT_EQ(p.degree(v), 3);
  EXPECT_EQ(count_stars(empty_graph(5), 2), 0);
  EXPECT_EQ(count_stars(empty_graph(5), 1), 0);
}

TEST(Graph, StarsAgreeWithOracle) {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 300; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 30);
    const graph g = oracle::random_graph(n, 0.4, rng);
    for (int t = 1; t < n; ++t) ASSERT_EQ(count_stars(g, t), oracle::stars(g, t));
  }
}

TEST(Graph, InducedAndRelabel) {
  const graph c = cycle_graph(6);
  const graph h = induced_subgraph(c, 0b000111);
  EXPECT_EQ(h, path_graph(3));
  const graph r = relabel(path_graph(3), {2, 0, 1});
  EXPECT_TRUE(r.adjacent(2, 0));
  EXPECT_TRUE(r.adjacent(0, 1));
  EXPECT_FALSE(r.adjacent(2, 1));
}

TEST(Families, BuildersMatchDefinition) {
  for (int n = 3; n <= 20; ++n) {
    for (int ell = -1; ell <= n - 3; ++ell)
      for (int i = 1; i <= g_top_index(n, ell); ++i) {
        const graph g = build_g(family_params{n, ell, i});
        ASSERT_EQ(g, oracle::family_g(n, ell, i));
        ASSERT_EQ(degree_sequence(g).values(), degree_list_g(family_params{n, ell, i}).values());
      }
    for (int k = 1; k <= n - 2; ++k)
      for (int i = 1; i <= h_top_index(n, k); ++i)
        ASSERT_EQ(build_h(conn_family_params{n, k, i}), oracle::family_h(n, k, i));
  }
  EXPECT_THROW(build_g(family_params{10, 0, 5}), argument_error);
  EXPECT_THROW(build_h(conn_family_params{6, 1, 4}), argument_error);
}

TEST(Families, KnownShapes) {
  // K_4 + (I_4 u K_2)
  const graph g = build_g(family_params{10, 0, 4});
  EXPECT_EQ(edge_count(g), 6 + 16 + 8 + 1);
  // K_3 u K_3
  const graph h = build_h(conn_family_params{6, 1, 3});
  EXPECT_EQ(edge_count(h), 6);
  EXPECT_EQ(h.min_degree(), 2);
}

TEST(Families, MemberCursor) {
  const family_params p{9, 0, 2};  // K_2 + (I_2 u K_5), 10 clique slots
  auto cur = enumerate_family(p);
  EXPECT_EQ(cur.size(), 1024U);
  const graph full = build_g(p);
  std::set<std::string> seen;
  std::size_t count = 0;
  while (auto g = cur.next()) {
    if (count == 0) {
      EXPECT_EQ(*g, full);
    }
    ++count;
    seen.insert(graph6_encode(*g));
    for (int v = 0; v < 2; ++v) ASSERT_EQ(g->degree(v), 2);
    for (int v = 7; v < 9; ++v) ASSERT_EQ(g->degree(v), 8);
    for (int v = 0; v < 9; ++v)
      for (int u = 0; u < 9; ++u)
        if (!full.adjacent(u, v)) {
          ASSERT_FALSE(g->adjacent(u, v));
        }
  }
  EXPECT_EQ(count, 1024U);
  EXPECT_EQ(seen.size(), 1024U);
  EXPECT_THROW(enumerate_family(p, 1000), size_error);
  EXPECT_THROW(enumerate_family(family_params{40, 0, 1}), size_error);
}

TEST(Graph6, Examples) {
  EXPECT_EQ(graph6_encode(complete_graph(3)), "Bw");
  EXPECT_EQ(graph6_decode("B?"), empty_graph(3));
  EXPECT_EQ(graph6_encode(petersen_graph()), "IheA@GUAo");
  EXPECT_EQ(graph6_encode(graph(0)), "?");
  EXPECT_EQ(graph6_decode(">>graph6<<Bw\n"), complete_graph(3));
  EXPECT_EQ(graph6_encode(complete_graph(63)).substr(0, 4), "~??~");
}

TEST(Graph6, Errors) {
  auto offset_of = [](const std::string& s) -> long {
    try {
      graph6_decode(s);
    } catch (const parse_error& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  EXPECT_EQ(offset_of(""), 0);
  EXPECT_EQ(offset_of("C"), 1);         // 4 vertices need one data byte
  EXPECT_EQ(offset_of("Bww"), 2);       // one byte too many
  EXPECT_EQ(offset_of("B\x20"), 1);     // bad byte
  EXPECT_EQ(offset_of("B@"), 1);        // padding bit set
  EXPECT_THROW(graph6_decode("~???"), parse_error);  // long form below 63
}

TEST(Graph6, RoundTripRandom) {
  std::mt19937_64 rng(2024);
  for (int rep = 0; rep < 2000; ++rep) {
    const int n = static_cast<int>(rng() % 65);
    const graph g = oracle::random_graph(n, 0.5, rng);
    ASSERT_EQ(graph6_decode(graph6_encode(g)), g);
  }
}

TEST(Canonical, IsomorphicLabelingsAgree) {
  EXPECT_EQ(canonical_form(cycle_graph(5)), canonical_form(relabel(cycle_graph(5), {3, 1, 4, 0, 2})));
  graph k4m(4);
  k4m.add_edge(0, 2);
  k4m.add_edge(0, 3);
  k4m.add_edge(1, 2);
  k4m.add_edge(1, 3);
  EXPECT_EQ(canonical_form(cycle_graph(4)), canonical_form(k4m));
  EXPECT_NE(canonical_form(path_graph(4)), canonical_form(star_graph(3)));
}

TEST(Canonical, RandomShufflesAgree) {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 400; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const graph g = oracle::random_graph(n, 0.45, rng);
    const std::string c = canonical_form(g);
    for (int s = 0; s < 3; ++s) ASSERT_EQ(canonical_form(oracle::shuffled(g, rng)), c);
    // the canonical form is itself a relabelling of g
    ASSERT_EQ(degree_sequence(graph6_decode(c)).values(), degree_sequence(g).values());
  }
}

TEST(Canonical, LastOrbitIsAnOrbit) {
  // every vertex of a vertex-transitive graph is in the orbit
  EXPECT_EQ(canonical_label(petersen_graph()).last_orbit, low_bits(10));
  EXPECT_EQ(canonical_label(cycle_graph(7)).last_orbit, low_bits(7));
  // the path end points are swapped by its only automorphism
  const auto lab = canonical_label(path_graph(5));
  EXPECT_TRUE(lab.last_orbit == (bit(0) | bit(4)) || lab.last_orbit == (bit(1) | bit(3)) || lab.last_orbit == bit(2));
}

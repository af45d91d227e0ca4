#include "doctest.h"

#include <random>

#include "dstar/extremal.hpp"
#include "dstar/graph.hpp"
#include "oracles.hpp"

using namespace dstar;

TEST_CASE("degree basics") {
  Graph k4 = complete_graph(4);
  for (int v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);
  Graph single = GraphBuilder(1).build();
  CHECK(single.degree(0) == 0);
  Graph fig2b = construct({Recipe::component_66, 7});
  CHECK(fig2b.degree(0) == 6);
  CHECK(fig2b.degree(1) == 6);
}

TEST_CASE("graph invariants") {
  Graph g = make_graph(5, {{0, 1}, {1, 2}, {0, 1}});
  CHECK(g.edge_count() == 2);
  for (int v = 0; v < 5; ++v) {
    CHECK(!g.has_edge(v, v));
    for (int u : g.neighbors(v)) CHECK(g.has_edge(u, v));
  }
  int degsum = 0;
  for (int v = 0; v < 5; ++v) degsum += g.degree(v);
  CHECK(degsum == 2 * g.edge_count());
  CHECK_THROWS(make_graph(3, {{0, 0}}));
  CHECK_THROWS(GraphBuilder(65));
}

TEST_CASE("pattern normalization") {
  PatternSpec p = PatternSpec::of(4, 2);
  CHECK(p.m == 2);
  CHECK(p.l == 4);
  CHECK_THROWS(PatternSpec::of(0, 1));
}

TEST_CASE("detect_double_star on named graphs") {
  PatternSpec s33 = PatternSpec::of(3, 3);

  Graph self = double_star_graph(s33);
  auto w = detect_double_star(self, s33);
  REQUIRE(w.has_value());
  CHECK(w->valid_for(self, s33));
  CHECK(((w->x == 0 && w->y == 1) || (w->x == 1 && w->y == 0)));

  Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
  CHECK(!detect_double_star(p3, PatternSpec::of(1, 1)));

  Graph dw10 = construct({Recipe::double_wheel, 10});
  CHECK(!detect_double_star(dw10, PatternSpec::of(4, 4)));
  CHECK(detect_double_star(dw10, s33));

  Graph fig2b = construct({Recipe::component_66, 7});
  CHECK(!detect_double_star(fig2b, s33));
  CHECK(!brute_force_contains(fig2b, s33));
}

TEST_CASE("brute force oracle basics") {
  CHECK(brute_force_contains(complete_graph(4), PatternSpec::of(1, 1)));
  Graph empty5 = GraphBuilder(5).build();
  for (int m = 1; m <= 2; ++m)
    for (int l = m; l <= 2; ++l) CHECK(!brute_force_contains(empty5, PatternSpec::of(m, l)));
}

TEST_CASE("detect agrees with brute force on all graphs up to n=5") {
  for (int n = 2; n <= 5; ++n) {
    std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      Graph g = testing::from_mask(n, mask);
      for (int m = 1; m + m <= 6; ++m) {
        for (int l = m; m + l <= 6; ++l) {
          PatternSpec p = PatternSpec::of(m, l);
          auto got = detect_double_star(g, p);
          CHECK(got.has_value() == brute_force_contains(g, p));
          if (got) CHECK(got->valid_for(g, p));
        }
      }
    }
  }
}

TEST_CASE("detection monotonicity in the arm counts") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = testing::random_graph(rng, 4 + static_cast<int>(rng() % 8), 0.4);
    for (int m = 1; m <= 3; ++m) {
      for (int l = m; l <= 3; ++l) {
        if (!contains_double_star(g, PatternSpec::of(m, l))) continue;
        for (int m2 = 1; m2 <= m; ++m2)
          for (int l2 = 1; l2 <= l; ++l2) CHECK(contains_double_star(g, PatternSpec::of(m2, l2)));
      }
    }
  }
}

TEST_CASE("witnesses are validated not trusted") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    Graph g = testing::random_graph(rng, 5 + static_cast<int>(rng() % 6), 0.5);
    for (int m = 1; m <= 3; ++m) {
      if (auto w = detect_double_star(g, PatternSpec::of(m, 3))) CHECK(w->valid_for(g, PatternSpec::of(m, 3)));
    }
  }
}

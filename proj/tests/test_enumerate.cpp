#include "doctest.h"

#include <algorithm>
#include <mutex>
#include <string>
#include <vector>

#include "dstar/canonical.hpp"
#include "dstar/enumerate.hpp"
#include "dstar/planarity.hpp"
#include "oracles.hpp"

using namespace dstar;

namespace {

std::vector<std::string> emitted_forms(const EnumConstraints& c) {
  std::vector<std::string> forms;
  enumerate_graphs(c, [&](const Graph& g) { forms.push_back(canonical_string(g)); });
  std::sort(forms.begin(), forms.end());
  return forms;
}

}  // namespace

TEST_CASE("unconstrained counts match the labeled-enumeration oracle") {
  const std::uint64_t expected[] = {1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) {
    EnumConstraints c;
    c.n = n;
    EnumStats stats = enumerate_graphs(c);
    CHECK(stats.emitted == expected[n - 1]);
    if (n <= 6) CHECK(stats.emitted == testing::classes_by_labeled_enumeration(n).size());
    CHECK(stats.emitted <= stats.visited);
  }
}

TEST_CASE("guard and window validation") {
  EnumConstraints c;
  c.n = 13;
  CHECK_THROWS(enumerate_graphs(c));
  c.n = 5;
  c.min_edges = 4;
  c.max_edges = 2;
  CHECK_THROWS(enumerate_graphs(c));
  c.min_edges = 0;
  c.max_edges = 11;  // above n(n-1)/2
  CHECK_THROWS(enumerate_graphs(c));
}

TEST_CASE("emitted graphs verifiably satisfy the constraints") {
  EnumConstraints c;
  c.n = 6;
  c.min_edges = 5;
  c.max_edges = 9;
  c.require_planar = true;
  c.forbid = PatternSpec::of(1, 2);
  c.require_connected = true;
  enumerate_graphs(c, [&](const Graph& g) {
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() >= 5);
    CHECK(g.edge_count() <= 9);
    CHECK(is_planar(g));
    CHECK(!brute_force_contains(g, PatternSpec::of(1, 2)));
    CHECK(g.is_connected());
  });
}

TEST_CASE("planar counts agree with the labeled oracle under the same filter") {
  for (int n = 4; n <= 6; ++n) {
    EnumConstraints c;
    c.n = n;
    c.require_planar = true;
    EnumStats stats = enumerate_graphs(c);
    auto oracle = testing::classes_by_labeled_enumeration(n, [](const Graph& g) { return is_planar(g); });
    CHECK(stats.emitted == oracle.size());
  }
}

TEST_CASE("prune soundness: forbidding equals filtering") {
  for (int n = 4; n <= 6; ++n) {
    EnumConstraints all;
    all.n = n;
    std::vector<std::string> filtered;
    enumerate_graphs(all, [&](const Graph& g) {
      if (!contains_double_star(g, PatternSpec::of(3, 3))) filtered.push_back(canonical_string(g));
    });
    std::sort(filtered.begin(), filtered.end());

    EnumConstraints forbid;
    forbid.n = n;
    forbid.forbid = PatternSpec::of(3, 3);
    CHECK(emitted_forms(forbid) == filtered);
  }
}

TEST_CASE("single worker run is identical to the serial run") {
  EnumConstraints c;
  c.n = 6;
  c.require_planar = true;
  EnumStats serial = enumerate_graphs(c);
  EnumStats par = enumerate_parallel(c, 1);
  CHECK(serial == par);
}

TEST_CASE("parallel emits the same canonical multiset as serial") {
  for (int n = 5; n <= 7; ++n) {
    EnumConstraints c;
    c.n = n;
    std::vector<std::string> serial_forms = emitted_forms(c);

    std::vector<std::string> par_forms;
    std::mutex m;
    EnumStats stats = enumerate_parallel(c, 4, [&](const Graph& g, std::size_t) {
      std::scoped_lock lock(m);
      par_forms.push_back(canonical_string(g));
    });
    std::sort(par_forms.begin(), par_forms.end());
    CHECK(par_forms == serial_forms);
    CHECK(stats.emitted == serial_forms.size());
    CHECK(stats.visited == enumerate_graphs(c).visited);
  }
}

TEST_CASE("edge-window feasibility pruning does not lose graphs") {
  EnumConstraints c;
  c.n = 7;
  c.require_planar = true;
  c.min_edges = 3 * 7 - 6;  // triangulations only
  EnumStats stats = enumerate_graphs(c);
  auto oracle = testing::classes_by_labeled_enumeration(
      7, [](const Graph& g) { return g.edge_count() == 15 && is_planar(g); });
  CHECK(stats.emitted == oracle.size());
  CHECK(stats.emitted == 5);  // the five 7-vertex planar triangulations
}

TEST_CASE("the 6-6 edge component appears in the constrained n=7 stream") {
  EnumConstraints c;
  c.n = 7;
  c.require_planar = true;
  c.forbid = PatternSpec::of(3, 3);
  c.min_edges = 15;
  std::vector<std::string> forms;
  enumerate_graphs(c, [&](const Graph& g) { forms.push_back(canonical_string(g)); });
  CHECK(forms.size() == 5);  // every 7-vertex triangulation, all too small to host S33
  Graph fig2b = make_graph(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 2}, {1, 3},
                               {1, 4}, {1, 5}, {1, 6}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
  CHECK(std::find(forms.begin(), forms.end(), canonical_string(fig2b)) != forms.end());
}

TEST_CASE("parallel count at n=8 matches the serial cross-check") {
  EnumConstraints c;
  c.n = 8;
  EnumStats par = enumerate_parallel(c, 4);
  CHECK(par.emitted == 12346);
  CHECK(par == enumerate_graphs(c));
}

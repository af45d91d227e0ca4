#include "doctest.h"

#include "dstar/extremal.hpp"
#include "dstar/graph.hpp"
#include "dstar/starblock.hpp"
#include "dstar/turan.hpp"

#include <random>

#include "dstar/formats.hpp"
#include "dstar/planarity.hpp"

using namespace dstar;

TEST_CASE("quarter weights are exact and print reduced") {
  CHECK(QuarterWeight{60}.to_string() == "15");
  CHECK(QuarterWeight{66}.to_string() == "33/2");
  CHECK(QuarterWeight{61}.to_string() == "61/4");
  CHECK(QuarterWeight::units(3) + QuarterWeight::halves(1) == QuarterWeight{14});
}

TEST_CASE("class weight bounds in quarter units") {
  CHECK(class_weight_bound(BlockClass::b0, 7, 1) == QuarterWeight::units(15));
  CHECK(class_weight_bound(BlockClass::b1, 11, 2) == QuarterWeight::units(25));
  CHECK(class_weight_bound(BlockClass::b2, 7, 1) == QuarterWeight{66});
  // floor of (5/2)v - 5/3 at v = 6 in quarters: 60 - ceil(20/3) = 53
  CHECK(class_weight_bound(BlockClass::b1, 6, 3) == QuarterWeight{53});
  CHECK_THROWS(class_weight_bound(BlockClass::b1, 6, 0));
}

TEST_CASE("C5 decomposes to the empty base") {
  Graph c5 = cycle_graph(5);
  StarBlockBase base = build_base(c5);
  CHECK(base.blocks.empty());
  CHECK(base.g2 == c5.vertices());
  WeightAudit a = audit(c5, base);
  CHECK(a.edge_identity_ok);
  CHECK(a.w0_g2 == QuarterWeight::units(5));
  CHECK(a.all_ok());
}

TEST_CASE("precondition violations are reported as such") {
  CHECK_THROWS_AS(build_base(complete_graph(5)), NotPlanarError);
  Graph s33 = double_star_graph(PatternSpec::of(3, 3));
  CHECK_THROWS_AS(build_base(s33), NotS33FreeError);
  try {
    build_base(s33);
  } catch (const NotS33FreeError& e) {
    CHECK(e.witness.valid_for(s33, PatternSpec::of(3, 3)));
  }
}

TEST_CASE("the 6-6 edge component is a single passing B0 block") {
  Graph g = construct({Recipe::component_66, 7});
  StarBlockBase base = build_base(g);
  REQUIRE(base.blocks.size() == 1);
  const StarBlock& b = base.blocks[0];
  CHECK(b.kind == BlockKind::edge66);
  CHECK(b.vertices().count() == 7);
  CHECK(b.s() == 0);
  CHECK(b.s_prime() == 0);
  CHECK(b.w0 == QuarterWeight::units(15));
  CHECK(b.w == QuarterWeight::units(15));
  CHECK(base.classes[0] == BlockClass::b0);
  CHECK(base.t0 == 1);
  CHECK(base.t1 == 0);
  CHECK(base.t2 == 0);
  CHECK(class_weight_bound(BlockClass::b0, 7, 1) == QuarterWeight::units(15));

  RefineResult r = refine_until_bounded(g, base, 4);
  CHECK(r.all_pass);
  CHECK(r.rounds == 0);
  CHECK(r.base.blocks[0].extension.empty());
}

TEST_CASE("the 6-5 edge component behaves the same way") {
  Graph g = construct({Recipe::component_65, 7});
  StarBlockBase base = build_base(g);
  REQUIRE(base.blocks.size() == 1);
  CHECK(base.blocks[0].kind == BlockKind::edge65);
  CHECK(base.blocks[0].w == QuarterWeight::units(15));
  CHECK(audit(g, base).all_ok());
}

TEST_CASE("glued stars on 12 vertices: two star blocks sharing ten vertices") {
  Graph g = construct({Recipe::glued_stars, 12});
  StarBlockBase base = build_base(g);
  REQUIRE(base.blocks.size() == 2);
  for (const StarBlock& b : base.blocks) {
    CHECK(b.kind == BlockKind::star5p3m);
    CHECK(b.vertices().count() == 11);
    CHECK(b.s() == 10);
    CHECK(b.s_prime() == 0);
    CHECK(!b.has_triple_shared);
    CHECK(b.w0 == QuarterWeight::units(20));
    CHECK(b.w == QuarterWeight::units(25));
  }
  CHECK((base.blocks[0].vertices() & base.blocks[1].vertices()).count() == 10);
  for (int v : base.blocks[0].vertices() & base.blocks[1].vertices()) CHECK(base.multiplicity(v) == 2);

  CHECK(base.t0 == 0);
  CHECK(base.t1 == 2);
  CHECK(base.t2 == 0);
  CHECK(base.t() == 2);

  WeightAudit a = audit(g, base);
  CHECK(a.ledger_lhs == QuarterWeight::units(40));
  CHECK(a.w0_g1 == QuarterWeight::units(25));
  CHECK(a.r1 == 10);
  CHECK(a.r2 == 0);
  CHECK(a.r3 == 0);
  CHECK(a.ledger_exact);
  CHECK(a.ledger_ok);
  CHECK(a.multi_block_applicable);
  CHECK(a.multi_block_edge_ok);
  CHECK(a.all_ok());
}

TEST_CASE("primary weight: both formulas, whole graph, named sets") {
  Graph g = construct({Recipe::component_66, 7});
  CHECK(primary_weight(g, g.vertices()) == QuarterWeight::units(g.edge_count()));
  CHECK(primary_weight(g, VertexSet::of({0, 1})) == QuarterWeight::units(6));

  Graph gs = construct({Recipe::glued_stars, 12});
  StarBlockBase base = build_base(gs);
  CHECK(primary_weight(gs, base.blocks[0].vertices()) == QuarterWeight::units(20));
  CHECK(modified_weight(gs, base, 0) == QuarterWeight::units(25));
}

TEST_CASE("modified weight equals primary weight for isolated blocks") {
  Graph g = construct({Recipe::component_66, 7});
  StarBlockBase base = build_base(g);
  CHECK(modified_weight(g, base, 0) == base.blocks[0].w0);
}

namespace {

// 5-5 edge block with one edge inside the common neighborhood and two of
// its low-degree vertices shared with a second block; its bound fails
// until one pendant is absorbed.
Graph overloaded_55_instance() {
  GraphBuilder b(12);
  b.add_edge(0, 1);
  for (int a = 2; a <= 5; ++a) {
    b.add_edge(0, a);
    b.add_edge(1, a);
  }
  b.add_edge(2, 5);  // edge inside the common neighborhood
  b.add_edge(2, 6);  // pendants at the degree-4 pair
  b.add_edge(5, 7);
  b.add_edge(8, 3);  // second hub takes the two degree-3 vertices
  b.add_edge(8, 4);
  b.add_edge(8, 9);
  b.add_edge(8, 10);
  b.add_edge(8, 11);
  return b.build();
}

}  // namespace

TEST_CASE("refinement absorbs one potential vertex and the block passes") {
  Graph g = overloaded_55_instance();
  StarBlockBase base = build_base(g);
  REQUIRE(base.blocks.size() == 2);
  CHECK(base.blocks[0].kind == BlockKind::edge55);
  CHECK(base.blocks[1].kind == BlockKind::star5_4m);
  CHECK(base.blocks[0].s() == 2);
  CHECK(base.t() == 2);
  // w = 12 + 2/2 = 13 > (5/2)*6 - 5/2
  CHECK(base.blocks[0].w == QuarterWeight::units(13));
  CHECK(base.blocks[0].w > class_weight_bound(BlockClass::b1, 6, 2));

  RefineResult r = refine_until_bounded(g, base, 4);
  CHECK(r.all_pass);
  CHECK(r.rounds == 1);
  CHECK(r.base.blocks[0].extension == VertexSet::of({6}));
  CHECK(r.base.blocks[0].vertices().count() == 7);
  CHECK(r.base.blocks[0].w == QuarterWeight{54});
  CHECK(audit(g, r.base).all_ok());
}

TEST_CASE("weight identity and shared degrees on decomposed graphs") {
  for (int n : {11, 14, 17}) {
    Graph g = construct({Recipe::glued_stars, n});
    StarBlockBase base = build_base(g);
    for (const StarBlock& b : base.blocks) {
      QuarterWeight extras{2 * b.s() + b.s_prime() + (b.has_triple_shared ? 4 : 0)};
      CHECK(b.w - b.w0 == extras);
      for (int v : b.shared_le3 | b.shared_deg4) {
        CHECK(g.degree(v) >= 2);
        CHECK(g.degree(v) <= 4);
      }
    }
    CHECK(validate_base(g, base).empty());
  }
}

TEST_CASE("small corpora are clean end to end") {
  for (int n : {6, 7}) {
    WeightCorpusSummary s = verify_corpus_weights(n, 1);
    CHECK(s.clean());
    CHECK(s.graphs > 0);
  }
}

TEST_CASE("degree class report on the 4-regular extremal graphs") {
  Graph g9 = construct({Recipe::four_regular_9, 9});
  DegreeClassReport r = degree_class_report(g9);
  CHECK(r.applicable);
  CHECK(r.m3 == 0);
  CHECK(r.m4 == 9);
  CHECK(r.m5 == 0);
  CHECK(r.m6 == 0);
  CHECK(r.x == 0);
  CHECK(r.edges == 18);
  CHECK(r.identity_ok);
  CHECK(r.branch == 0);
  CHECK(r.all_applicable_ok());
}

TEST_CASE("degree class report marks unmet preconditions and stops") {
  DegreeClassReport r = degree_class_report(cycle_graph(5));
  CHECK(!r.min_degree_ok);
  CHECK(!r.applicable);
  CHECK(r.branch == -1);
  CHECK(r.all_applicable_ok());

  // glued stars carry 3-3 matching edges, so the structural reductions fail
  DegreeClassReport r2 = degree_class_report(construct({Recipe::glued_stars, 12}));
  CHECK(!r2.no_33_edge);
  CHECK(!r2.applicable);
}

namespace {

Graph random_planar_s33_free(std::mt19937_64& rng, int n) {
  Graph g = GraphBuilder(n).build();
  std::uniform_int_distribution<int> pick(0, n - 1);
  int misses = 0;
  while (misses < 4 * n * n) {
    int u = pick(rng), v = pick(rng);
    if (u == v || g.has_edge(u, v)) {
      ++misses;
      continue;
    }
    GraphBuilder nb(n);
    for (int x = 0; x < n; ++x)
      for (int y : g.neighbors(x))
        if (y > x) nb.add_edge(x, y);
    nb.add_edge(u, v);
    Graph h = nb.build();
    if (!is_planar(h) || contains_double_star(h, PatternSpec::of(3, 3))) {
      ++misses;
      continue;
    }
    g = h;
  }
  return g;
}

}  // namespace

TEST_CASE("randomized pipeline stress beyond the exhaustive corpus") {
  std::mt19937_64 rng(4242);
  int with_blocks = 0;
  for (int trial = 0; trial < 600; ++trial) {
    int n = 10 + static_cast<int>(rng() % 7);
    Graph g = random_planar_s33_free(rng, n);
    if (g.max_degree() < 5) continue;
    ++with_blocks;
    StarBlockBase base = build_base(g);
    CHECK(validate_base(g, base).empty());
    RefineResult r = refine_until_bounded(g, base, 4);
    CHECK(r.all_pass);
    WeightAudit a = audit(g, r.base);
    CHECK(a.all_ok());
    if (base.blocks.size() >= 2) CHECK(2 * g.edge_count() <= 5 * g.vertex_count() - 10);
  }
  CHECK(with_blocks > 400);
}

TEST_CASE("absorption may share a vertex with a neighboring block") {
  // the only potential vertices of the failing 5-5 edge block belong to
  // the other block; absorption turns one into a shared vertex and both
  // blocks land in class B1 with satisfied bounds
  for (const char* g6 : {"M@[BsICYcIW?_C_H_", "NQh??mgOpX@TOOOOiG?"}) {
    Graph g = graph6_decode(g6);
    StarBlockBase base = build_base(g);
    RefineResult r = refine_until_bounded(g, base, 4);
    CHECK(r.all_pass);
    CHECK(r.rounds == 1);
    CHECK(audit(g, r.base).all_ok());
  }
}

TEST_CASE("classify reports the class split directly") {
  Graph g = construct({Recipe::glued_stars, 12});
  Classification c = classify(g, build_base(g));
  CHECK(c.classes == std::vector<BlockClass>{BlockClass::b1, BlockClass::b1});
  CHECK(c.t0 == 0);
  CHECK(c.t1 == 2);
  CHECK(c.t2 == 0);
  CHECK(c.t() == 2);

  Graph comp = construct({Recipe::component_66, 7});
  Classification single = classify(comp, build_base(comp));
  CHECK(single.classes == std::vector<BlockClass>{BlockClass::b0});
  CHECK(single.t0 == 1);
  CHECK(single.t() == 0);
}

TEST_CASE("a vertex in three blocks drives the B2 machinery") {
  // three 5-star centers sharing one degree-3 vertex
  GraphBuilder b(16);
  int v = 15;
  for (int c = 0; c < 3; ++c) {
    int center = 5 * c;
    for (int leaf = 1; leaf <= 4; ++leaf) b.add_edge(center, center + leaf);
    b.add_edge(center, v);
  }
  Graph g = b.build();
  StarBlockBase base = build_base(g);
  REQUIRE(base.blocks.size() == 3);
  CHECK(base.multiplicity(v) == 3);
  CHECK(base.r3 == 1);
  CHECK(base.t2 == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(base.blocks[i].has_triple_shared);
    CHECK(base.classes[i] == BlockClass::b2);
    CHECK(base.blocks[i].s() == 1);
    // w = w0 + 1/2 + 1
    CHECK(base.blocks[i].w == base.blocks[i].w0 + QuarterWeight{6});
  }
  WeightAudit a = audit(g, base);
  CHECK(a.bipartite_applicable);
  CHECK(a.bipartite_ok);  // r3 = 1 <= 2 t2 - 4 = 2 and t2 >= 3
  CHECK(a.ledger_exact);
  CHECK(a.ledger_ok);
  CHECK(a.all_ok());
  RefineResult r = refine_until_bounded(g, base, 4);
  CHECK(r.all_pass);
  CHECK(r.rounds == 0);
}

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dstar/graph.hpp"

namespace dstar {

// Exact weight in quarter units; all weight arithmetic stays integral.
struct QuarterWeight {
  std::int64_t quarters = 0;

  static QuarterWeight units(std::int64_t u) { return {4 * u}; }
  static QuarterWeight halves(std::int64_t h) { return {2 * h}; }

  QuarterWeight operator+(QuarterWeight o) const { return {quarters + o.quarters}; }
  QuarterWeight operator-(QuarterWeight o) const { return {quarters - o.quarters}; }
  auto operator<=>(const QuarterWeight&) const = default;

  // reduced rational, e.g. "15", "33/2", "61/4"
  std::string to_string() const;
};

enum class BlockKind { star5p3m, star5_4m, edge66, edge65, edge64, edge55, path545 };
const char* to_string(BlockKind k);

enum class BlockClass { b0, b1, b2 };
const char* to_string(BlockClass c);

// One star-block: the elementary configuration (closed neighborhood of its
// defining high-degree vertices) plus vertices absorbed during refinement.
// Everything below `extension` is derived and kept current by refresh().
struct StarBlock {
  BlockKind kind{};
  VertexSet core;
  VertexSet extension;

  VertexSet peripheral;
  VertexSet shared_le3;   // shared, degree <= 3 (s)
  VertexSet shared_deg4;  // shared, degree 4    (s')
  bool has_triple_shared = false;
  QuarterWeight w0;
  QuarterWeight w;

  VertexSet vertices() const { return core | extension; }
  int s() const { return shared_le3.count(); }
  int s_prime() const { return shared_deg4.count(); }
};

struct StarBlockBase {
  std::vector<StarBlock> blocks;
  std::vector<BlockClass> classes;
  VertexSet g1;  // union of block vertex sets
  VertexSet g2;  // remainder, all of degree <= 4
  int t0 = 0, t1 = 0, t2 = 0;
  int r1 = 0;  // vertices in two blocks with degree <= 3
  int r2 = 0;  // vertices in two blocks with degree 4
  int r3 = 0;  // vertices in three blocks

  int t() const { return t1 + t2; }
  int multiplicity(int v) const;
};

struct NotPlanarError : std::runtime_error {
  NotPlanarError() : std::runtime_error("graph is not planar") {}
};

struct NotS33FreeError : std::runtime_error {
  DoubleStarWitness witness;
  explicit NotS33FreeError(DoubleStarWitness w)
      : std::runtime_error("graph contains S_{3,3}"), witness(w) {}
};

// Assigns every vertex of degree >= 5 to exactly one elementary block,
// scanning kinds in the fixed priority order (7+-3- star, 6-6 edge,
// 6-5 edge, 6-4 edge, 6-3- star, 5-5 edge, 5-4-5 path, 5-4- star).
// Requires g planar and S_{3,3}-free; throws otherwise. Blocks are not
// extended here; extension happens only in refine_until_bounded.
StarBlockBase build_base(const Graph& g);

// Recomputes all derived block fields, classes and the r/t counters.
void refresh(const Graph& g, StarBlockBase& base);

struct Classification {
  std::vector<BlockClass> classes;
  int t0 = 0, t1 = 0, t2 = 0;
  int t() const { return t1 + t2; }
};

// Per-block class tags: B0 when no shared vertices, B2 when some member
// lies in three blocks, B1 otherwise.
Classification classify(const Graph& g, const StarBlockBase& base);

// Structural invariants; returns an empty string when they all hold.
std::string validate_base(const Graph& g, const StarBlockBase& base);

// w0(H) = e(H) + e[H, G\H]/2 = (sum of degrees over H)/2, exactly.
QuarterWeight primary_weight(const Graph& g, VertexSet h);

// w(B) = w0(B) + s/2 + s'/4 + [some member lies in three blocks]
QuarterWeight modified_weight(const Graph& g, const StarBlockBase& base, std::size_t block);

// Class bound on w(B): (5/2)v - 5/2 for B0, (5/2)v - 5/t for B1,
// (5/2)v - 1 for B2, floored to quarter units (weights are quarter-
// integral, so the floor preserves every comparison).
QuarterWeight class_weight_bound(BlockClass cls, int v_count, int t);

struct RefineResult {
  StarBlockBase base;
  std::vector<bool> block_pass;
  bool all_pass = false;
  int rounds = 0;
  std::optional<std::size_t> unresolved_block;
};

// Extends bound-violating blocks by absorbing potential vertices (lowest
// index whose absorption keeps every block's w/v weakly decreasing and
// the base valid) until all blocks pass or max_rounds is exhausted.
// Non-convergence is reported, never silently dropped.
RefineResult refine_until_bounded(const Graph& g, StarBlockBase base, int max_rounds);

struct BlockAuditRow {
  BlockKind kind{};
  VertexSet verts;
  QuarterWeight w0, w, bound;
  BlockClass cls{};
  bool passes = false;
};

struct WeightAudit {
  std::vector<BlockAuditRow> blocks;
  int edges = 0;
  QuarterWeight w0_g1, w0_g2;
  bool edge_identity_ok = false;

  QuarterWeight ledger_lhs, ledger_rhs;  // sum w0(B) vs w0(G1)+3/2 r1+2 r2+3 r3
  int r1 = 0, r2 = 0, r3 = 0;
  bool ledger_exact = false;  // no degree-2 shared vertex: equality expected
  bool ledger_ok = false;

  int t0 = 0, t1 = 0, t2 = 0;
  bool bipartite_applicable = false;  // t2 > 0
  bool bipartite_ok = true;           // r3 <= 2 t2 - 4 and t2 >= 3

  bool multi_block_applicable = false;  // at least two blocks
  bool multi_block_edge_ok = true;           // 2e <= 5n - 10

  bool blocks_ok = true;
  bool all_ok() const {
    return edge_identity_ok && ledger_ok && bipartite_ok && multi_block_edge_ok && blocks_ok;
  }
};

// Recomputes every identity of the accounting ledger from the graph and
// base alone and records both sides.
WeightAudit audit(const Graph& g, const StarBlockBase& base);

struct DegreeClassReport {
  bool min_degree_ok = false;      // delta(G) >= 3
  bool no_33_edge = false;
  bool no_664_edge = false;        // no 6-6, 6-5, 6-4 edge
  bool no_7p4p_edge = false;
  bool applicable = false;

  int m3 = 0, m4 = 0, m5 = 0, m6 = 0;
  int x = 0;  // edges between the degree-{4,5} class and the degree-3 class
  int edges = 0;
  int branch = -1;  // m6 >= 2 -> 2, m6 == 1 -> 1, m6 == 0 -> 0

  bool identity_ok = true;         // e = 3 m3 + (4 m4 + 5 m5 - x)/2
  bool bipartite_ok = true;        // branch 2: 3 m3 - x <= 2(m3 + m6) - 4
  bool single_hub_ok = true;       // branch 1: 3 m3 - x <= m3
  bool deg5_support_ok = true;     // branch 0: every 5-vertex has >= 2 neighbors of degree <= 3
  bool count_ok = true;            // branch 0: 2 m5 <= 3 m3 + 4 m4

  bool all_applicable_ok() const {
    if (!applicable) return true;
    return identity_ok && bipartite_ok && single_hub_ok && deg5_support_ok && count_ok;
  }
};

// Degree-class accounting for hosts with no heavy edges; evaluates only the
// inequalities whose structural preconditions hold.
DegreeClassReport degree_class_report(const Graph& g);

}  // namespace dstar

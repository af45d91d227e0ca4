#include "dstar/starblock.hpp"

#include <algorithm>
#include <numeric>

#include "dstar/planarity.hpp"

namespace dstar {

std::string QuarterWeight::to_string() const {
  std::int64_t num = quarters;
  std::int64_t den = 4;
  while (den > 1 && num % 2 == 0) {
    num /= 2;
    den /= 2;
  }
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

const char* to_string(BlockKind k) {
  switch (k) {
    case BlockKind::star5p3m: return "5+-3- star";
    case BlockKind::star5_4m: return "5-4- star";
    case BlockKind::edge66: return "6-6 edge";
    case BlockKind::edge65: return "6-5 edge";
    case BlockKind::edge64: return "6-4 edge";
    case BlockKind::edge55: return "5-5 edge";
    case BlockKind::path545: return "5-4-5 path";
  }
  return "?";
}

const char* to_string(BlockClass c) {
  switch (c) {
    case BlockClass::b0: return "B0";
    case BlockClass::b1: return "B1";
    case BlockClass::b2: return "B2";
  }
  return "?";
}

int StarBlockBase::multiplicity(int v) const {
  int m = 0;
  for (const StarBlock& b : blocks)
    if (b.vertices().contains(v)) ++m;
  return m;
}

namespace {

bool is_peripheral(const Graph& g, int v, VertexSet block) {
  int d = g.degree(v);
  int outside = (g.neighbors(v) - block).count();
  if (d <= 3) return outside >= 1;
  if (d == 4) return outside == 2;
  return false;
}

bool is_potential(const Graph& g, int v, VertexSet block) {
  if (block.contains(v)) return false;
  int d = g.degree(v);
  int inside = (g.neighbors(v) & block).count();
  if (d <= 3) return inside >= 1;
  if (d == 4) return inside == 2;
  return false;
}

struct Instance {
  std::vector<int> key;  // defining vertices, sorted
  VertexSet block;
  BlockKind kind;
};

void sort_instances(std::vector<Instance>& xs) {
  std::sort(xs.begin(), xs.end(), [](const Instance& a, const Instance& b) { return a.key < b.key; });
}

VertexSet closed_nbhd(const Graph& g, int v) { return g.neighbors(v) | VertexSet::single(v); }

std::vector<Instance> instances_at(const Graph& g, int position) {
  std::vector<Instance> out;
  int n = g.vertex_count();
  auto star = [&](int c, BlockKind kind) { out.push_back({{c}, closed_nbhd(g, c), kind}); };
  auto edge_blocks = [&](int da, int db, BlockKind kind) {
    for (int u = 0; u < n; ++u) {
      for (int v : g.neighbors(u)) {
        if (v <= u) continue;
        int x = g.degree(u), y = g.degree(v);
        if ((x == da && y == db) || (x == db && y == da))
          out.push_back({{u, v}, closed_nbhd(g, u) | closed_nbhd(g, v), kind});
      }
    }
  };
  switch (position) {
    case 0:  // 7+-3- star
      for (int c = 0; c < n; ++c)
        if (g.degree(c) >= 7) star(c, BlockKind::star5p3m);
      break;
    case 1:
      edge_blocks(6, 6, BlockKind::edge66);
      break;
    case 2:
      edge_blocks(6, 5, BlockKind::edge65);
      break;
    case 3:
      edge_blocks(6, 4, BlockKind::edge64);
      break;
    case 4:  // 6-3- star, a 5+-3- star met at its own priority slot
      for (int c = 0; c < n; ++c) {
        if (g.degree(c) != 6) continue;
        bool low = true;
        for (int w : g.neighbors(c)) low = low && g.degree(w) <= 3;
        if (low) star(c, BlockKind::star5p3m);
      }
      break;
    case 5:
      edge_blocks(5, 5, BlockKind::edge55);
      break;
    case 6:  // 5-4-5 induced path
      for (int mid = 0; mid < n; ++mid) {
        if (g.degree(mid) != 4) continue;
        for (int x : g.neighbors(mid)) {
          if (g.degree(x) != 5) continue;
          for (int y : g.neighbors(mid)) {
            if (y <= x || g.degree(y) != 5 || g.has_edge(x, y)) continue;
            Instance inst;
            inst.key = {x, mid, y};
            std::sort(inst.key.begin(), inst.key.end());
            inst.block = closed_nbhd(g, x) | closed_nbhd(g, mid) | closed_nbhd(g, y);
            inst.kind = BlockKind::path545;
            out.push_back(std::move(inst));
          }
        }
      }
      break;
    case 7:  // 5-4- star
      for (int c = 0; c < n; ++c) {
        if (g.degree(c) != 5) continue;
        bool low = true;
        for (int w : g.neighbors(c)) low = low && g.degree(w) <= 4;
        if (low) star(c, BlockKind::star5_4m);
      }
      break;
  }
  sort_instances(out);
  return out;
}

VertexSet high_degree_vertices(const Graph& g) {
  VertexSet high;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) >= 5) high.add(v);
  return high;
}

}  // namespace

StarBlockBase build_base(const Graph& g) {
  if (!is_planar(g)) throw NotPlanarError();
  if (auto w = detect_double_star(g, PatternSpec::of(3, 3))) throw NotS33FreeError(*w);

  StarBlockBase base;
  VertexSet high = high_degree_vertices(g);
  VertexSet uncovered = high;
  for (int position = 0; position < 8 && !uncovered.empty(); ++position) {
    for (const Instance& inst : instances_at(g, position)) {
      VertexSet block_high = inst.block & high;
      if (!block_high.intersects(uncovered)) continue;
      if (block_high.intersects(high - uncovered)) continue;
      StarBlock b;
      b.kind = inst.kind;
      b.core = inst.block;
      base.blocks.push_back(b);
      uncovered = uncovered - block_high;
    }
  }
  if (!uncovered.empty()) throw std::logic_error("star-block coverage failed");
  refresh(g, base);
  if (std::string issue = validate_base(g, base); !issue.empty())
    throw std::logic_error("star-block base invalid: " + issue);
  return base;
}

void refresh(const Graph& g, StarBlockBase& base) {
  base.g1 = VertexSet{};
  for (const StarBlock& b : base.blocks) base.g1 |= b.vertices();
  base.g2 = g.vertices() - base.g1;

  std::array<int, Graph::kMaxVertices> mult{};
  for (const StarBlock& b : base.blocks)
    for (int v : b.vertices()) ++mult[v];

  for (StarBlock& b : base.blocks) {
    VertexSet verts = b.vertices();
    b.peripheral = VertexSet{};
    b.shared_le3 = VertexSet{};
    b.shared_deg4 = VertexSet{};
    b.has_triple_shared = false;
    std::int64_t degsum = 0;
    for (int v : verts) {
      degsum += g.degree(v);
      if (is_peripheral(g, v, verts)) b.peripheral.add(v);
      if (mult[v] >= 2) {
        if (g.degree(v) <= 3)
          b.shared_le3.add(v);
        else if (g.degree(v) == 4)
          b.shared_deg4.add(v);
      }
      if (mult[v] == 3) b.has_triple_shared = true;
    }
    b.w0 = QuarterWeight{2 * degsum};
    b.w = b.w0 + QuarterWeight{2 * b.s() + b.s_prime() + (b.has_triple_shared ? 4 : 0)};
  }

  base.classes.assign(base.blocks.size(), BlockClass::b0);
  base.t0 = base.t1 = base.t2 = 0;
  for (std::size_t i = 0; i < base.blocks.size(); ++i) {
    const StarBlock& b = base.blocks[i];
    BlockClass cls;
    if (b.s() + b.s_prime() == 0)
      cls = BlockClass::b0;
    else if (b.has_triple_shared)
      cls = BlockClass::b2;
    else
      cls = BlockClass::b1;
    base.classes[i] = cls;
    if (cls == BlockClass::b0) ++base.t0;
    if (cls == BlockClass::b1) ++base.t1;
    if (cls == BlockClass::b2) ++base.t2;
  }

  base.r1 = base.r2 = base.r3 = 0;
  for (int v : base.g1) {
    if (mult[v] == 2) {
      if (g.degree(v) <= 3)
        ++base.r1;
      else if (g.degree(v) == 4)
        ++base.r2;
    } else if (mult[v] == 3) {
      ++base.r3;
    }
  }
}

Classification classify(const Graph& g, const StarBlockBase& base) {
  StarBlockBase copy = base;
  refresh(g, copy);
  return Classification{copy.classes, copy.t0, copy.t1, copy.t2};
}

std::string validate_base(const Graph& g, const StarBlockBase& base) {
  VertexSet high = high_degree_vertices(g);
  for (int v : high) {
    int m = base.multiplicity(v);
    if (m != 1) return "degree->=5 vertex " + std::to_string(v) + " lies in " + std::to_string(m) + " blocks";
  }
  for (std::size_t i = 0; i < base.blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < base.blocks.size(); ++j) {
      VertexSet common = base.blocks[i].vertices() & base.blocks[j].vertices();
      for (int v : common) {
        if (!is_peripheral(g, v, base.blocks[i].vertices()) ||
            !is_peripheral(g, v, base.blocks[j].vertices()))
          return "common vertex " + std::to_string(v) + " not peripheral in both blocks";
      }
    }
  }
  for (int v : base.g1) {
    int m = base.multiplicity(v);
    if (m >= 2 && (g.degree(v) < 2 || g.degree(v) > 4))
      return "shared vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v));
    if (m > 3) return "vertex " + std::to_string(v) + " lies in " + std::to_string(m) + " blocks";
  }
  for (int v : base.g2)
    if (g.degree(v) > 4) return "residual vertex " + std::to_string(v) + " has degree >= 5";
  return "";
}

QuarterWeight primary_weight(const Graph& g, VertexSet h) {
  if (!h.is_subset_of(g.vertices())) throw std::invalid_argument("primary_weight: set out of range");
  std::int64_t degsum = 0;
  std::int64_t inside2 = 0;  // 2 e(H)
  std::int64_t cross = 0;
  for (int v : h) {
    degsum += g.degree(v);
    inside2 += (g.neighbors(v) & h).count();
    cross += (g.neighbors(v) - h).count();
  }
  if (2 * inside2 + 2 * cross != 2 * degsum) throw std::logic_error("primary weight identity broken");
  return QuarterWeight{2 * degsum};
}

QuarterWeight modified_weight(const Graph& g, const StarBlockBase& base, std::size_t block) {
  StarBlockBase copy = base;
  refresh(g, copy);
  return copy.blocks.at(block).w;
}

QuarterWeight class_weight_bound(BlockClass cls, int v_count, int t) {
  switch (cls) {
    case BlockClass::b0:
      return QuarterWeight{10 * static_cast<std::int64_t>(v_count) - 10};
    case BlockClass::b1: {
      if (t < 1) throw std::invalid_argument("class_weight_bound: B1 needs t >= 1");
      std::int64_t penalty = (20 + t - 1) / t;  // ceil(20/t) quarters = 5/t
      return QuarterWeight{10 * static_cast<std::int64_t>(v_count) - penalty};
    }
    case BlockClass::b2:
      return QuarterWeight{10 * static_cast<std::int64_t>(v_count) - 4};
  }
  throw std::invalid_argument("class_weight_bound: bad class");
}

namespace {

std::vector<bool> bound_pass(const StarBlockBase& base) {
  std::vector<bool> pass(base.blocks.size(), true);
  for (std::size_t i = 0; i < base.blocks.size(); ++i) {
    const StarBlock& b = base.blocks[i];
    pass[i] = b.w <= class_weight_bound(base.classes[i], b.vertices().count(), std::max(base.t(), 1));
  }
  return pass;
}

// The extended block's weight-per-vertex ratio must not increase.
// Absorption may raise a neighboring block's weight by turning the
// absorbed vertex into a shared one; the bounds are re-examined for
// every block on the next round.
bool ratio_weakly_decreased(const StarBlockBase& before, const StarBlockBase& after, std::size_t i) {
  std::int64_t wb = before.blocks[i].w.quarters;
  std::int64_t wa = after.blocks[i].w.quarters;
  std::int64_t vb = before.blocks[i].vertices().count();
  std::int64_t va = after.blocks[i].vertices().count();
  return wa * vb <= wb * va;
}

}  // namespace

RefineResult refine_until_bounded(const Graph& g, StarBlockBase base, int max_rounds) {
  refresh(g, base);
  RefineResult res;
  for (int round = 0; round <= max_rounds; ++round) {
    std::vector<bool> pass = bound_pass(base);
    bool all = std::all_of(pass.begin(), pass.end(), [](bool p) { return p; });
    if (all || round == max_rounds) {
      res.base = std::move(base);
      res.block_pass = std::move(pass);
      res.all_pass = all;
      res.rounds = round;
      if (!all) {
        for (std::size_t i = 0; i < res.block_pass.size(); ++i)
          if (!res.block_pass[i]) {
            res.unresolved_block = i;
            break;
          }
      }
      return res;
    }
    bool progressed = false;
    std::optional<std::size_t> stuck;
    for (std::size_t i = 0; i < base.blocks.size(); ++i) {
      if (bound_pass(base)[i]) continue;
      bool fixed = false;
      for (int v = 0; v < g.vertex_count() && !fixed; ++v) {
        if (!is_potential(g, v, base.blocks[i].vertices())) continue;
        StarBlockBase tentative = base;
        tentative.blocks[i].extension.add(v);
        refresh(g, tentative);
        if (!validate_base(g, tentative).empty()) continue;
        if (!ratio_weakly_decreased(base, tentative, i)) continue;
        base = std::move(tentative);
        fixed = true;
      }
      if (fixed) {
        progressed = true;
      } else if (!stuck) {
        // another block's absorption this round may still loosen this
        // one's bound; only a fully stalled round is unresolved
        stuck = i;
      }
    }
    if (!progressed) {
      res.base = std::move(base);
      res.block_pass = bound_pass(res.base);
      res.all_pass = false;
      res.rounds = round + 1;
      res.unresolved_block = stuck;
      return res;
    }
  }
  // not reached; the loop returns at round == max_rounds
  throw std::logic_error("refine_until_bounded fell through");
}

WeightAudit audit(const Graph& g, const StarBlockBase& base_in) {
  StarBlockBase base = base_in;
  refresh(g, base);

  WeightAudit a;
  a.edges = g.edge_count();
  a.w0_g1 = primary_weight(g, base.g1);
  a.w0_g2 = primary_weight(g, base.g2);
  a.edge_identity_ok = QuarterWeight::units(a.edges) == a.w0_g1 + a.w0_g2;

  a.r1 = base.r1;
  a.r2 = base.r2;
  a.r3 = base.r3;
  a.t0 = base.t0;
  a.t1 = base.t1;
  a.t2 = base.t2;

  QuarterWeight lhs{0};
  a.blocks_ok = true;
  for (std::size_t i = 0; i < base.blocks.size(); ++i) {
    const StarBlock& b = base.blocks[i];
    BlockAuditRow row;
    row.kind = b.kind;
    row.verts = b.vertices();
    row.w0 = b.w0;
    row.w = b.w;
    row.cls = base.classes[i];
    row.bound = class_weight_bound(row.cls, row.verts.count(), std::max(base.t(), 1));
    row.passes = row.w <= row.bound;
    a.blocks_ok = a.blocks_ok && row.passes;
    lhs = lhs + b.w0;
    a.blocks.push_back(row);
  }
  a.ledger_lhs = lhs;
  a.ledger_rhs = a.w0_g1 + QuarterWeight{6 * base.r1 + 8 * base.r2 + 12 * base.r3};
  bool deg2_shared = false;
  for (int v : base.g1)
    if (base.multiplicity(v) >= 2 && g.degree(v) == 2) deg2_shared = true;
  a.ledger_exact = !deg2_shared;
  a.ledger_ok = a.ledger_exact ? a.ledger_lhs == a.ledger_rhs : a.ledger_lhs <= a.ledger_rhs;

  a.bipartite_applicable = base.t2 > 0;
  if (a.bipartite_applicable) a.bipartite_ok = base.r3 <= 2 * base.t2 - 4 && base.t2 >= 3;

  a.multi_block_applicable = base.blocks.size() >= 2;
  if (a.multi_block_applicable) a.multi_block_edge_ok = 2 * g.edge_count() <= 5 * g.vertex_count() - 10;

  return a;
}

DegreeClassReport degree_class_report(const Graph& g) {
  if (!is_planar(g)) throw NotPlanarError();
  if (auto w = detect_double_star(g, PatternSpec::of(3, 3))) throw NotS33FreeError(*w);

  DegreeClassReport r;
  int n = g.vertex_count();
  r.edges = g.edge_count();
  r.min_degree_ok = true;
  r.no_33_edge = true;
  r.no_664_edge = true;
  r.no_7p4p_edge = true;
  for (int v = 0; v < n; ++v) {
    int dv = g.degree(v);
    if (dv < 3) r.min_degree_ok = false;
    if (dv == 3) ++r.m3;
    if (dv == 4) ++r.m4;
    if (dv == 5) ++r.m5;
    if (dv >= 6) ++r.m6;
    for (int u : g.neighbors(v)) {
      if (u <= v) continue;
      int du = g.degree(u);
      int lo = std::min(du, dv), hi = std::max(du, dv);
      if (lo == 3 && hi == 3) r.no_33_edge = false;
      if (hi == 6 && lo >= 4) r.no_664_edge = false;
      if (hi >= 7 && lo >= 4) r.no_7p4p_edge = false;
    }
  }
  r.applicable = r.min_degree_ok && r.no_33_edge && r.no_664_edge && r.no_7p4p_edge;
  if (!r.applicable) return r;

  for (int v = 0; v < n; ++v) {
    int dv = g.degree(v);
    if (dv != 4 && dv != 5) continue;
    for (int u : g.neighbors(v))
      if (g.degree(u) == 3) ++r.x;
  }
  r.identity_ok = 2 * r.edges == 6 * r.m3 + 4 * r.m4 + 5 * r.m5 - r.x;
  if (r.m6 >= 2) {
    r.branch = 2;
    r.bipartite_ok = 3 * r.m3 - r.x <= 2 * (r.m3 + r.m6) - 4;
  } else if (r.m6 == 1) {
    r.branch = 1;
    r.single_hub_ok = 3 * r.m3 - r.x <= r.m3;
  } else {
    r.branch = 0;
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) != 5) continue;
      int small = 0;
      for (int u : g.neighbors(v))
        if (g.degree(u) <= 3) ++small;
      if (small < 2) r.deg5_support_ok = false;
    }
    r.count_ok = 2 * r.m5 <= 3 * r.m3 + 4 * r.m4;
  }
  return r;
}

}  // namespace dstar

#include "dstar/enumerate.hpp"

#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "dstar/canonical.hpp"
#include "dstar/planarity.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dstar {

namespace {

constexpr int kMaxEnumOrder = 12;
constexpr int kRootDepth = 6;

void validate(const EnumConstraints& c) {
  if (c.n < 1 || c.n > kMaxEnumOrder) throw std::invalid_argument("enumerate: n must be in 1..12");
  int cap = c.n * (c.n - 1) / 2;
  int max_e = c.max_edges < 0 ? cap : c.max_edges;
  if (c.min_edges < 0 || c.min_edges > max_e || max_e > cap)
    throw std::invalid_argument("enumerate: need 0 <= min_edges <= max_edges <= n(n-1)/2");
}

struct Walker {
  int n;
  int min_edges;
  int max_edges;
  bool require_planar;
  bool require_connected;
  std::optional<PatternSpec> forbid;
  EnumStats stats;

  // leaf visitor; root collection mode stops the walk at root_depth instead
  const GraphVisitor* visit = nullptr;
  int root_depth = -1;
  std::vector<std::pair<Graph, std::string>>* roots = nullptr;

  explicit Walker(const EnumConstraints& c)
      : n(c.n),
        min_edges(c.min_edges),
        max_edges(c.max_edges < 0 ? c.n * (c.n - 1) / 2 : c.max_edges),
        require_planar(c.require_planar),
        require_connected(c.require_connected),
        forbid(c.forbid) {}

  bool reachable(int k, int edges) const {
    // k-vertex prefix can still gain (n-k)(n+k-1)/2 edges; planar hosts
    // are capped at 3n-6 regardless
    long best = static_cast<long>(edges) + static_cast<long>(n - k) * (n + k - 1) / 2;
    if (require_planar && n >= 3) best = std::min(best, static_cast<long>(3 * n - 6));
    return best >= min_edges;
  }

  void enter(const Graph& g, const std::string& canon) {
    ++stats.visited;
    if (root_depth > 0 && g.vertex_count() == root_depth) {
      roots->emplace_back(g, canon);
      return;
    }
    if (g.vertex_count() == n) {
      if (g.edge_count() < min_edges) {
        ++stats.pruned_edges;
        return;
      }
      if (require_connected && !g.is_connected()) return;
      ++stats.emitted;
      if (visit && *visit) (*visit)(g);
      return;
    }
    expand(g, canon);
  }

  void expand(const Graph& g, const std::string& canon) {
    int k = g.vertex_count();
    std::unordered_set<std::string> seen;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
      int child_edges = g.edge_count() + std::popcount(s);
      if (child_edges > max_edges || !reachable(k + 1, child_edges)) {
        ++stats.pruned_edges;
        continue;
      }
      Graph child = g.with_vertex(VertexSet(s));
      if (forbid && contains_double_star(child, *forbid)) {
        ++stats.pruned_pattern;
        continue;
      }
      if (require_planar && !is_planar(child)) {
        ++stats.pruned_planarity;
        continue;
      }
      CanonicalForm cf = canonical_form(child);
      // accept the child only if this parent is its canonical parent:
      // deleting the new vertex must match deleting the canonical-last one
      int vstar = -1;
      for (int v = 0; v <= k; ++v) {
        if (cf.perm[v] == k) {
          vstar = v;
          break;
        }
      }
      if (vstar != k && canonical_string(child.without_vertex(vstar)) != canon) continue;
      if (!seen.insert(cf.bytes).second) continue;
      enter(child, cf.bytes);
    }
  }
};

Graph single_vertex() { return GraphBuilder(1).build(); }

}  // namespace

EnumStats enumerate_graphs(const EnumConstraints& c, const GraphVisitor& visit) {
  validate(c);
  Walker w(c);
  w.visit = &visit;
  Graph k1 = single_vertex();
  w.enter(k1, canonical_string(k1));
  return w.stats;
}

int default_workers() {
  if (const char* env = std::getenv("TURAN_WORKERS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

EnumStats enumerate_parallel(const EnumConstraints& c, int workers,
                             const std::function<void(const Graph&, std::size_t)>& visit,
                             const std::function<void(std::size_t)>& on_roots) {
  validate(c);
  if (workers <= 0) workers = default_workers();
  int depth = std::min(c.n - 1, kRootDepth);
  if (depth < 1 || workers == 1) {
    if (on_roots) on_roots(1);
    GraphVisitor wrapped;
    if (visit) wrapped = [&](const Graph& g) { visit(g, 0); };
    return enumerate_graphs(c, wrapped);
  }

  std::vector<std::pair<Graph, std::string>> roots;
  Walker head(c);
  head.root_depth = depth;
  head.roots = &roots;
  Graph k1 = single_vertex();
  head.enter(k1, canonical_string(k1));
  if (on_roots) on_roots(roots.size());

  std::vector<EnumStats> per_root(roots.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
#endif
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(roots.size()); ++r) {
    Walker w(c);
    GraphVisitor sub;
    if (visit) sub = [&, r](const Graph& g) { visit(g, static_cast<std::size_t>(r)); };
    w.visit = &sub;
    w.expand(roots[r].first, roots[r].second);
    per_root[r] = w.stats;
  }

  EnumStats total = head.stats;
  for (const EnumStats& s : per_root) total += s;
  return total;
}

}  // namespace dstar

#include "dstar/graph.hpp"

#include <algorithm>
#include <functional>

namespace dstar {

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

VertexSet Graph::component_of(int v) const {
  VertexSet comp = VertexSet::single(v);
  VertexSet frontier = comp;
  while (!frontier.empty()) {
    VertexSet next;
    for (int u : frontier) next |= adj_[u];
    frontier = next - comp;
    comp |= next;
  }
  return comp;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  return component_of(0) == vertices();
}

Graph Graph::with_vertex(VertexSet nbrs) const {
  if (n_ >= kMaxVertices) throw std::invalid_argument("with_vertex: vertex cap reached");
  if (!nbrs.is_subset_of(vertices())) throw std::invalid_argument("with_vertex: neighbor out of range");
  Graph g = *this;
  g.adj_[n_] = nbrs;
  for (int u : nbrs) g.adj_[u].add(n_);
  g.n_ = n_ + 1;
  g.edge_count_ = edge_count_ + nbrs.count();
  return g;
}

Graph Graph::without_vertex(int v) const {
  Graph g;
  g.n_ = n_ - 1;
  for (int u = 0; u < n_; ++u) {
    if (u == v) continue;
    std::uint64_t row = adj_[u].bits();
    std::uint64_t low = row & ((std::uint64_t{1} << v) - 1);
    std::uint64_t high = (v < 63) ? (row >> (v + 1)) << v : 0;
    int target = u < v ? u : u - 1;
    g.adj_[target] = VertexSet(low | high);
  }
  g.edge_count_ = edge_count_ - degree(v);
  return g;
}

Graph Graph::permuted(std::span<const int> perm) const {
  Graph g;
  g.n_ = n_;
  g.edge_count_ = edge_count_;
  for (int v = 0; v < n_; ++v) {
    VertexSet row;
    for (int u : adj_[v]) row.add(perm[u]);
    g.adj_[perm[v]] = row;
  }
  return g;
}

bool Graph::operator==(const Graph& o) const {
  if (n_ != o.n_ || edge_count_ != o.edge_count_) return false;
  for (int v = 0; v < n_; ++v)
    if (adj_[v] != o.adj_[v]) return false;
  return true;
}

GraphBuilder::GraphBuilder(int n) {
  if (n < 1 || n > Graph::kMaxVertices) throw std::invalid_argument("graph order must be in 1..64");
  g_.n_ = n;
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_) throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("no loops");
  if (!g_.adj_[u].contains(v)) {
    g_.adj_[u].add(v);
    g_.adj_[v].add(u);
    g_.edge_count_++;
  }
  return *this;
}

Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

Graph cycle_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return b.build();
}

Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
  return b.build();
}

Graph complete_bipartite(int a, int b) {
  GraphBuilder g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g.build();
}

PatternSpec PatternSpec::of(int m, int l) {
  if (m < 1 || l < 1) throw std::invalid_argument("double star arms must be >= 1");
  if (m > l) std::swap(m, l);
  return PatternSpec{m, l};
}

Graph double_star_graph(PatternSpec p) {
  GraphBuilder b(p.total_vertices());
  b.add_edge(0, 1);
  for (int i = 0; i < p.m; ++i) b.add_edge(0, 2 + i);
  for (int i = 0; i < p.l; ++i) b.add_edge(1, 2 + p.m + i);
  return b.build();
}

bool DoubleStarWitness::valid_for(const Graph& g, PatternSpec p) const {
  if (x == y || !g.has_edge(x, y)) return false;
  if (x_arms.count() != p.m || y_arms.count() != p.l) return false;
  VertexSet centers = VertexSet::of({x, y});
  if (x_arms.intersects(y_arms) || (x_arms | y_arms).intersects(centers)) return false;
  if (!x_arms.is_subset_of(g.neighbors(x))) return false;
  if (!y_arms.is_subset_of(g.neighbors(y))) return false;
  return true;
}

namespace {

// Takes `want` vertices from `preferred` first, then from `backup`.
VertexSet pick_arms(VertexSet preferred, VertexSet backup, int want) {
  VertexSet out;
  for (int v : preferred) {
    if (want == 0) return out;
    out.add(v);
    --want;
  }
  for (int v : backup) {
    if (want == 0) return out;
    out.add(v);
    --want;
  }
  return out;
}

std::optional<DoubleStarWitness> witness_at(const Graph& g, PatternSpec p, int x, int y) {
  if (g.degree(x) < p.m + 1 || g.degree(y) < p.l + 1) return std::nullopt;
  VertexSet centers = VertexSet::of({x, y});
  VertexSet nx = g.neighbors(x) - centers;
  VertexSet ny = g.neighbors(y) - centers;
  if ((nx | ny).count() < p.m + p.l) return std::nullopt;
  VertexSet common = nx & ny;
  DoubleStarWitness w;
  w.x = x;
  w.y = y;
  w.x_arms = pick_arms(nx - common, common, p.m);
  w.y_arms = pick_arms(ny - nx, common - w.x_arms, p.l);
  if (!w.valid_for(g, p)) throw std::logic_error("double star witness assembly failed");
  return w;
}

}  // namespace

std::optional<DoubleStarWitness> detect_double_star(const Graph& g, PatternSpec p) {
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      if (auto w = witness_at(g, p, u, v)) return w;
      if (p.m != p.l) {
        if (auto w = witness_at(g, p, v, u)) return w;
      }
    }
  }
  return std::nullopt;
}

bool contains_double_star(const Graph& g, PatternSpec p) {
  return detect_double_star(g, p).has_value();
}

namespace {

// Enumerates k-subsets of `pool`, calling fn(subset); stops early on true.
bool for_each_subset(VertexSet pool, int k, const std::function<bool(VertexSet)>& fn);

bool subset_rec(std::uint64_t rest, int k, VertexSet acc, const std::function<bool(VertexSet)>& fn) {
  if (k == 0) return fn(acc);
  while (rest != 0) {
    if (std::popcount(rest) < k) return false;
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    VertexSet next = acc;
    next.add(v);
    if (subset_rec(rest, k - 1, next, fn)) return true;
  }
  return false;
}

bool for_each_subset(VertexSet pool, int k, const std::function<bool(VertexSet)>& fn) {
  return subset_rec(pool.bits(), k, VertexSet{}, fn);
}

}  // namespace

bool brute_force_contains(const Graph& g, PatternSpec p) {
  if (g.vertex_count() > 14) throw std::invalid_argument("brute_force_contains: n > 14");
  for (int x = 0; x < g.vertex_count(); ++x) {
    for (int y : g.neighbors(x)) {
      VertexSet centers = VertexSet::of({x, y});
      VertexSet nx = g.neighbors(x) - centers;
      VertexSet ny = g.neighbors(y) - centers;
      bool found = for_each_subset(nx, p.m, [&](VertexSet xa) {
        return for_each_subset(ny - xa, p.l, [&](VertexSet) { return true; });
      });
      if (found) return true;
    }
  }
  return false;
}

}  // namespace dstar

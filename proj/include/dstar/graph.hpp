#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dstar/vertexset.hpp"

namespace dstar {

// Immutable simple undirected graph on at most 64 vertices.
// Neighborhoods are single-word bitsets; all mutation goes through
// GraphBuilder or the with_/without_ copies.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;

  int vertex_count() const { return n_; }
  int edge_count() const { return edge_count_; }
  int degree(int v) const { return adj_[v].count(); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const { return adj_[u].contains(v); }
  VertexSet vertices() const { return VertexSet::range(n_); }

  int max_degree() const;
  bool is_connected() const;
  VertexSet component_of(int v) const;

  // Copy with one extra vertex adjacent to `nbrs` (must be within range).
  Graph with_vertex(VertexSet nbrs) const;
  // Copy with vertex v removed; vertices above v shift down by one.
  Graph without_vertex(int v) const;
  // Copy relabeled so vertex v becomes perm[v].
  Graph permuted(std::span<const int> perm) const;

  bool operator==(const Graph& o) const;

 private:
  friend class GraphBuilder;
  int n_ = 0;
  int edge_count_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  GraphBuilder& add_edge(int u, int v);
  bool has_edge(int u, int v) const { return g_.adj_[u].contains(v); }
  Graph build() const { return g_; }

 private:
  Graph g_;
};

Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);

// Double star S_{m,l}: an edge xy plus m extra leaves at x and l at y,
// normalized so m <= l.
struct PatternSpec {
  int m = 1;
  int l = 1;

  static PatternSpec of(int m, int l);
  int total_vertices() const { return m + l + 2; }
  bool operator==(const PatternSpec&) const = default;
};

// The pattern graph itself (centers 0,1; arms of 0 first).
Graph double_star_graph(PatternSpec p);

struct DoubleStarWitness {
  int x = 0;
  int y = 0;
  VertexSet x_arms;
  VertexSet y_arms;

  bool valid_for(const Graph& g, PatternSpec p) const;
};

// Subgraph (not necessarily induced) detection of S_{m,l} via the
// union-of-neighborhoods characterization: an edge xy works iff
// deg(x) >= m+1, deg(y) >= l+1 and |(N(x) u N(y)) \ {x,y}| >= m+l.
std::optional<DoubleStarWitness> detect_double_star(const Graph& g, PatternSpec p);
bool contains_double_star(const Graph& g, PatternSpec p);

// Exhaustive oracle over every edge and every arm assignment. Test use only.
// Guarded at n <= 14.
bool brute_force_contains(const Graph& g, PatternSpec p);

}  // namespace dstar

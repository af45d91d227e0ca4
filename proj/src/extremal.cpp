#include "dstar/extremal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "dstar/enumerate.hpp"
#include "dstar/planarity.hpp"

namespace dstar {

PatternSpec recipe_target(Recipe r) {
  switch (r) {
    case Recipe::double_wheel: return PatternSpec::of(4, 4);
    case Recipe::triangle_forest: return PatternSpec::of(1, 1);
    default: return PatternSpec::of(3, 3);
  }
}

int expected_edges(const ConstructionRecipe& r) {
  switch (r.kind) {
    case Recipe::double_wheel: return 3 * r.n - 6;
    case Recipe::triangle_forest: return r.n % 3 == 0 ? r.n : r.n - 1;
    case Recipe::glued_stars: return 5 * r.n / 2 - 5;
    case Recipe::four_regular_8: return 16;
    case Recipe::four_regular_9: return 18;
    case Recipe::component_66: return 15;
    case Recipe::component_65: return 15;
    case Recipe::maximal_planar: return 3 * r.n - 6;
  }
  throw std::invalid_argument("unknown recipe");
}

namespace {

Graph build_double_wheel(int n) {
  if (n < 5 || n > Graph::kMaxVertices) throw std::invalid_argument("double wheel needs 5 <= n <= 64");
  GraphBuilder b(n);
  int ring = n - 2;
  for (int i = 0; i < ring; ++i) {
    b.add_edge(i, (i + 1) % ring);
    b.add_edge(i, ring);      // hub 1
    b.add_edge(i, ring + 1);  // hub 2
  }
  return b.build();
}

Graph build_triangle_forest(int n) {
  if (n < 1 || n > Graph::kMaxVertices) throw std::invalid_argument("triangle forest needs 1 <= n <= 64");
  GraphBuilder b(n);
  int v = 0;
  int rem = n % 3;
  int triangles = rem == 1 ? (n - 4) / 3 : n / 3;
  if (triangles < 0) triangles = 0;
  for (int t = 0; t < triangles; ++t, v += 3) {
    b.add_edge(v, v + 1);
    b.add_edge(v + 1, v + 2);
    b.add_edge(v, v + 2);
  }
  if (n - v == 4) {
    // K_{1,3}: the P_4-free optimum on four leftover vertices
    b.add_edge(v, v + 1);
    b.add_edge(v, v + 2);
    b.add_edge(v, v + 3);
  } else if (n - v == 2) {
    b.add_edge(v, v + 1);
  }
  return b.build();
}

Graph build_glued_stars(int n) {
  if (n < 10 || n > Graph::kMaxVertices) throw std::invalid_argument("glued stars needs 10 <= n <= 64");
  GraphBuilder b(n);
  int k = n - 2;  // shared peripherals 0..k-1; centers k, k+1
  for (int i = 0; i < k; ++i) {
    b.add_edge(i, k);
    b.add_edge(i, k + 1);
  }
  // matching on the peripherals; one vertex stays at degree 2 when n is odd
  for (int i = 0; i + 1 < k; i += 2) b.add_edge(i, i + 1);
  return b.build();
}

Graph build_antiprism8() {
  GraphBuilder b(8);
  for (int i = 0; i < 4; ++i) {
    b.add_edge(i, (i + 1) % 4);
    b.add_edge(4 + i, 4 + (i + 1) % 4);
    b.add_edge(i, 4 + i);
    b.add_edge(i, 4 + (i + 1) % 4);
  }
  return b.build();
}

Graph build_four_regular_9() {
  // line graph of the triangular prism: vertices are prism edges,
  // adjacent when they share a prism endpoint
  const std::pair<int, int> prism_edges[9] = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5},
                                              {5, 3}, {0, 3}, {1, 4}, {2, 5}};
  GraphBuilder b(9);
  for (int i = 0; i < 9; ++i) {
    for (int j = i + 1; j < 9; ++j) {
      auto [a1, a2] = prism_edges[i];
      auto [b1, b2] = prism_edges[j];
      if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) b.add_edge(i, j);
    }
  }
  return b.build();
}

Graph build_component66() {
  // 6-6 edge 0-1, common neighbors 2..6 forming a path
  GraphBuilder b(7);
  b.add_edge(0, 1);
  for (int a = 2; a <= 6; ++a) {
    b.add_edge(0, a);
    b.add_edge(1, a);
  }
  for (int a = 2; a < 6; ++a) b.add_edge(a, a + 1);
  return b.build();
}

Graph build_component65() {
  // 6-5 edge 0-1 with common neighbors 2..5; the path 3-4-5-2 plus a
  // vertex joined to 0 and the consecutive pair {5, 2} closes the
  // triangulation
  GraphBuilder b(7);
  b.add_edge(0, 1);
  for (int a = 2; a <= 5; ++a) {
    b.add_edge(0, a);
    b.add_edge(1, a);
  }
  b.add_edge(3, 4);
  b.add_edge(4, 5);
  b.add_edge(5, 2);
  b.add_edge(0, 6);
  b.add_edge(2, 6);
  b.add_edge(5, 6);
  return b.build();
}

Graph build_maximal_planar(int n) {
  if (n < 3 || n > 7) throw std::invalid_argument("maximal planar recipe needs 3 <= n <= 7");
  GraphBuilder b(n);
  b.add_edge(0, 1);
  b.add_edge(1, 2);
  b.add_edge(0, 2);
  for (int v = 3; v < n; ++v) {
    b.add_edge(v, 0);
    b.add_edge(v, 1);
    b.add_edge(v, v - 1);  // stacks v into the face {0, 1, v-1}
  }
  return b.build();
}

void self_verify(const Graph& g, const ConstructionRecipe& r) {
  if (g.edge_count() != expected_edges(r)) throw std::logic_error("construction has wrong edge count");
  if (!is_planar(g)) throw std::logic_error("construction is not planar");
  if (contains_double_star(g, recipe_target(r.kind)))
    throw std::logic_error("construction contains its forbidden pattern");
}

}  // namespace

Graph construct(const ConstructionRecipe& r) {
  Graph g;
  switch (r.kind) {
    case Recipe::double_wheel: g = build_double_wheel(r.n); break;
    case Recipe::triangle_forest: g = build_triangle_forest(r.n); break;
    case Recipe::glued_stars: g = build_glued_stars(r.n); break;
    case Recipe::four_regular_8: g = build_antiprism8(); break;
    case Recipe::four_regular_9: g = build_four_regular_9(); break;
    case Recipe::component_66: g = build_component66(); break;
    case Recipe::component_65: g = build_component65(); break;
    case Recipe::maximal_planar: g = build_maximal_planar(r.n); break;
    default: throw std::invalid_argument("unknown recipe");
  }
  self_verify(g, r);
  return g;
}

namespace {

Graph disjoint_union(const Graph& a, const Graph& b) {
  GraphBuilder out(a.vertex_count() + b.vertex_count());
  for (int v = 0; v < a.vertex_count(); ++v)
    for (int u : a.neighbors(v))
      if (u > v) out.add_edge(v, u);
  int off = a.vertex_count();
  for (int v = 0; v < b.vertex_count(); ++v)
    for (int u : b.neighbors(v))
      if (u > v) out.add_edge(off + v, off + u);
  return out.build();
}

// Identifies vertex va of a with vertex vb of b.
Graph glue_at(const Graph& a, const Graph& b, int va, int vb) {
  int nb = b.vertex_count();
  GraphBuilder out(a.vertex_count() + nb - 1);
  for (int v = 0; v < a.vertex_count(); ++v)
    for (int u : a.neighbors(v))
      if (u > v) out.add_edge(v, u);
  auto map_b = [&](int v) {
    if (v == vb) return va;
    int x = v < vb ? v : v - 1;
    return a.vertex_count() + x;
  };
  for (int v = 0; v < nb; ++v)
    for (int u : b.neighbors(v))
      if (u > v) out.add_edge(map_b(v), map_b(u));
  return out.build();
}

bool good(const Graph& g, int n, PatternSpec p, int target_edges) {
  return g.vertex_count() == n && g.edge_count() == target_edges && is_planar(g) &&
         !contains_double_star(g, p);
}

std::vector<Graph> catalog(PatternSpec p) {
  std::vector<Graph> out;
  auto add = [&](ConstructionRecipe r) {
    Graph g = construct(r);
    if (!contains_double_star(g, p)) out.push_back(g);
  };
  add({Recipe::component_66, 7});
  add({Recipe::component_65, 7});
  for (int n = 3; n <= 7; ++n) add({Recipe::maximal_planar, n});
  add({Recipe::four_regular_8, 8});
  add({Recipe::four_regular_9, 9});
  return out;
}

// Depth-first edge augmentation keeping the graph planar and p-free.
bool augment(Graph g, int n, PatternSpec p, int target_edges, long& budget, Graph* out) {
  if (budget-- <= 0) return false;
  if (g.edge_count() == target_edges) {
    *out = g;
    return true;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      GraphBuilder b(n);
      for (int x = 0; x < n; ++x)
        for (int y : g.neighbors(x))
          if (y > x) b.add_edge(x, y);
      b.add_edge(u, v);
      Graph h = b.build();
      if (contains_double_star(h, p) || !is_planar(h)) continue;
      if (augment(h, n, p, target_edges, budget, out)) return true;
    }
  }
  return false;
}

}  // namespace

std::optional<Graph> search_extremal(int n, PatternSpec p, int target_edges) {
  if (n < 1 || n > 14) throw std::invalid_argument("search_extremal: n must be in 1..14");

  std::vector<Graph> parts = catalog(p);
  if (n >= 10 && p == PatternSpec::of(3, 3) && target_edges == 5 * n / 2 - 5)
    parts.push_back(construct({Recipe::glued_stars, n}));

  for (const Graph& g : parts)
    if (good(g, n, p, target_edges)) return g;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i; j < parts.size(); ++j) {
      Graph u = disjoint_union(parts[i], parts[j]);
      if (good(u, n, p, target_edges)) return u;
      if (parts[i].vertex_count() + parts[j].vertex_count() - 1 == n) {
        for (int va = 0; va < parts[i].vertex_count(); ++va) {
          if (parts[i].degree(va) > 3) continue;
          for (int vb = 0; vb < parts[j].vertex_count(); ++vb) {
            if (parts[j].degree(vb) > 3) continue;
            Graph glued = glue_at(parts[i], parts[j], va, vb);
            if (good(glued, n, p, target_edges)) return glued;
          }
        }
      }
    }
  }

  if (n <= 10) {
    // exhaustive level: a miss here is definitive
    EnumConstraints c;
    c.n = n;
    c.min_edges = c.max_edges = target_edges;
    c.require_planar = true;
    c.forbid = p;
    std::optional<Graph> found;
    enumerate_graphs(c, [&](const Graph& g) {
      if (!found) found = g;
    });
    return found;
  }

  // bounded augmentation from catalog seeds padded with isolated vertices
  for (const Graph& seed : parts) {
    if (seed.vertex_count() > n || seed.edge_count() > target_edges) continue;
    Graph g = seed;
    while (g.vertex_count() < n) g = g.with_vertex(VertexSet{});
    long budget = 200000;
    Graph out;
    if (augment(g, n, p, target_edges, budget, &out)) return out;
  }
  return std::nullopt;
}

}  // namespace dstar

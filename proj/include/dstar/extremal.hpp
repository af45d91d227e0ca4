#pragma once

#include <optional>

#include "dstar/graph.hpp"

namespace dstar {

enum class Recipe {
  double_wheel,     // two non-adjacent hubs joined to all of C_{n-2}; S_{4,4}-free
  triangle_forest,  // disjoint triangles (plus K_2 or K_{1,3} when 3 does not divide n); P_4-free
  glued_stars,      // two (n-2)-3- stars sharing all peripherals, matched up; S_{3,3}-free, n >= 10
  four_regular_8,   // square antiprism
  four_regular_9,   // line graph of the triangular prism
  component_66,     // 7-vertex triangulation around a 6-6 edge
  component_65,     // 7-vertex triangulation around a 6-5 edge
  maximal_planar,   // stacked triangulation, 3 <= n <= 7
};

struct ConstructionRecipe {
  Recipe kind{};
  int n = 0;  // ignored by the fixed-size recipes
};

// The forbidden pattern each family is extremal for.
PatternSpec recipe_target(Recipe r);

// Builds the graph and self-verifies it (planarity, pattern-freeness for
// its target, exact edge count) before returning.
Graph construct(const ConstructionRecipe& r);

int expected_edges(const ConstructionRecipe& r);

// Looks for a planar p-free graph on n vertices with exactly
// target_edges edges: catalog components combined disjointly or glued at
// low-degree vertices, then a bounded edge-augmentation search. For
// n <= 10 an exhaustive pass makes a nullopt answer definitive.
std::optional<Graph> search_extremal(int n, PatternSpec p, int target_edges);

}  // namespace dstar

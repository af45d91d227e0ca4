#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "dstar/graph.hpp"

// Independent reference implementations used only by tests. None of them
// share code paths with the library algorithms they check.
namespace dstar::testing {

// Planarity by exhaustive K5 / K3,3 subdivision search. Guarded at n <= 8.
bool planar_by_subdivision(const Graph& g);

// Labeled graph indexed by its edge bitmask, pairs in (0,1),(0,2),(1,2),... order.
Graph from_mask(int n, std::uint64_t mask);

// One canonical representative per isomorphism class satisfying `keep`,
// found by enumerating all 2^C(n,2) labeled graphs and deduplicating.
std::vector<Graph> classes_by_labeled_enumeration(int n, const std::function<bool(const Graph&)>& keep = {});

// Max edges over all labeled planar p-free graphs on n vertices.
int naive_planar_turan(int n, PatternSpec p);

Graph random_graph(std::mt19937_64& rng, int n, double edge_prob);

}  // namespace dstar::testing

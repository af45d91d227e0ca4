#pragma once

#include <array>
#include <string>

#include "dstar/graph.hpp"

namespace dstar {

// Isomorphism-invariant encoding plus the relabeling that produced it.
// Two graphs have equal bytes iff they are isomorphic.
struct CanonicalForm {
  std::string bytes;
  int n = 0;
  std::array<int, Graph::kMaxVertices> perm{};  // original vertex -> canonical position

  bool operator==(const CanonicalForm& o) const { return bytes == o.bytes; }
};

CanonicalForm canonical_form(const Graph& g);

// Just the encoding; what enumeration dedup and set keys use.
std::string canonical_string(const Graph& g);

// The graph relabeled into canonical positions.
Graph canonical_graph(const Graph& g);

}  // namespace dstar

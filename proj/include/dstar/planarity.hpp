#pragma once

#include <optional>
#include <vector>

#include "dstar/graph.hpp"

namespace dstar {

// Combinatorial embedding: cyclic neighbor order around each vertex.
struct Embedding {
  int n = 0;
  std::vector<std::vector<int>> rotation;
};

bool is_planar(const Graph& g);

// Rotation-system certificate; nullopt iff g is not planar.
std::optional<Embedding> planar_embedding(const Graph& g);

// Faces traced from the rotation system, normalized so that
// v - e + f = 1 + #components for any planar embedding.
int face_count(const Graph& g, const Embedding& emb);

// Rotation lists match neighborhoods and the Euler formula checks out.
bool verify_embedding(const Graph& g, const Embedding& emb);

}  // namespace dstar

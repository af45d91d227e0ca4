#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dstar/graph.hpp"

namespace dstar {

// Header-less graph6, bit-exact per the de-facto standard.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view line);

// One graph per non-empty line; tolerates the optional ">>graph6<<" header.
std::vector<Graph> read_graph6(std::istream& in);

// Binary planar_code as written by plantri and friends; the optional
// ">>planar_code<<" header is consumed when present. Embeddings are
// dropped, only the graphs are returned.
std::vector<Graph> read_planar_code(std::istream& in);

void write_dot(const Graph& g, std::ostream& out, std::string_view name = "g");

}  // namespace dstar

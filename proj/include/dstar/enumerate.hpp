#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "dstar/graph.hpp"

namespace dstar {

struct EnumConstraints {
  int n = 1;
  int min_edges = 0;
  int max_edges = -1;  // -1: no cap
  bool require_planar = false;
  std::optional<PatternSpec> forbid;
  bool require_connected = false;
};

struct EnumStats {
  std::uint64_t visited = 0;
  std::uint64_t emitted = 0;
  std::uint64_t pruned_planarity = 0;
  std::uint64_t pruned_pattern = 0;
  std::uint64_t pruned_edges = 0;

  EnumStats& operator+=(const EnumStats& o) {
    visited += o.visited;
    emitted += o.emitted;
    pruned_planarity += o.pruned_planarity;
    pruned_pattern += o.pruned_pattern;
    pruned_edges += o.pruned_edges;
    return *this;
  }
  bool operator==(const EnumStats&) const = default;
};

using GraphVisitor = std::function<void(const Graph&)>;

// Isomorph-free generation by canonical augmentation: one representative
// per isomorphism class satisfying the constraints, visited in a fixed
// deterministic order. Guarded at n <= 12.
EnumStats enumerate_graphs(const EnumConstraints& c, const GraphVisitor& visit = {});

// Same tree split by top-level augmentation branches across OpenMP
// workers. The visitor runs concurrently (it must be reentrant) and
// receives the branch index so callers can merge per-branch results in
// a deterministic order; on_roots reports the branch count up front.
// workers <= 0 picks the default.
EnumStats enumerate_parallel(
    const EnumConstraints& c, int workers,
    const std::function<void(const Graph&, std::size_t root)>& visit = {},
    const std::function<void(std::size_t root_count)>& on_roots = {});

// TURAN_WORKERS if set, otherwise the OpenMP thread count.
int default_workers();

}  // namespace dstar

#include "dstar/canonical.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace dstar {

namespace {

using Partition = std::vector<VertexSet>;

// True when swapping u and v is an automorphism all by itself.
bool are_twins(const Graph& g, int u, int v) {
  VertexSet nu = g.neighbors(u);
  VertexSet nv = g.neighbors(v);
  if (g.has_edge(u, v)) {
    nu.remove(v);
    nv.remove(u);
  }
  return nu == nv;
}

struct Searcher {
  const Graph& g;
  int n;
  std::string best;
  std::array<int, Graph::kMaxVertices> best_perm{};

  explicit Searcher(const Graph& graph) : g(graph), n(graph.vertex_count()) {}

  // Splits cells by neighbor counts into every cell until equitable.
  void refine(Partition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      Partition np;
      np.reserve(p.size() + 2);
      for (VertexSet cell : p) {
        if (cell.count() <= 1) {
          np.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<int>, VertexSet>> groups;
        for (int v : cell) {
          std::vector<int> sig;
          sig.reserve(p.size());
          for (VertexSet other : p) sig.push_back((g.neighbors(v) & other).count());
          auto it = std::find_if(groups.begin(), groups.end(),
                                 [&](const auto& gr) { return gr.first == sig; });
          if (it == groups.end())
            groups.emplace_back(std::move(sig), VertexSet::single(v));
          else
            it->second.add(v);
        }
        if (groups.size() > 1) changed = true;
        std::sort(groups.begin(), groups.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& gr : groups) np.push_back(gr.second);
      }
      p = std::move(np);
    }
  }

  void emit_leaf(const Partition& p) {
    std::array<int, Graph::kMaxVertices> pos_to_vertex{};
    std::array<int, Graph::kMaxVertices> perm{};
    for (int i = 0; i < n; ++i) {
      int v = p[i].first();
      pos_to_vertex[i] = v;
      perm[v] = i;
    }
    std::string enc;
    enc.reserve(1 + (n * (n - 1) / 2 + 7) / 8);
    enc.push_back(static_cast<char>(n));
    unsigned acc = 0;
    int nbits = 0;
    for (int j = 1; j < n; ++j) {
      VertexSet row = g.neighbors(pos_to_vertex[j]);
      for (int i = 0; i < j; ++i) {
        acc = (acc << 1) | (row.contains(pos_to_vertex[i]) ? 1u : 0u);
        if (++nbits == 8) {
          enc.push_back(static_cast<char>(acc));
          acc = 0;
          nbits = 0;
        }
      }
    }
    if (nbits > 0) enc.push_back(static_cast<char>(acc << (8 - nbits)));
    if (best.empty() || enc < best) {
      best = std::move(enc);
      best_perm = perm;
    }
  }

  void search(Partition p) {
    refine(p);
    int target = -1;
    int target_size = n + 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
      int c = p[i].count();
      if (c > 1 && c < target_size) {
        target = static_cast<int>(i);
        target_size = c;
      }
    }
    if (target < 0) {
      emit_leaf(p);
      return;
    }
    VertexSet cell = p[target];
    VertexSet tried;
    for (int v : cell) {
      bool skip = false;
      for (int u : tried) {
        if (are_twins(g, u, v)) {
          skip = true;
          break;
        }
      }
      tried.add(v);
      if (skip) continue;
      Partition child;
      child.reserve(p.size() + 1);
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (static_cast<int>(i) == target) {
          child.push_back(VertexSet::single(v));
          child.push_back(cell - VertexSet::single(v));
        } else {
          child.push_back(p[i]);
        }
      }
      search(std::move(child));
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  Searcher s(g);
  s.search(Partition{g.vertices()});
  CanonicalForm cf;
  cf.bytes = std::move(s.best);
  cf.n = g.vertex_count();
  cf.perm = s.best_perm;
  return cf;
}

std::string canonical_string(const Graph& g) {
  Searcher s(g);
  s.search(Partition{g.vertices()});
  return std::move(s.best);
}

Graph canonical_graph(const Graph& g) {
  CanonicalForm cf = canonical_form(g);
  return g.permuted(std::span<const int>(cf.perm.data(), g.vertex_count()));
}

}  // namespace dstar

#include "oracles.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>

#include "dstar/canonical.hpp"
#include "dstar/planarity.hpp"

namespace dstar::testing {

namespace {

// Internally-disjoint path placement for one branch-vertex assignment.
struct SubdivisionSearch {
  const Graph& g;
  VertexSet branch;
  std::vector<std::pair<int, int>> pairs;

  bool place(std::size_t idx, VertexSet used) {
    if (idx == pairs.size()) return true;
    auto [a, b] = pairs[idx];
    if (g.has_edge(a, b) && place(idx + 1, used)) return true;
    return extend(a, b, used, idx);
  }

  // grows a path a .. cur .. b through unused non-branch vertices
  bool extend(int cur, int b, VertexSet used, std::size_t idx) {
    VertexSet free = (g.neighbors(cur) - branch) - used;
    for (int x : free) {
      VertexSet used2 = used;
      used2.add(x);
      if (g.has_edge(x, b) && place(idx + 1, used2)) return true;
      if (extend(x, b, used2, idx)) return true;
    }
    return false;
  }
};

bool has_subdivision_with_branches(const Graph& g, const std::vector<int>& branches,
                                   const std::vector<std::pair<int, int>>& pattern_edges) {
  SubdivisionSearch s{g, VertexSet{}, {}};
  for (int v : branches) s.branch.add(v);
  for (auto [i, j] : pattern_edges) s.pairs.emplace_back(branches[i], branches[j]);
  return s.place(0, VertexSet{});
}

void subsets(int n, int k, int start, std::vector<int>& cur, const std::function<bool(const std::vector<int>&)>& fn,
             bool& stop) {
  if (stop) return;
  if (static_cast<int>(cur.size()) == k) {
    if (fn(cur)) stop = true;
    return;
  }
  for (int v = start; v < n; ++v) {
    cur.push_back(v);
    subsets(n, k, v + 1, cur, fn, stop);
    cur.pop_back();
    if (stop) return;
  }
}

bool has_k5_subdivision(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::pair<int, int>> k5_edges;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) k5_edges.emplace_back(i, j);
  bool stop = false;
  std::vector<int> cur;
  subsets(n, 5, 0, cur,
          [&](const std::vector<int>& bs) {
            for (int v : bs)
              if (g.degree(v) < 4) return false;
            return has_subdivision_with_branches(g, bs, k5_edges);
          },
          stop);
  return stop;
}

bool has_k33_subdivision(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::pair<int, int>> k33_edges;
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) k33_edges.emplace_back(i, j);
  bool stop = false;
  std::vector<int> left;
  subsets(n, 3, 0, left,
          [&](const std::vector<int>& ls) {
            for (int v : ls)
              if (g.degree(v) < 3) return false;
            bool inner_stop = false;
            std::vector<int> right;
            VertexSet lset;
            for (int v : ls) lset.add(v);
            subsets(n, 3, 0, right,
                    [&](const std::vector<int>& rs) {
                      for (int v : rs)
                        if (lset.contains(v) || g.degree(v) < 3) return false;
                      std::vector<int> branches = ls;
                      branches.insert(branches.end(), rs.begin(), rs.end());
                      return has_subdivision_with_branches(g, branches, k33_edges);
                    },
                    inner_stop);
            return inner_stop;
          },
          stop);
  return stop;
}

}  // namespace

bool planar_by_subdivision(const Graph& g) {
  if (g.vertex_count() > 8) throw std::invalid_argument("subdivision oracle guarded at n <= 8");
  return !has_k5_subdivision(g) && !has_k33_subdivision(g);
}

Graph from_mask(int n, std::uint64_t mask) {
  GraphBuilder b(n);
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (mask & (std::uint64_t{1} << bit)) b.add_edge(i, j);
  return b.build();
}

std::vector<Graph> classes_by_labeled_enumeration(int n, const std::function<bool(const Graph&)>& keep) {
  if (n > 7) throw std::invalid_argument("labeled enumeration oracle guarded at n <= 7");
  std::vector<Graph> reps;
  std::unordered_set<std::string> seen;
  std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Graph g = from_mask(n, mask);
    if (keep && !keep(g)) continue;
    if (seen.insert(canonical_string(g)).second) reps.push_back(g);
  }
  return reps;
}

int naive_planar_turan(int n, PatternSpec p) {
  if (n > 7) throw std::invalid_argument("naive turan oracle guarded at n <= 7");
  int best = -1;
  std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Graph g = from_mask(n, mask);
    if (g.edge_count() <= best) continue;
    if (brute_force_contains(g, p)) continue;
    if (!is_planar(g)) continue;
    best = g.edge_count();
  }
  return best;
}

Graph random_graph(std::mt19937_64& rng, int n, double edge_prob) {
  std::bernoulli_distribution coin(edge_prob);
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) b.add_edge(i, j);
  return b.build();
}

}  // namespace dstar::testing

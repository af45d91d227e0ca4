#include "dstar/planarity.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace dstar {

namespace {

// Face of the partial embedding; faces of a 2-connected subgraph are
// simple cycles, so a vertex sequence suffices.
struct Face {
  std::vector<int> cycle;
  VertexSet verts;
};

struct Bridge {
  VertexSet interior;
  VertexSet attach;
  int eu = -1, ev = -1;  // set for single-edge bridges
};

// Demoucron-Malgrange-Pertuiset planarity on one biconnected block.
// Grows an embedded subgraph face by face; a bridge with no admissible
// face certifies non-planarity. Returns the face list when planar.
class BlockEmbedder {
 public:
  BlockEmbedder(const Graph& g, VertexSet block_verts) : g_(g), block_(block_verts) {
    for (int v : block_) badj_[v] = g.neighbors(v) & block_;
  }

  bool run() {
    if (!embed_initial_cycle()) throw std::logic_error("block without a cycle");
    while (true) {
      std::vector<Bridge> bridges = find_bridges();
      if (bridges.empty()) return true;
      int pick = -1;
      int pick_face = -1;
      int pick_count = -1;
      for (std::size_t b = 0; b < bridges.size(); ++b) {
        int count = 0;
        int first_face = -1;
        for (std::size_t f = 0; f < faces_.size(); ++f) {
          if (bridges[b].attach.is_subset_of(faces_[f].verts)) {
            ++count;
            if (first_face < 0) first_face = static_cast<int>(f);
          }
        }
        if (count == 0) return false;
        if (pick < 0 || count < pick_count) {
          pick = static_cast<int>(b);
          pick_face = first_face;
          pick_count = count;
        }
      }
      embed_bridge_path(bridges[pick], pick_face);
    }
  }

  const std::vector<Face>& faces() const { return faces_; }

 private:
  const Graph& g_;
  VertexSet block_;
  std::array<VertexSet, Graph::kMaxVertices> badj_{};
  std::array<VertexSet, Graph::kMaxVertices> eadj_{};  // embedded edges
  VertexSet in_h_;
  std::vector<Face> faces_;

  bool embed_initial_cycle() {
    int root = block_.first();
    std::array<int, Graph::kMaxVertices> parent{};
    std::array<int, Graph::kMaxVertices> disc{};
    parent.fill(-2);
    disc.fill(-1);
    int timer = 0;
    struct Frame {
      int v;
      VertexSet::iterator it;
      VertexSet::iterator end;
    };
    std::vector<Frame> stack;
    parent[root] = -1;
    disc[root] = timer++;
    stack.push_back({root, badj_[root].begin(), badj_[root].end()});
    while (!stack.empty()) {
      Frame& fr = stack.back();
      if (fr.it == fr.end) {
        stack.pop_back();
        continue;
      }
      int v = fr.v;
      int w = *fr.it;
      ++fr.it;
      if (disc[w] == -1) {
        parent[w] = v;
        disc[w] = timer++;
        stack.push_back({w, badj_[w].begin(), badj_[w].end()});
      } else if (w != parent[v] && disc[w] < disc[v]) {
        // back edge v->w: w is an ancestor, so the parent chain closes a cycle
        std::vector<int> cyc{v};
        for (int x = v; x != w;) {
          x = parent[x];
          cyc.push_back(x);
        }
        install_cycle(cyc);
        return true;
      }
    }
    return false;
  }

  void install_cycle(const std::vector<int>& cyc) {
    Face f1, f2;
    f1.cycle = cyc;
    f2.cycle = std::vector<int>(cyc.rbegin(), cyc.rend());
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int u = cyc[i];
      int v = cyc[(i + 1) % cyc.size()];
      eadj_[u].add(v);
      eadj_[v].add(u);
      f1.verts.add(u);
      in_h_.add(u);
    }
    f2.verts = f1.verts;
    faces_.push_back(std::move(f1));
    faces_.push_back(std::move(f2));
  }

  std::vector<Bridge> find_bridges() const {
    std::vector<Bridge> out;
    VertexSet outside = block_ - in_h_;
    VertexSet seen;
    for (int s : outside) {
      if (seen.contains(s)) continue;
      VertexSet comp = VertexSet::single(s);
      VertexSet frontier = comp;
      while (!frontier.empty()) {
        VertexSet next;
        for (int u : frontier) next |= badj_[u] & outside;
        frontier = next - comp;
        comp |= frontier;
      }
      seen |= comp;
      Bridge b;
      b.interior = comp;
      for (int u : comp) b.attach |= badj_[u] & in_h_;
      out.push_back(b);
    }
    for (int u : in_h_) {
      for (int v : (badj_[u] - eadj_[u]) & in_h_) {
        if (v <= u) continue;
        Bridge b;
        b.attach = VertexSet::of({u, v});
        b.eu = u;
        b.ev = v;
        out.push_back(b);
      }
    }
    return out;
  }

  void embed_bridge_path(const Bridge& b, int face_idx) {
    int a1, a2;
    std::vector<int> interior;
    if (b.eu >= 0) {
      a1 = b.eu;
      a2 = b.ev;
    } else {
      a1 = b.attach.first();
      // BFS from a1 through the bridge interior to any other attachment
      std::array<int, Graph::kMaxVertices> prev{};
      prev.fill(-1);
      VertexSet visited;
      std::vector<int> queue;
      for (int k : badj_[a1] & b.interior) {
        prev[k] = a1;
        visited.add(k);
        queue.push_back(k);
      }
      int hit = -1;
      a2 = -1;
      for (std::size_t qi = 0; qi < queue.size() && hit < 0; ++qi) {
        int k = queue[qi];
        VertexSet ends = badj_[k] & (b.attach - VertexSet::single(a1));
        if (!ends.empty()) {
          hit = k;
          a2 = ends.first();
          break;
        }
        for (int w : (badj_[k] & b.interior) - visited) {
          prev[w] = k;
          visited.add(w);
          queue.push_back(w);
        }
      }
      if (hit < 0) throw std::logic_error("bridge path search failed");
      for (int x = hit; x != a1; x = prev[x]) interior.push_back(x);
      std::reverse(interior.begin(), interior.end());
    }

    Face& f = faces_[face_idx];
    auto pos = [&](int v) {
      return static_cast<int>(std::find(f.cycle.begin(), f.cycle.end(), v) - f.cycle.begin());
    };
    int i = pos(a1), j = pos(a2);
    int len = static_cast<int>(f.cycle.size());
    Face fa, fb;
    for (int k = i;; k = (k + 1) % len) {
      fa.cycle.push_back(f.cycle[k]);
      if (k == j) break;
    }
    for (int k = j;; k = (k + 1) % len) {
      fb.cycle.push_back(f.cycle[k]);
      if (k == i) break;
    }
    for (auto it = interior.rbegin(); it != interior.rend(); ++it) fa.cycle.push_back(*it);
    for (int v : interior) fb.cycle.push_back(v);
    for (int v : fa.cycle) fa.verts.add(v);
    for (int v : fb.cycle) fb.verts.add(v);

    int prev_v = a1;
    for (int v : interior) {
      eadj_[prev_v].add(v);
      eadj_[v].add(prev_v);
      in_h_.add(v);
      prev_v = v;
    }
    eadj_[prev_v].add(a2);
    eadj_[a2].add(prev_v);

    faces_[face_idx] = std::move(fa);
    faces_.push_back(std::move(fb));
  }
};

// Biconnected components as vertex sets (a block's edges are exactly the
// induced edges on its vertex set).
std::vector<VertexSet> biconnected_blocks(const Graph& g) {
  int n = g.vertex_count();
  std::vector<VertexSet> blocks;
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::pair<int, int>> edge_stack;
  int timer = 0;

  struct Frame {
    int v;
    VertexSet::iterator it;
    VertexSet::iterator end;
  };

  for (int start = 0; start < n; ++start) {
    if (disc[start] != -1) continue;
    std::vector<Frame> stack;
    disc[start] = low[start] = timer++;
    stack.push_back({start, g.neighbors(start).begin(), g.neighbors(start).end()});
    while (!stack.empty()) {
      Frame& fr = stack.back();
      int v = fr.v;
      if (fr.it != fr.end) {
        int w = *fr.it;
        ++fr.it;
        if (disc[w] == -1) {
          parent[w] = v;
          edge_stack.emplace_back(v, w);
          disc[w] = low[w] = timer++;
          stack.push_back({w, g.neighbors(w).begin(), g.neighbors(w).end()});
        } else if (w != parent[v] && disc[w] < disc[v]) {
          edge_stack.emplace_back(v, w);
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          int u = stack.back().v;
          low[u] = std::min(low[u], low[v]);
          if (low[v] >= disc[u]) {
            VertexSet blk;
            while (!edge_stack.empty()) {
              auto [a, b] = edge_stack.back();
              edge_stack.pop_back();
              blk.add(a);
              blk.add(b);
              if (a == u && b == v) break;
            }
            if (!blk.empty()) blocks.push_back(blk);
          }
        }
      }
    }
  }
  return blocks;
}

bool embed_all_blocks(const Graph& g, std::vector<BlockEmbedder>* out) {
  int n = g.vertex_count();
  int e = g.edge_count();
  if (n >= 3 && e > 3 * n - 6) return false;
  for (VertexSet blk : biconnected_blocks(g)) {
    if (blk.count() <= 2) continue;  // bridge edge, trivially planar
    BlockEmbedder be(g, blk);
    if (!be.run()) return false;
    if (out) out->push_back(std::move(be));
  }
  return true;
}

}  // namespace

bool is_planar(const Graph& g) {
  if (g.vertex_count() <= 4) return true;
  return embed_all_blocks(g, nullptr);
}

std::optional<Embedding> planar_embedding(const Graph& g) {
  std::vector<BlockEmbedder> embedders;
  if (!embed_all_blocks(g, &embedders)) return std::nullopt;

  int n = g.vertex_count();
  Embedding emb;
  emb.n = n;
  emb.rotation.assign(n, {});

  // rot(v): successor of u at v is w where some face walks u,v,w
  std::vector<std::array<int, Graph::kMaxVertices>> succ(n);
  for (auto& row : succ) row.fill(-1);
  std::vector<VertexSet> in_block(n);
  for (const BlockEmbedder& be : embedders) {
    for (const Face& f : be.faces()) {
      int len = static_cast<int>(f.cycle.size());
      for (int k = 0; k < len; ++k) {
        int a = f.cycle[k];
        int b = f.cycle[(k + 1) % len];
        int c = f.cycle[(k + 2) % len];
        succ[b][a] = c;
        in_block[b].add(a);
      }
    }
    // chain each vertex's rotation within this block
    for (const Face& f : be.faces()) {
      for (int v : f.cycle) {
        if (in_block[v].empty()) continue;
        int u0 = in_block[v].first();
        int u = u0;
        do {
          emb.rotation[v].push_back(u);
          in_block[v].remove(u);
          u = succ[v][u];
        } while (u != u0);
      }
    }
  }
  // bridge edges were skipped above; append their darts
  for (int v = 0; v < n; ++v) {
    VertexSet present;
    for (int u : emb.rotation[v]) present.add(u);
    for (int u : g.neighbors(v) - present) emb.rotation[v].push_back(u);
  }
  return emb;
}

int face_count(const Graph& g, const Embedding& emb) {
  int n = g.vertex_count();
  std::vector<std::array<int, Graph::kMaxVertices>> next_idx(n);
  std::vector<std::array<int, Graph::kMaxVertices>> pos(n);
  for (int v = 0; v < n; ++v) {
    pos[v].fill(-1);
    for (std::size_t i = 0; i < emb.rotation[v].size(); ++i) pos[v][emb.rotation[v][i]] = static_cast<int>(i);
  }
  std::vector<std::vector<bool>> used(n);
  for (int v = 0; v < n; ++v) used[v].assign(emb.rotation[v].size(), false);

  int orbits = 0;
  for (int u = 0; u < n; ++u) {
    for (std::size_t i = 0; i < emb.rotation[u].size(); ++i) {
      if (used[u][i]) continue;
      ++orbits;
      int a = u;
      int bi = static_cast<int>(i);
      while (!used[a][bi]) {
        used[a][bi] = true;
        int b = emb.rotation[a][bi];
        int k = pos[b][a];
        int next = (k + 1) % static_cast<int>(emb.rotation[b].size());
        a = b;
        bi = next;
      }
    }
  }

  int components = 0;
  int edgeless = 0;
  VertexSet seen;
  for (int v = 0; v < n; ++v) {
    if (seen.contains(v)) continue;
    VertexSet comp = g.component_of(v);
    seen |= comp;
    ++components;
    if (comp.count() == 1 && g.degree(v) == 0) ++edgeless;
  }
  return orbits + edgeless - (components - 1);
}

bool verify_embedding(const Graph& g, const Embedding& emb) {
  int n = g.vertex_count();
  if (emb.n != n || static_cast<int>(emb.rotation.size()) != n) return false;
  for (int v = 0; v < n; ++v) {
    VertexSet listed;
    for (int u : emb.rotation[v]) {
      if (listed.contains(u)) return false;
      listed.add(u);
    }
    if (listed != g.neighbors(v)) return false;
  }
  int components = 0;
  VertexSet seen;
  for (int v = 0; v < n; ++v) {
    if (!seen.contains(v)) {
      seen |= g.component_of(v);
      ++components;
    }
  }
  return n - g.edge_count() + face_count(g, emb) == 1 + components;
}

}  // namespace dstar

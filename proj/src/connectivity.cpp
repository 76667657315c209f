#include "tsm/connectivity.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <random>

namespace tsm {
namespace {

// -- bridges (DFS low-link; parallel edges handled by edge-id parents) ------

struct BridgeDfs {
  const PlaneGraph& g;
  std::map<VertexId, int> disc, low;
  std::set<EdgeId> out;
  int timer = 0;

  explicit BridgeDfs(const PlaneGraph& gg) : g(gg) {}

  void run(VertexId root) {
    struct Frame {
      VertexId v;
      EdgeId in_edge;
      size_t idx = 0;
    };
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& rot = g.rotation(f.v);
      if (f.idx == rot.size()) {
        if (f.in_edge >= 0) {
          VertexId parent = stack[stack.size() - 2].v;
          if (low[f.v] > disc[parent]) out.insert(f.in_edge);
          low[parent] = std::min(low[parent], low[f.v]);
        }
        stack.pop_back();
        continue;
      }
      EdgeId e = rot[f.idx++];
      if (e == f.in_edge) continue;
      VertexId w = g.other_end(e, f.v);
      if (disc.count(w)) {
        low[f.v] = std::min(low[f.v], disc[w]);
      } else {
        disc[w] = low[w] = timer++;
        stack.push_back({w, e, 0});
      }
    }
  }
};

std::set<VertexId> component_of(const PlaneGraph& g, VertexId start,
                                const std::set<EdgeId>& skip) {
  std::set<VertexId> seen{start};
  std::queue<VertexId> q;
  q.push(start);
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (EdgeId e : g.rotation(v)) {
      if (skip.count(e)) continue;
      VertexId w = g.other_end(e, v);
      if (seen.insert(w).second) q.push(w);
    }
  }
  return seen;
}

int edges_within(const PlaneGraph& g, const std::set<VertexId>& side) {
  int n = 0;
  for (EdgeId e : g.edges()) {
    auto [a, b] = g.endpoints(e);
    if (side.count(a) && side.count(b)) ++n;
  }
  return n;
}

bool side_has_cycle(const PlaneGraph& g, const std::set<VertexId>& side) {
  // A connected vertex set contains a cycle iff it spans at least as many
  // edges as vertices.
  return edges_within(g, side) >= static_cast<int>(side.size());
}

// -- 2-cut classes -----------------------------------------------------------
//
// Within a 2-edge-connected piece, {f,g} is a 2-edge-cut exactly when every
// cycle uses both edges or neither, i.e. f and g carry equal cycle-space
// labels (random 128-bit hashes XORed over covering non-tree edges). A class
// of k >= 2 equal-label edges arranges the piece into a ring of k components;
// the cuts of the class are precisely the pairs of ring edges. Sides in G
// additionally carry everything hanging off the piece across bridges.

struct Label {
  std::uint64_t a = 0, b = 0;
  auto operator<=>(const Label&) const = default;
  Label& operator^=(const Label& o) {
    a ^= o.a;
    b ^= o.b;
    return *this;
  }
};

struct RingClass {
  std::vector<EdgeId> ring_edges;  // ring_edges[i] joins comp i-1 and comp i (mod k)
  std::vector<std::set<VertexId>> comps;  // piece vertices only
  std::vector<bool> cyc;   // G-side cyclicity contribution of comp i
  std::vector<long> size;  // G-side vertex weight of comp i
};

struct PieceData {
  std::set<VertexId> vertices;
  std::set<EdgeId> edges;
  std::map<VertexId, long> hang_size;
  std::map<VertexId, bool> hang_cyc;
  std::map<VertexId, VertexId> anchor;  // G-vertex -> piece vertex it hangs from
  std::vector<RingClass> classes;
};

std::vector<PieceData> analyse(const PlaneGraph& g) {
  std::set<EdgeId> br = bridges(g);

  std::set<VertexId> unseen(g.vertices().begin(), g.vertices().end());
  std::vector<PieceData> pieces;
  while (!unseen.empty()) {
    VertexId s = *unseen.begin();
    std::set<VertexId> comp = component_of(g, s, br);
    for (VertexId v : comp) unseen.erase(v);
    PieceData p;
    p.vertices = comp;
    for (EdgeId e : g.edges()) {
      auto [a, b] = g.endpoints(e);
      if (!br.count(e) && comp.count(a) && comp.count(b)) p.edges.insert(e);
    }
    if (!p.edges.empty()) pieces.push_back(std::move(p));
  }

  for (PieceData& p : pieces) {
    for (VertexId v : p.vertices) {
      if (p.anchor.count(v)) continue;
      std::set<VertexId> hang = component_of(g, v, p.edges);
      VertexId pv = -1;
      for (VertexId x : hang)
        if (p.vertices.count(x)) {
          TSM_ASSERT(pv == -1, "hanging part touches two piece vertices");
          pv = x;
        }
      TSM_ASSERT(pv == v, "hanging component anchor mismatch");
      for (VertexId x : hang) p.anchor[x] = v;
      p.hang_size[v] = static_cast<long>(hang.size()) - 1;
      p.hang_cyc[v] = edges_within(g, hang) >= static_cast<int>(hang.size());
    }

    // Spanning tree and cycle-space labels.
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ p.edges.size());
    std::map<VertexId, EdgeId> tree_in;
    std::set<EdgeId> tree;
    {
      VertexId root = *p.vertices.begin();
      std::set<VertexId> seen{root};
      std::queue<VertexId> q;
      q.push(root);
      while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (EdgeId e : g.rotation(v)) {
          if (!p.edges.count(e)) continue;
          VertexId w = g.other_end(e, v);
          if (seen.insert(w).second) {
            tree.insert(e);
            tree_in[w] = e;
            q.push(w);
          }
        }
      }
    }
    std::map<VertexId, Label> acc;
    std::map<EdgeId, Label> label;
    for (EdgeId e : p.edges) {
      if (tree.count(e)) continue;
      Label h{rng(), rng()};
      label[e] = h;
      auto [a, b] = g.endpoints(e);
      acc[a] ^= h;
      acc[b] ^= h;
    }
    {
      std::vector<VertexId> order;
      for (const auto& [v, e] : tree_in) order.push_back(v);
      std::map<VertexId, int> depth;
      std::function<int(VertexId)> dep = [&](VertexId v) -> int {
        auto it = depth.find(v);
        if (it != depth.end()) return it->second;
        if (!tree_in.count(v)) return depth[v] = 0;
        int d = dep(g.other_end(tree_in.at(v), v)) + 1;
        return depth[v] = d;
      };
      std::sort(order.begin(), order.end(), [&](VertexId x, VertexId y) {
        int dx = dep(x), dy = dep(y);
        return dx != dy ? dx > dy : x < y;
      });
      for (VertexId v : order) {
        EdgeId e = tree_in.at(v);
        label[e] = acc[v];
        acc[g.other_end(e, v)] ^= acc[v];
      }
    }

    std::map<Label, std::vector<EdgeId>> buckets;
    for (const auto& [e, h] : label) buckets[h].push_back(e);

    for (auto& [h, es] : buckets) {
      if (es.size() < 2) continue;
      std::sort(es.begin(), es.end());
      std::set<EdgeId> cls(es.begin(), es.end());
      std::map<VertexId, int> comp_of;
      std::vector<std::set<VertexId>> comps;
      for (VertexId v : p.vertices) {
        if (comp_of.count(v)) continue;
        std::set<VertexId> c{v};
        std::queue<VertexId> q;
        q.push(v);
        while (!q.empty()) {
          VertexId x = q.front();
          q.pop();
          for (EdgeId e : g.rotation(x)) {
            if (!p.edges.count(e) || cls.count(e)) continue;
            VertexId w = g.other_end(e, x);
            if (c.insert(w).second) q.push(w);
          }
        }
        int id = static_cast<int>(comps.size());
        for (VertexId x : c) comp_of[x] = id;
        comps.push_back(std::move(c));
      }
      TSM_ASSERT(comps.size() == es.size(), "cut class is not a ring");
      std::map<int, std::vector<std::pair<EdgeId, int>>> adj;
      for (EdgeId e : es) {
        auto [a, b] = g.endpoints(e);
        int ca = comp_of.at(a), cb = comp_of.at(b);
        TSM_ASSERT(ca != cb, "class edge inside one component");
        adj[ca].push_back({e, cb});
        adj[cb].push_back({e, ca});
      }
      for (auto& [c, v] : adj) {
        TSM_ASSERT(v.size() == 2, "ring degree is not two");
        std::sort(v.begin(), v.end());
      }
      RingClass rc;
      int start = 0, cur = 0;
      EdgeId in_edge = -1;
      do {
        auto& options = adj.at(cur);
        auto& nxt = (options[0].first == in_edge) ? options[1] : options[0];
        rc.ring_edges.push_back(nxt.first);
        rc.comps.push_back(comps[nxt.second]);
        in_edge = nxt.first;
        cur = nxt.second;
      } while (cur != start);
      TSM_ASSERT(rc.comps.size() == es.size(), "ring walk incomplete");
      for (const auto& c : rc.comps) {
        bool cy = edges_within(g, c) - 0 >= static_cast<int>(c.size());
        long sz = 0;
        for (VertexId v : c) {
          sz += 1 + p.hang_size.at(v);
          cy = cy || p.hang_cyc.at(v);
        }
        rc.cyc.push_back(cy);
        rc.size.push_back(sz);
      }
      p.classes.push_back(std::move(rc));
    }
    std::sort(p.classes.begin(), p.classes.end(),
              [](const RingClass& a, const RingClass& b) {
                return *std::min_element(a.ring_edges.begin(), a.ring_edges.end()) <
                       *std::min_element(b.ring_edges.begin(), b.ring_edges.end());
              });
  }
  return pieces;
}

}  // namespace

std::set<EdgeId> bridges(const PlaneGraph& g) {
  BridgeDfs dfs(g);
  for (VertexId v : g.vertices())
    if (!dfs.disc.count(v)) dfs.run(v);
  return dfs.out;
}

EdgeCut make_cut(const PlaneGraph& g, EdgeId e1, EdgeId e2) {
  if (e1 == e2) fail(Errc::not_a_cut, "cut edges must be distinct");
  if (!g.has_edge(e1) || !g.has_edge(e2)) fail(Errc::unknown_edge, "cut edge missing");
  std::set<EdgeId> cut{e1, e2};
  auto [a1, b1] = g.endpoints(e1);
  std::set<VertexId> s1 = component_of(g, a1, cut);
  if (s1.count(b1)) fail(Errc::not_a_cut, "edge pair does not disconnect");
  std::set<VertexId> s2 = component_of(g, b1, cut);
  if (s1.size() + s2.size() != static_cast<size_t>(g.vertex_count()))
    fail(Errc::not_a_cut, "edge pair leaves more than two components");
  auto [a2, b2] = g.endpoints(e2);
  if (s1.count(a2) == s1.count(b2))
    fail(Errc::not_a_cut, "edge pair is not inclusionwise minimal");
  EdgeCut c;
  c.edges = cut;
  if (*s1.begin() > *s2.begin() && !s2.empty()) std::swap(s1, s2);
  c.side1 = std::move(s1);
  c.side2 = std::move(s2);
  c.cyclic = side_has_cycle(g, c.side1) && side_has_cycle(g, c.side2);
  return c;
}

std::vector<EdgeCut> two_edge_cuts(const PlaneGraph& g) {
  if (!bridges(g).empty()) fail(Errc::has_bridge, "graph has a bridge");
  std::vector<EdgeCut> out;
  for (const PieceData& p : analyse(g)) {
    for (const RingClass& rc : p.classes) {
      size_t k = rc.ring_edges.size();
      for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j)
          out.push_back(make_cut(g, rc.ring_edges[i], rc.ring_edges[j]));
    }
  }
  std::sort(out.begin(), out.end(), [](const EdgeCut& a, const EdgeCut& b) {
    return std::vector<EdgeId>(a.edges.begin(), a.edges.end()) <
           std::vector<EdgeId>(b.edges.begin(), b.edges.end());
  });
  return out;
}

bool is_cyclic_cut(const PlaneGraph& g, const EdgeCut& c) {
  if (c.edges.size() != 2) fail(Errc::not_a_cut, "expected a 2-edge-cut");
  auto it = c.edges.begin();
  EdgeId e1 = *it++;
  EdgeId e2 = *it;
  return make_cut(g, e1, e2).cyclic;
}

bool is_cyclically_3ec(const PlaneGraph& g) {
  for (EdgeId b : bridges(g)) {
    auto [x, y] = g.endpoints(b);
    std::set<VertexId> s1 = component_of(g, x, {b});
    std::set<VertexId> s2 = component_of(g, y, {b});
    if (side_has_cycle(g, s1) && side_has_cycle(g, s2)) return false;
  }
  for (const PieceData& p : analyse(g))
    for (const RingClass& rc : p.classes)
      if (std::count(rc.cyc.begin(), rc.cyc.end(), true) >= 2) return false;
  return true;
}

bool has_cyclic_2cut(const PlaneGraph& g) {
  for (const PieceData& p : analyse(g))
    for (const RingClass& rc : p.classes)
      if (std::count(rc.cyc.begin(), rc.cyc.end(), true) >= 2) return true;
  return false;
}

std::optional<EdgeCut> any_cyclic_2cut(const PlaneGraph& g) {
  for (const PieceData& p : analyse(g)) {
    for (const RingClass& rc : p.classes) {
      size_t k = rc.ring_edges.size();
      std::vector<size_t> cyc_pos;
      for (size_t i = 0; i < k; ++i)
        if (rc.cyc[i]) cyc_pos.push_back(i);
      if (cyc_pos.size() < 2) continue;
      size_t c1 = cyc_pos[0], c2 = cyc_pos[1];
      EdgeCut cut =
          make_cut(g, rc.ring_edges[(c1 + 1) % k], rc.ring_edges[(c2 + 1) % k]);
      TSM_ASSERT(cut.cyclic, "constructed cut is not cyclic");
      return cut;
    }
  }
  return std::nullopt;
}

EdgeCut min_side_cyclic_2cut(const PlaneGraph& g, VertexId v) {
  if (!g.has_vertex(v)) fail(Errc::unknown_vertex, "vertex " + std::to_string(v));
  std::optional<EdgeCut> best;
  long best_size = 0;
  for (const PieceData& p : analyse(g)) {
    for (const RingClass& rc : p.classes) {
      size_t k = rc.ring_edges.size();
      int total_cyc = static_cast<int>(std::count(rc.cyc.begin(), rc.cyc.end(), true));
      if (total_cyc < 2) continue;
      std::optional<size_t> t;
      if (p.anchor.count(v)) {
        VertexId anchor = p.anchor.at(v);
        for (size_t i = 0; i < k; ++i)
          if (rc.comps[i].count(anchor)) t = i;
      }
      if (!t) continue;
      auto consider = [&](size_t lo, size_t hi) {
        long size = 0;
        for (size_t i = lo;; ++i) {
          size += rc.size[i % k];
          if (i % k == hi % k) break;
        }
        EdgeId f1 = rc.ring_edges[lo % k], f2 = rc.ring_edges[(hi + 1) % k];
        std::vector<EdgeId> pair{std::min(f1, f2), std::max(f1, f2)};
        if (!best || size < best_size ||
            (size == best_size &&
             pair < std::vector<EdgeId>(best->edges.begin(), best->edges.end()))) {
          EdgeCut cut = make_cut(g, f1, f2);
          TSM_ASSERT(cut.cyclic, "selected cut is not cyclic");
          const std::set<VertexId>& vside = cut.side1.count(v) ? cut.side1 : cut.side2;
          TSM_ASSERT(static_cast<long>(vside.size()) == size, "arc size bookkeeping");
          best = cut;
          best_size = size;
        }
      };
      if (rc.cyc[*t]) {
        consider(*t, *t);
      } else {
        for (size_t d = 1; d < k; ++d) {
          size_t pos = (*t + k - d) % k;
          if (rc.cyc[pos]) {
            consider(pos, *t);
            break;
          }
        }
        for (size_t d = 1; d < k; ++d) {
          size_t pos = (*t + d) % k;
          if (rc.cyc[pos]) {
            consider(*t, pos);
            break;
          }
        }
      }
    }
  }
  if (!best) fail(Errc::no_cyclic_cut, "graph has no cyclic 2-edge-cut");
  return *best;
}

SpecialShape recognize_special(const PlaneGraph& g) {
  bool all_two = g.vertex_count() >= 2;
  for (VertexId v : g.vertices())
    if (g.degree(v) != 2) all_two = false;
  if (all_two) return SpecialShape::cycle;

  PlaneGraph h = g;
  for (;;) {
    std::optional<VertexId> pick;
    for (VertexId v : h.vertices()) {
      if (h.degree(v) != 2) continue;
      auto nb = h.neighbours(v);
      if (nb[0] != nb[1]) {
        pick = v;
        break;
      }
    }
    if (!pick) break;
    h = h.suppress_two_vertex(*pick);
  }
  for (VertexId v : h.vertices())
    if (h.degree(v) == 2) return SpecialShape::none;

  if (h.vertex_count() == 2 && h.edge_count() == 3) return SpecialShape::theta_subdivision;
  if (h.vertex_count() == 4 && h.edge_count() == 6) {
    for (VertexId a : h.vertices())
      for (VertexId b : h.vertices())
        if (a < b && !h.adjacent(a, b)) return SpecialShape::none;
    for (EdgeId e : h.edges())
      if (h.has_parallel_edge(e)) return SpecialShape::none;
    return SpecialShape::k4_subdivision;
  }
  return SpecialShape::none;
}

}  // namespace tsm

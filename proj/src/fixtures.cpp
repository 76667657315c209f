#include "tsm/fixtures.hpp"

#include <algorithm>
#include <random>

namespace tsm {
namespace {

using Rot = std::map<VertexId, std::vector<EdgeId>>;
using Ends = std::map<EdgeId, std::pair<VertexId, VertexId>>;

void insert_after(std::vector<EdgeId>& rot, EdgeId after, EdgeId inserted) {
  auto it = std::find(rot.begin(), rot.end(), after);
  rot.insert(it + 1, inserted);
}

}  // namespace

PlaneGraph cycle_graph(int n) {
  if (n < 2) fail(Errc::bad_params, "cycle needs n >= 2");
  Rot rot;
  Ends ends;
  for (int i = 0; i < n; ++i) {
    ends[i] = {std::min(i, (i + 1) % n), std::max(i, (i + 1) % n)};
    rot[i] = {(i + n - 1) % n, i};
  }
  return PlaneGraph::from_parts(std::move(rot), std::move(ends));
}

PlaneGraph theta_subdivision(int l1, int l2, int l3) {
  int len[3] = {l1, l2, l3};
  for (int l : len)
    if (l < 1) fail(Errc::bad_params, "theta path lengths must be >= 1");
  Rot rot;
  Ends ends;
  rot[0] = {};
  rot[1] = {};
  VertexId nv = 2;
  EdgeId ne = 0;
  EdgeId first[3], last[3];
  for (int p = 0; p < 3; ++p) {
    VertexId prev = 0;
    for (int j = 0; j < len[p]; ++j) {
      VertexId next = (j == len[p] - 1) ? 1 : nv++;
      ends[ne] = {std::min(prev, next), std::max(prev, next)};
      if (j == 0) first[p] = ne;
      if (j == len[p] - 1) last[p] = ne;
      if (prev >= 2) rot[prev].push_back(ne);
      if (next >= 2) rot[next] = {ne};
      prev = next;
      ++ne;
    }
  }
  rot[0] = {first[0], first[1], first[2]};
  rot[1] = {last[2], last[1], last[0]};
  return PlaneGraph::from_parts(std::move(rot), std::move(ends));
}

PlaneGraph k4() {
  Rot rot{{0, {1, 2, 0}}, {1, {0, 4, 3}}, {2, {3, 5, 1}}, {3, {4, 2, 5}}};
  Ends ends{{0, {0, 1}}, {1, {0, 2}}, {2, {0, 3}}, {3, {1, 2}}, {4, {1, 3}}, {5, {2, 3}}};
  return PlaneGraph::from_parts(std::move(rot), std::move(ends));
}

PlaneGraph k4_subdivision(const std::vector<int>& lengths) {
  if (lengths.size() != 6) fail(Errc::bad_params, "k4_subdivision needs six lengths");
  for (int l : lengths)
    if (l < 1) fail(Errc::bad_params, "k4_subdivision lengths must be >= 1");
  PlaneGraph g = k4();
  for (EdgeId e = 0; e < 6; ++e)
    for (int j = 1; j < lengths[e]; ++j) g = subdivide_edge(g, e);
  return g;
}

PlaneGraph cube() {
  Rot rot{{0, {3, 8, 0}},  {1, {0, 9, 1}},  {2, {1, 10, 2}}, {3, {11, 3, 2}},
          {4, {8, 7, 4}},  {5, {9, 4, 5}},  {6, {5, 6, 10}}, {7, {7, 11, 6}}};
  Ends ends{{0, {0, 1}}, {1, {1, 2}}, {2, {2, 3}},  {3, {0, 3}},
            {4, {4, 5}}, {5, {5, 6}}, {6, {6, 7}},  {7, {4, 7}},
            {8, {0, 4}}, {9, {1, 5}}, {10, {2, 6}}, {11, {3, 7}}};
  return PlaneGraph::from_parts(std::move(rot), std::move(ends));
}

PlaneGraph cube_sd(const std::vector<int>& subdivided) {
  PlaneGraph g = cube();
  for (int e : subdivided) {
    if (e < 0 || e > 11) fail(Errc::bad_params, "cube has edges 0..11");
    g = subdivide_edge(g, e);
  }
  return g;
}

PlaneGraph cubesd4() { return cube_sd({1, 3, 4, 6}); }

PlaneGraph prism() {
  Rot rot{{0, {2, 6, 0}}, {1, {0, 7, 1}}, {2, {1, 8, 2}},
          {3, {6, 5, 3}}, {4, {7, 3, 4}}, {5, {4, 5, 8}}};
  Ends ends{{0, {0, 1}}, {1, {1, 2}}, {2, {0, 2}}, {3, {3, 4}}, {4, {4, 5}},
            {5, {3, 5}}, {6, {0, 3}}, {7, {1, 4}}, {8, {2, 5}}};
  return PlaneGraph::from_parts(std::move(rot), std::move(ends));
}

PlaneGraph bitriangle() {
  Rot rot{{0, {0, 2, 6}}, {1, {1, 0, 7}}, {2, {1, 2}},
          {3, {5, 3, 6}}, {4, {7, 3, 4}}, {5, {4, 5}}};
  Ends ends{{0, {0, 1}}, {1, {1, 2}}, {2, {0, 2}}, {3, {3, 4}},
            {4, {4, 5}}, {5, {3, 5}}, {6, {0, 3}}, {7, {1, 4}}};
  return PlaneGraph::from_parts(std::move(rot), std::move(ends));
}

PlaneGraph two_cut_chain(int k) {
  if (k < 1) fail(Errc::bad_params, "two_cut_chain needs k >= 1");
  Rot rot;
  Ends ends;
  for (int i = 0; i < k; ++i) {
    VertexId tl = 4 * i, bl = 4 * i + 1, tr = 4 * i + 2, br = 4 * i + 3;
    EdgeId top = 6 * i, left = 6 * i + 1, bottom = 6 * i + 2, right = 6 * i + 3;
    ends[top] = {tl, tr};
    ends[left] = {tl, bl};
    ends[bottom] = {bl, br};
    ends[right] = {tr, br};
    rot[tl] = (i == 0) ? std::vector<EdgeId>{left, top}
                       : std::vector<EdgeId>{left, 6 * (i - 1) + 4, top};
    rot[bl] = (i == 0) ? std::vector<EdgeId>{left, bottom}
                       : std::vector<EdgeId>{6 * (i - 1) + 5, left, bottom};
    rot[tr] = (i == k - 1) ? std::vector<EdgeId>{right, top}
                           : std::vector<EdgeId>{right, top, 6 * i + 4};
    rot[br] = (i == k - 1) ? std::vector<EdgeId>{bottom, right}
                           : std::vector<EdgeId>{bottom, right, 6 * i + 5};
    if (i + 1 < k) {
      ends[6 * i + 4] = {tr, 4 * (i + 1)};      // top rail
      ends[6 * i + 5] = {br, 4 * (i + 1) + 1};  // bottom rail
    }
  }
  return PlaneGraph::from_parts(std::move(rot), std::move(ends));
}

PlaneGraph subdivide_edge(const PlaneGraph& g, EdgeId e) {
  auto [a, b] = g.endpoints(e);
  VertexId w = g.max_vertex_id() + 1;
  EdgeId ne = g.max_edge_id() + 1;
  Rot rot;
  Ends ends;
  for (VertexId v : g.vertices()) rot[v] = g.rotation(v);
  for (EdgeId id : g.edges()) ends[id] = g.endpoints(id);
  ends[e] = {std::min(a, w), std::max(a, w)};
  ends[ne] = {std::min(b, w), std::max(b, w)};
  std::replace(rot[b].begin(), rot[b].end(), e, ne);
  rot[w] = {e, ne};
  return PlaneGraph::from_parts(std::move(rot), std::move(ends), g.outer_face());
}

PlaneGraph random_planar_subcubic(int n, std::uint64_t seed) {
  if (n < 3) fail(Errc::bad_params, "random_planar_subcubic needs n >= 3");
  std::mt19937_64 rng(seed);
  PlaneGraph g = cycle_graph(3);
  while (g.vertex_count() < n) {
    int move = static_cast<int>(rng() % 10);
    if (move < 5) {
      std::vector<EdgeId> es = g.edges();
      g = subdivide_edge(g, es[rng() % es.size()]);
      continue;
    }
    if (move < 8) {
      // Chord between two corners of one face whose vertices have degree <= 2.
      const auto& faces = g.faces();
      int f = static_cast<int>(rng() % faces.size());
      const auto& bd = faces[f].boundary;
      if (bd.size() < 2) continue;
      size_t i = rng() % bd.size(), j = rng() % bd.size();
      size_t len = bd.size();
      VertexId p = bd[(i + 1) % len].tail, q = bd[(j + 1) % len].tail;
      if (p == q || g.degree(p) > 2 || g.degree(q) > 2 || g.adjacent(p, q)) continue;
      EdgeId c = g.max_edge_id() + 1;
      Rot rot;
      Ends ends;
      for (VertexId v : g.vertices()) rot[v] = g.rotation(v);
      for (EdgeId id : g.edges()) ends[id] = g.endpoints(id);
      ends[c] = {std::min(p, q), std::max(p, q)};
      insert_after(rot[p], bd[i].edge, c);
      insert_after(rot[q], bd[j].edge, c);
      g = PlaneGraph::from_parts(std::move(rot), std::move(ends), g.outer_face());
      continue;
    }
    // Pendant triangle inside a face, attached at a degree <= 2 corner vertex.
    if (g.vertex_count() + 3 > n) continue;
    const auto& faces = g.faces();
    int f = static_cast<int>(rng() % faces.size());
    const auto& bd = faces[f].boundary;
    if (bd.empty()) continue;
    size_t i = rng() % bd.size();
    VertexId p = bd[(i + 1) % bd.size()].tail;
    if (g.degree(p) > 2) continue;
    VertexId w = g.max_vertex_id() + 1;
    EdgeId conn = g.max_edge_id() + 1;
    Rot rot;
    Ends ends;
    for (VertexId v : g.vertices()) rot[v] = g.rotation(v);
    for (EdgeId id : g.edges()) ends[id] = g.endpoints(id);
    ends[conn] = {std::min(p, w), std::max(p, w)};
    ends[conn + 1] = {w, w + 1};
    ends[conn + 2] = {w + 1, w + 2};
    ends[conn + 3] = {w, w + 2};
    insert_after(rot[p], bd[i].edge, conn);
    rot[w] = {conn, conn + 1, conn + 3};
    rot[w + 1] = {conn + 1, conn + 2};
    rot[w + 2] = {conn + 2, conn + 3};
    g = PlaneGraph::from_parts(std::move(rot), std::move(ends), g.outer_face());
  }
  return g;
}

namespace {

// Appends `atom` to (rot, ends) with fresh ids; returns the id offsets.
std::pair<VertexId, EdgeId> splice_atom(Rot& rot, Ends& ends, const PlaneGraph& atom) {
  VertexId voff = rot.empty() ? 0 : rot.rbegin()->first + 1;
  EdgeId eoff = ends.empty() ? 0 : ends.rbegin()->first + 1;
  for (VertexId v : atom.vertices()) {
    std::vector<EdgeId> r;
    for (EdgeId e : atom.rotation(v)) r.push_back(e + eoff);
    rot[v + voff] = std::move(r);
  }
  for (EdgeId e : atom.edges()) {
    auto [a, b] = atom.endpoints(e);
    ends[e + eoff] = {a + voff, b + voff};
  }
  return {voff, eoff};
}

PlaneGraph random_atom(std::mt19937_64& rng, int room) {
  // room = how many vertices we may still add.
  std::vector<int> options;
  if (room >= 3) options.push_back(0);   // cycle
  if (room >= 5) options.push_back(1);   // theta subdivision
  if (room >= 10) options.push_back(2);  // K4 subdivision
  int pick = options[rng() % options.size()];
  switch (pick) {
    case 0: {
      int n = 3 + static_cast<int>(rng() % std::min(4, room - 2));
      return cycle_graph(std::min(n, room));
    }
    case 1: {
      int l1 = 1 + static_cast<int>(rng() % 2);
      int l2 = 2, l3 = 2 + static_cast<int>(rng() % 2);
      if (2 + (l1 - 1) + (l2 - 1) + (l3 - 1) > room) return theta_subdivision(2, 2, 1);
      return theta_subdivision(l1, l2, l3);
    }
    default:
      return k4_subdivision({2, 2, 2, 2, 2, 2});
  }
}

std::vector<VertexId> two_vertices(const PlaneGraph& g) {
  std::vector<VertexId> out;
  for (VertexId v : g.vertices())
    if (g.degree(v) == 2) out.push_back(v);
  return out;
}

}  // namespace

PlaneGraph random_sep_subcubic(int n, std::uint64_t seed) {
  if (n < 3) fail(Errc::bad_params, "random_sep_subcubic needs n >= 3");
  std::mt19937_64 rng(seed);
  PlaneGraph g = random_atom(rng, n);
  while (g.vertex_count() < n) {
    int room = n - g.vertex_count();
    bool join = room >= 4 && (rng() % 3) != 0;
    if (!join) {
      std::vector<EdgeId> es = g.edges();
      g = subdivide_edge(g, es[rng() % es.size()]);
      continue;
    }
    PlaneGraph atom = random_atom(rng, room - 1 >= 3 ? room - 1 : 3);
    if (atom.vertex_count() + 1 > room) {
      std::vector<EdgeId> es = g.edges();
      g = subdivide_edge(g, es[rng() % es.size()]);
      continue;
    }
    if (rng() % 2 == 0) {
      // Bridge join at 2-vertices.
      std::vector<VertexId> gv = two_vertices(g);
      if (gv.empty()) {
        std::vector<EdgeId> es = g.edges();
        g = subdivide_edge(g, es[rng() % es.size()]);
        gv = two_vertices(g);
      }
      VertexId p = gv[rng() % gv.size()];
      std::vector<VertexId> av = two_vertices(atom);
      VertexId q_local = av[rng() % av.size()];
      Rot rot;
      Ends ends;
      for (VertexId v : g.vertices()) rot[v] = g.rotation(v);
      for (EdgeId id : g.edges()) ends[id] = g.endpoints(id);
      auto [voff, eoff] = splice_atom(rot, ends, atom);
      VertexId q = q_local + voff;
      EdgeId c = ends.rbegin()->first + 1;
      ends[c] = {std::min(p, q), std::max(p, q)};
      rot[p].push_back(c);
      rot[q].push_back(c);
      g = PlaneGraph::from_parts(std::move(rot), std::move(ends), g.outer_face());
    } else {
      // Crosswise join: remove one edge on each side, reconnect across.
      std::vector<EdgeId> ge = g.edges();
      EdgeId eg = ge[rng() % ge.size()];
      std::vector<EdgeId> ae = atom.edges();
      EdgeId ea_local = ae[rng() % ae.size()];
      auto [p1, p2] = g.endpoints(eg);
      for (int attempt = 0; attempt < 2; ++attempt) {
        Rot rot;
        Ends ends;
        for (VertexId v : g.vertices()) rot[v] = g.rotation(v);
        for (EdgeId id : g.edges()) ends[id] = g.endpoints(id);
        auto [voff, eoff] = splice_atom(rot, ends, atom);
        EdgeId ea = ea_local + eoff;
        auto [q1raw, q2raw] = ends.at(ea);
        VertexId q1 = attempt == 0 ? q1raw : q2raw;
        VertexId q2 = attempt == 0 ? q2raw : q1raw;
        EdgeId c1 = ends.rbegin()->first + 1, c2 = c1 + 1;
        ends.erase(eg);
        ends.erase(ea);
        ends[c1] = {std::min(p1, q1), std::max(p1, q1)};
        ends[c2] = {std::min(p2, q2), std::max(p2, q2)};
        std::replace(rot[p1].begin(), rot[p1].end(), eg, c1);
        std::replace(rot[p2].begin(), rot[p2].end(), eg, c2);
        std::replace(rot[q1].begin(), rot[q1].end(), ea, c1);
        std::replace(rot[q2].begin(), rot[q2].end(), ea, c2);
        try {
          g = PlaneGraph::from_parts(std::move(rot), std::move(ends));
          break;
        } catch (const Error& err) {
          if (err.code() != Errc::euler_violation || attempt == 1) throw;
        }
      }
    }
  }
  return g;
}

}  // namespace tsm

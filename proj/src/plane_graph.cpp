#include "tsm/plane_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tsm {
namespace {

struct UnionFind {
  std::map<VertexId, VertexId> parent;
  void add(VertexId v) { parent.emplace(v, v); }
  VertexId find(VertexId v) {
    VertexId r = v;
    while (parent[r] != r) r = parent[r];
    while (parent[v] != r) v = std::exchange(parent[v], r);
    return r;
  }
  void unite(VertexId a, VertexId b) { parent[find(a)] = find(b); }
};

std::vector<EdgeId> rotate_to_front(const std::vector<EdgeId>& rot, EdgeId e) {
  auto it = std::find(rot.begin(), rot.end(), e);
  std::vector<EdgeId> out;
  out.insert(out.end(), it, rot.end());
  out.insert(out.end(), rot.begin(), it);
  return out;  // out.front() == e
}

}  // namespace

std::vector<VertexId> Face::vertices() const {
  std::vector<VertexId> out;
  out.reserve(boundary.size());
  for (const DirEdge& d : boundary) out.push_back(d.tail);
  if (boundary.empty() && isolated >= 0) out.push_back(isolated);
  return out;
}

std::set<EdgeId> Face::edge_set() const {
  std::set<EdgeId> out;
  for (const DirEdge& d : boundary) out.insert(d.edge);
  return out;
}

bool Face::contains_edge(EdgeId e) const {
  return std::any_of(boundary.begin(), boundary.end(),
                     [&](const DirEdge& d) { return d.edge == e; });
}

bool Face::contains_vertex(VertexId v) const {
  if (boundary.empty()) return isolated == v;
  return std::any_of(boundary.begin(), boundary.end(),
                     [&](const DirEdge& d) { return d.tail == v; });
}

PlaneGraph PlaneGraph::build_from_rotation(
    const std::vector<std::pair<VertexId, std::vector<std::pair<EdgeId, VertexId>>>>& spec) {
  std::map<VertexId, std::vector<EdgeId>> rot;
  std::map<EdgeId, std::vector<std::pair<VertexId, VertexId>>> seen;  // edge -> (at, towards)
  for (const auto& [v, list] : spec) {
    if (rot.count(v)) fail(Errc::non_symmetric, "vertex listed twice: " + std::to_string(v));
    auto& r = rot[v];
    for (const auto& [e, nb] : list) {
      if (nb == v) fail(Errc::loop_present, "loop at vertex " + std::to_string(v));
      r.push_back(e);
      seen[e].push_back({v, nb});
    }
  }
  std::map<EdgeId, std::pair<VertexId, VertexId>> ends;
  for (const auto& [e, occ] : seen) {
    if (occ.size() != 2)
      fail(Errc::non_symmetric, "edge " + std::to_string(e) + " listed " +
                                    std::to_string(occ.size()) + " times");
    const auto& [a, na] = occ[0];
    const auto& [b, nb] = occ[1];
    if (na != b || nb != a)
      fail(Errc::non_symmetric, "edge " + std::to_string(e) + " endpoint mismatch");
    ends[e] = {std::min(a, b), std::max(a, b)};
  }
  PlaneGraph g = from_parts(std::move(rot), std::move(ends));
  if (!g.is_connected()) fail(Errc::disconnected, "rotation spec is disconnected");
  return g;
}

PlaneGraph PlaneGraph::from_parts(std::map<VertexId, std::vector<EdgeId>> rot,
                                  std::map<EdgeId, std::pair<VertexId, VertexId>> ends,
                                  int outer, std::shared_ptr<const LogNode> log) {
  PlaneGraph g;
  g.rot_ = std::move(rot);
  g.ends_ = std::move(ends);
  g.outer_ = outer;
  g.log_ = std::move(log);
  g.finalize();
  if (outer < 0 || outer >= static_cast<int>(g.faces_->size()))
    fail(Errc::unknown_face, "outer face out of range");
  return g;
}

void PlaneGraph::finalize() {
  // Structural checks: endpoints exist, no loops, each edge exactly once in
  // each endpoint's rotation.
  std::map<EdgeId, int> count;
  for (const auto& [v, r] : rot_) {
    for (EdgeId e : r) {
      auto it = ends_.find(e);
      if (it == ends_.end())
        fail(Errc::unknown_edge, "rotation mentions unknown edge " + std::to_string(e));
      const auto& [a, b] = it->second;
      if (a == b) fail(Errc::loop_present, "loop edge " + std::to_string(e));
      if (v != a && v != b)
        fail(Errc::non_symmetric, "edge " + std::to_string(e) + " in rotation of non-endpoint");
      count[e]++;
    }
  }
  for (const auto& [e, ab] : ends_) {
    if (!rot_.count(ab.first) || !rot_.count(ab.second))
      fail(Errc::unknown_vertex, "edge " + std::to_string(e) + " endpoint missing");
    if (count[e] != 2)
      fail(Errc::non_symmetric, "edge " + std::to_string(e) + " appears " +
                                    std::to_string(count[e]) + " times in rotations");
  }

  // Trace facial walks.
  auto faces = std::make_shared<std::vector<Face>>();
  auto dir_face = std::make_shared<std::map<DirEdge, int>>();
  std::set<DirEdge> pending;
  for (const auto& [e, ab] : ends_) {
    pending.insert({e, ab.first});
    pending.insert({e, ab.second});
  }
  while (!pending.empty()) {
    DirEdge start = *pending.begin();
    Face f;
    DirEdge d = start;
    do {
      pending.erase(d);
      (*dir_face)[d] = static_cast<int>(faces->size());
      f.boundary.push_back(d);
      VertexId head = other_end_impl(d);
      const auto& r = rot_.at(head);
      auto it = std::find(r.begin(), r.end(), d.edge);
      EdgeId next = r[(std::distance(r.begin(), it) + 1) % r.size()];
      d = {next, head};
    } while (!(d == start));
    std::set<VertexId> tails;
    std::set<EdgeId> es;
    bool simple = true;
    for (const DirEdge& x : f.boundary) {
      if (!tails.insert(x.tail).second || !es.insert(x.edge).second) simple = false;
    }
    f.is_cycle = simple && f.boundary.size() >= 2;
    faces->push_back(std::move(f));
  }
  for (const auto& [v, r] : rot_) {
    if (r.empty()) {
      Face f;
      f.isolated = v;
      faces->push_back(std::move(f));
    }
  }
  faces_ = faces;
  dir_face_ = dir_face;

  // Euler per connected component (isolated vertices count one face each).
  UnionFind uf;
  for (const auto& [v, r] : rot_) uf.add(v);
  for (const auto& [e, ab] : ends_) uf.unite(ab.first, ab.second);
  std::map<VertexId, int> nv, ne, nf;
  for (const auto& [v, r] : rot_) nv[uf.find(v)]++;
  for (const auto& [e, ab] : ends_) ne[uf.find(ab.first)]++;
  for (const Face& f : *faces_) {
    VertexId anchor = f.boundary.empty() ? f.isolated : f.boundary.front().tail;
    nf[uf.find(anchor)]++;
  }
  for (const auto& [root, v] : nv) {
    int e = ne.count(root) ? ne.at(root) : 0;
    int fc = nf.at(root);
    if (v - e + fc != 2) {
      std::ostringstream os;
      os << "component V=" << v << " E=" << e << " F=" << fc
         << " violates V-E+F=2 (rotation is not a sphere embedding)";
      fail(Errc::euler_violation, os.str());
    }
  }
}

VertexId PlaneGraph::other_end_impl(const DirEdge& d) const {
  const auto& [a, b] = ends_.at(d.edge);
  return d.tail == a ? b : a;
}

std::pair<VertexId, VertexId> PlaneGraph::endpoints(EdgeId e) const {
  auto it = ends_.find(e);
  if (it == ends_.end()) fail(Errc::unknown_edge, "edge " + std::to_string(e));
  return it->second;
}

VertexId PlaneGraph::other_end(EdgeId e, VertexId v) const {
  const auto& [a, b] = endpoints(e);
  if (v == a) return b;
  if (v == b) return a;
  fail(Errc::bad_vertex, "vertex " + std::to_string(v) + " not an endpoint of edge " +
                             std::to_string(e));
}

const std::vector<EdgeId>& PlaneGraph::rotation(VertexId v) const {
  auto it = rot_.find(v);
  if (it == rot_.end()) fail(Errc::unknown_vertex, "vertex " + std::to_string(v));
  return it->second;
}

int PlaneGraph::degree(VertexId v) const { return static_cast<int>(rotation(v).size()); }

std::vector<VertexId> PlaneGraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(rot_.size());
  for (const auto& [v, r] : rot_) out.push_back(v);
  return out;
}

std::vector<EdgeId> PlaneGraph::edges() const {
  std::vector<EdgeId> out;
  out.reserve(ends_.size());
  for (const auto& [e, ab] : ends_) out.push_back(e);
  return out;
}

std::vector<VertexId> PlaneGraph::neighbours(VertexId v) const {
  std::vector<VertexId> out;
  for (EdgeId e : rotation(v)) out.push_back(other_end(e, v));
  return out;
}

bool PlaneGraph::adjacent(VertexId u, VertexId v) const {
  for (EdgeId e : rotation(u))
    if (other_end(e, u) == v) return true;
  return false;
}

std::optional<EdgeId> PlaneGraph::edge_between(VertexId u, VertexId v) const {
  std::optional<EdgeId> best;
  for (EdgeId e : rotation(u))
    if (other_end(e, u) == v && (!best || e < *best)) best = e;
  return best;
}

bool PlaneGraph::has_parallel_edge(EdgeId e) const {
  const auto& [a, b] = endpoints(e);
  for (EdgeId f : rotation(a))
    if (f != e && other_end(f, a) == b) return true;
  return false;
}

bool PlaneGraph::is_connected() const {
  return rot_.empty() || components(*this).size() == 1;
}

VertexId PlaneGraph::max_vertex_id() const {
  return rot_.empty() ? -1 : rot_.rbegin()->first;
}

EdgeId PlaneGraph::max_edge_id() const {
  return ends_.empty() ? -1 : ends_.rbegin()->first;
}

const Face& PlaneGraph::face(int id) const {
  if (id < 0 || id >= static_cast<int>(faces_->size()))
    fail(Errc::unknown_face, "face " + std::to_string(id));
  return (*faces_)[id];
}

int PlaneGraph::face_of(DirEdge d) const {
  auto it = dir_face_->find(d);
  if (it == dir_face_->end()) fail(Errc::unknown_edge, "no such directed edge");
  return it->second;
}

std::pair<int, int> PlaneGraph::faces_of_edge(EdgeId e) const {
  const auto& [a, b] = endpoints(e);
  int f1 = face_of({e, a});
  int f2 = face_of({e, b});
  return {std::min(f1, f2), std::max(f1, f2)};
}

std::vector<EdgeId> PlaneGraph::outer_boundary_edges() const {
  std::set<EdgeId> s = face(outer_).edge_set();
  return {s.begin(), s.end()};
}

bool PlaneGraph::on_outer_boundary(EdgeId e) const { return face(outer_).contains_edge(e); }

bool PlaneGraph::on_outer_boundary_vertex(VertexId v) const {
  return face(outer_).contains_vertex(v);
}

SurgeryLog PlaneGraph::log() const {
  SurgeryLog out;
  for (const LogNode* n = log_.get(); n != nullptr; n = n->parent.get())
    out.push_back(n->record);
  std::reverse(out.begin(), out.end());
  return out;
}

bool PlaneGraph::same_embedding(const PlaneGraph& other) const {
  if (outer_ != other.outer_ || ends_ != other.ends_ || rot_.size() != other.rot_.size())
    return false;
  for (const auto& [v, r] : rot_) {
    auto it = other.rot_.find(v);
    if (it == other.rot_.end() || it->second.size() != r.size()) return false;
    if (r.empty()) continue;
    // cyclic equality
    const auto& s = it->second;
    auto at = std::find(s.begin(), s.end(), r.front());
    if (at == s.end()) return false;
    size_t off = std::distance(s.begin(), at);
    for (size_t i = 0; i < r.size(); ++i)
      if (r[i] != s[(off + i) % s.size()]) return false;
  }
  return true;
}

int PlaneGraph::inherit_outer(const std::vector<DirEdge>& old_outer,
                              const std::map<VertexId, VertexId>& remap) const {
  for (const DirEdge& d : old_outer) {
    if (!ends_.count(d.edge)) continue;
    VertexId tail = d.tail;
    auto it = remap.find(tail);
    if (it != remap.end()) tail = it->second;
    auto f = dir_face_->find({d.edge, tail});
    if (f != dir_face_->end()) return f->second;
  }
  return 0;
}

PlaneGraph PlaneGraph::derived(std::map<VertexId, std::vector<EdgeId>> rot,
                               std::map<EdgeId, std::pair<VertexId, VertexId>> ends,
                               const std::map<VertexId, VertexId>& remap,
                               SurgeryRecord rec) const {
  PlaneGraph g;
  g.rot_ = std::move(rot);
  g.ends_ = std::move(ends);
  g.log_ = std::make_shared<LogNode>(LogNode{std::move(rec), log_});
  g.finalize();
  g.outer_ = g.inherit_outer(face(outer_).boundary, remap);
  return g;
}

PlaneGraph PlaneGraph::set_outer_face(int f) const {
  if (f < 0 || f >= static_cast<int>(faces_->size()))
    fail(Errc::unknown_face, "face " + std::to_string(f));
  PlaneGraph g = *this;
  g.outer_ = f;
  SurgeryRecord rec;
  rec.kind = SurgeryRecord::Kind::set_outer_face;
  rec.face = f;
  g.log_ = std::make_shared<LogNode>(LogNode{std::move(rec), log_});
  return g;
}

PlaneGraph PlaneGraph::contract_edge(EdgeId e, VertexId survivor) const {
  const auto& [a, b] = endpoints(e);
  if (survivor != a && survivor != b)
    fail(Errc::bad_vertex, "survivor must be an endpoint of the contracted edge");
  if (has_parallel_edge(e))
    fail(Errc::parallel_edge_contraction,
         "edge " + std::to_string(e) + " is parallel to another edge");
  VertexId removed = (survivor == a) ? b : a;

  auto rot = rot_;
  std::vector<EdgeId> keep = rotate_to_front(rot.at(survivor), e);
  std::vector<EdgeId> gone = rotate_to_front(rot.at(removed), e);
  std::vector<EdgeId> merged(keep.begin() + 1, keep.end());
  merged.insert(merged.end(), gone.begin() + 1, gone.end());
  rot.erase(removed);
  rot[survivor] = std::move(merged);

  auto ends = ends_;
  ends.erase(e);
  for (auto& [id, ab] : ends) {
    if (ab.first == removed) ab.first = survivor;
    if (ab.second == removed) ab.second = survivor;
    if (ab.first > ab.second) std::swap(ab.first, ab.second);
  }

  SurgeryRecord rec;
  rec.kind = SurgeryRecord::Kind::contract;
  rec.edge = e;
  rec.survivor = survivor;
  rec.removed = removed;
  return derived(std::move(rot), std::move(ends), {{removed, survivor}}, std::move(rec));
}

PlaneGraph PlaneGraph::delete_vertex(VertexId v) const {
  std::set<EdgeId> gone(rotation(v).begin(), rotation(v).end());
  auto rot = rot_;
  rot.erase(v);
  for (auto& [u, r] : rot)
    std::erase_if(r, [&](EdgeId e) { return gone.count(e) != 0; });
  auto ends = ends_;
  for (EdgeId e : gone) ends.erase(e);
  SurgeryRecord rec;
  rec.kind = SurgeryRecord::Kind::delete_vertex;
  rec.removed = v;
  return derived(std::move(rot), std::move(ends), {}, std::move(rec));
}

PlaneGraph PlaneGraph::delete_edges(const std::set<EdgeId>& s) const {
  for (EdgeId e : s)
    if (!ends_.count(e)) fail(Errc::unknown_edge, "edge " + std::to_string(e));
  auto rot = rot_;
  for (auto& [u, r] : rot)
    std::erase_if(r, [&](EdgeId e) { return s.count(e) != 0; });
  auto ends = ends_;
  for (EdgeId e : s) ends.erase(e);
  SurgeryRecord rec;
  rec.kind = SurgeryRecord::Kind::delete_edges;
  rec.edges = s;
  return derived(std::move(rot), std::move(ends), {}, std::move(rec));
}

PlaneGraph PlaneGraph::suppress_two_vertex(VertexId v) const {
  const auto& r = rotation(v);
  if (r.size() != 2) fail(Errc::not_two_vertex, "vertex " + std::to_string(v));
  VertexId n0 = other_end(r[0], v), n1 = other_end(r[1], v);
  if (n0 == n1) fail(Errc::identical_neighbours, "vertex " + std::to_string(v));
  EdgeId e = std::min(r[0], r[1]);
  PlaneGraph g = contract_edge(e, other_end(e, v));
  // Rewrite the log tail as a suppression record.
  SurgeryRecord rec;
  rec.kind = SurgeryRecord::Kind::suppress_two_vertex;
  rec.edge = e;
  rec.survivor = other_end(e, v);
  rec.removed = v;
  g.log_ = std::make_shared<LogNode>(LogNode{std::move(rec), log_});
  return g;
}

std::pair<PlaneGraph, VertexId> PlaneGraph::quotient_component(
    const std::set<EdgeId>& cut, const std::set<VertexId>& k) const {
  if (cut.size() != 2) fail(Errc::not_a_cut, "cut must have exactly two edges");
  for (EdgeId e : cut)
    if (!ends_.count(e)) fail(Errc::unknown_edge, "edge " + std::to_string(e));
  PlaneGraph cutaway = delete_edges(cut);
  std::vector<std::vector<VertexId>> comps = components(cutaway);
  if (comps.size() != 2) fail(Errc::not_a_cut, "edge pair is not a 2-edge-cut");
  std::set<VertexId> c0(comps[0].begin(), comps[0].end());
  std::set<VertexId> c1(comps[1].begin(), comps[1].end());
  if (k != c0 && k != c1) fail(Errc::not_a_component, "side is not a component of G - cut");

  VertexId nu = max_vertex_id() + 1;
  auto rot = rot_;
  auto ends = ends_;
  std::set<EdgeId> inner;
  for (const auto& [e, ab] : ends_)
    if (k.count(ab.first) && k.count(ab.second)) inner.insert(e);
  for (VertexId v : k) rot.erase(v);
  for (EdgeId e : inner) ends.erase(e);
  for (EdgeId e : cut) {
    auto& ab = ends.at(e);
    if (k.count(ab.first)) ab.first = nu;
    if (k.count(ab.second)) ab.second = nu;
    if (ab.first > ab.second) std::swap(ab.first, ab.second);
  }
  std::vector<EdgeId> cut_sorted(cut.begin(), cut.end());
  rot[nu] = cut_sorted;

  SurgeryRecord rec;
  rec.kind = SurgeryRecord::Kind::quotient;
  rec.edges = cut;
  rec.vertices = k;
  rec.survivor = nu;
  std::map<VertexId, VertexId> remap;
  for (VertexId v : k) remap[v] = nu;
  PlaneGraph g = derived(std::move(rot), std::move(ends), remap, std::move(rec));
  TSM_ASSERT(g.is_connected(), "quotient result must be connected");
  return {std::move(g), nu};
}

std::vector<std::vector<VertexId>> components(const PlaneGraph& g) {
  UnionFind uf;
  for (VertexId v : g.vertices()) uf.add(v);
  for (EdgeId e : g.edges()) {
    auto [a, b] = g.endpoints(e);
    uf.unite(a, b);
  }
  std::map<VertexId, std::vector<VertexId>> by_root;
  for (VertexId v : g.vertices()) by_root[uf.find(v)].push_back(v);
  std::vector<std::vector<VertexId>> out;
  for (auto& [r, vs] : by_root) out.push_back(std::move(vs));
  return out;
}

PlaneGraph induced_subgraph(const PlaneGraph& g, const std::set<VertexId>& keep) {
  std::map<VertexId, std::vector<EdgeId>> rot;
  std::map<EdgeId, std::pair<VertexId, VertexId>> ends;
  for (EdgeId e : g.edges()) {
    auto [a, b] = g.endpoints(e);
    if (keep.count(a) && keep.count(b)) ends[e] = {a, b};
  }
  for (VertexId v : keep) {
    if (!g.has_vertex(v)) fail(Errc::unknown_vertex, "vertex " + std::to_string(v));
    std::vector<EdgeId> r;
    for (EdgeId e : g.rotation(v))
      if (ends.count(e)) r.push_back(e);
    rot[v] = std::move(r);
  }
  return PlaneGraph::from_parts(std::move(rot), std::move(ends));
}

PlaneGraph replay(const PlaneGraph& original, const SurgeryLog& log) {
  PlaneGraph g = original;
  for (const SurgeryRecord& r : log) {
    switch (r.kind) {
      case SurgeryRecord::Kind::contract:
        g = g.contract_edge(r.edge, r.survivor);
        break;
      case SurgeryRecord::Kind::delete_vertex:
        g = g.delete_vertex(r.removed);
        break;
      case SurgeryRecord::Kind::delete_edges:
        g = g.delete_edges(r.edges);
        break;
      case SurgeryRecord::Kind::quotient:
        g = g.quotient_component(r.edges, r.vertices).first;
        break;
      case SurgeryRecord::Kind::suppress_two_vertex:
        g = g.suppress_two_vertex(r.removed);
        break;
      case SurgeryRecord::Kind::set_outer_face:
        g = g.set_outer_face(r.face);
        break;
    }
  }
  return g;
}

}  // namespace tsm

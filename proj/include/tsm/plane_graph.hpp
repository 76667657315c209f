#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "tsm/errors.hpp"

namespace tsm {

using VertexId = int;
using EdgeId = int;

/// An edge traversed away from `tail`.
struct DirEdge {
  EdgeId edge;
  VertexId tail;
  friend auto operator<=>(const DirEdge&, const DirEdge&) = default;
};

/// A facial walk traced from the rotation system. A vertex of degree zero
/// carries its own empty-boundary face (`isolated` is then set).
struct Face {
  std::vector<DirEdge> boundary;
  VertexId isolated = -1;
  bool is_cycle = false;

  std::vector<VertexId> vertices() const;      // tails in walk order
  std::set<EdgeId> edge_set() const;
  bool contains_edge(EdgeId e) const;
  bool contains_vertex(VertexId v) const;
};

struct SurgeryRecord {
  enum class Kind {
    contract,
    delete_vertex,
    delete_edges,
    quotient,
    suppress_two_vertex,
    set_outer_face,
  };
  Kind kind;
  EdgeId edge = -1;              // contract / suppress
  VertexId survivor = -1;        // contract / suppress / quotient (new vertex)
  VertexId removed = -1;         // contract / suppress / delete_vertex
  std::set<EdgeId> edges;        // delete_edges; cut pair for quotient
  std::set<VertexId> vertices;   // quotient: replaced side
  int face = -1;                 // set_outer_face
};

using SurgeryLog = std::vector<SurgeryRecord>;

/// Immutable plane multigraph with a combinatorial embedding.
///
/// Rotation lists hold, for every vertex, the incident edge ids in clockwise
/// order with respect to one fixed drawing orientation. Faces are traced with
/// the rule "arriving at v along e, continue along the clockwise successor of
/// e at v"; under that rule the outer face of a drawing is walked clockwise
/// and inner faces counterclockwise. Edge ids survive every surgery
/// unchanged, so edge sets computed on derived graphs transport back to the
/// original by identity.
class PlaneGraph {
 public:
  PlaneGraph() = default;

  /// One entry per vertex: (vertex, clockwise list of (edge id, neighbour)).
  /// Requires a symmetric, connected, loop-free description of a sphere
  /// embedding.
  static PlaneGraph build_from_rotation(
      const std::vector<std::pair<VertexId, std::vector<std::pair<EdgeId, VertexId>>>>& spec);

  /// Internal/raw constructor: rotations keyed by vertex, endpoints keyed by
  /// edge. Validates everything except connectivity.
  static PlaneGraph from_parts(std::map<VertexId, std::vector<EdgeId>> rot,
                               std::map<EdgeId, std::pair<VertexId, VertexId>> ends,
                               int outer = 0,
                               std::shared_ptr<const struct LogNode> log = nullptr);

  // -- queries ------------------------------------------------------------
  int vertex_count() const { return static_cast<int>(rot_.size()); }
  int edge_count() const { return static_cast<int>(ends_.size()); }
  bool has_vertex(VertexId v) const { return rot_.count(v) != 0; }
  bool has_edge(EdgeId e) const { return ends_.count(e) != 0; }
  std::pair<VertexId, VertexId> endpoints(EdgeId e) const;
  VertexId other_end(EdgeId e, VertexId v) const;
  const std::vector<EdgeId>& rotation(VertexId v) const;
  int degree(VertexId v) const;
  std::vector<VertexId> vertices() const;  // ascending
  std::vector<EdgeId> edges() const;       // ascending
  std::vector<EdgeId> incident_edges(VertexId v) const { return rotation(v); }
  std::vector<VertexId> neighbours(VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const;
  std::optional<EdgeId> edge_between(VertexId u, VertexId v) const;  // smallest id
  bool has_parallel_edge(EdgeId e) const;
  bool is_connected() const;
  VertexId max_vertex_id() const;
  EdgeId max_edge_id() const;

  const std::vector<Face>& faces() const { return *faces_; }
  int outer_face() const { return outer_; }
  const Face& face(int id) const;
  int face_of(DirEdge d) const;                       // each dir-edge lies in one face
  std::pair<int, int> faces_of_edge(EdgeId e) const;  // both sides (equal for a bridge)
  std::vector<EdgeId> outer_boundary_edges() const;   // sorted, deduplicated
  bool on_outer_boundary(EdgeId e) const;
  bool on_outer_boundary_vertex(VertexId v) const;

  const std::shared_ptr<const struct LogNode>& log_head() const { return log_; }
  SurgeryLog log() const;  // oldest first

  bool same_embedding(const PlaneGraph& other) const;  // rotations+ends+outer

  // -- surgeries (all return new values) -----------------------------------
  PlaneGraph set_outer_face(int f) const;
  PlaneGraph contract_edge(EdgeId e, VertexId survivor) const;
  PlaneGraph delete_vertex(VertexId v) const;
  PlaneGraph delete_edges(const std::set<EdgeId>& s) const;
  PlaneGraph suppress_two_vertex(VertexId v) const;
  /// Replace side `k` of the 2-edge-cut `cut` by a fresh degree-2 vertex.
  std::pair<PlaneGraph, VertexId> quotient_component(const std::set<EdgeId>& cut,
                                                     const std::set<VertexId>& k) const;

 private:
  std::map<VertexId, std::vector<EdgeId>> rot_;
  std::map<EdgeId, std::pair<VertexId, VertexId>> ends_;
  int outer_ = 0;
  std::shared_ptr<const std::vector<Face>> faces_;
  std::shared_ptr<const std::map<DirEdge, int>> dir_face_;
  std::shared_ptr<const struct LogNode> log_;

  void finalize();  // trace faces, check invariants (Euler per component)
  VertexId other_end_impl(const DirEdge& d) const;
  int inherit_outer(const std::vector<DirEdge>& old_outer,
                    const std::map<VertexId, VertexId>& remap) const;
  PlaneGraph derived(std::map<VertexId, std::vector<EdgeId>> rot,
                     std::map<EdgeId, std::pair<VertexId, VertexId>> ends,
                     const std::map<VertexId, VertexId>& remap,
                     SurgeryRecord rec) const;
};

/// Append-only shared log spine.
struct LogNode {
  SurgeryRecord record;
  std::shared_ptr<const LogNode> parent;
};

std::vector<std::vector<VertexId>> components(const PlaneGraph& g);

/// Subgraph on `keep`, retaining edges with both endpoints inside. Rotation
/// order is inherited. Not recorded in the surgery log.
PlaneGraph induced_subgraph(const PlaneGraph& g, const std::set<VertexId>& keep);

/// Re-apply `log` to `original` (used to reproduce derived graphs).
PlaneGraph replay(const PlaneGraph& original, const SurgeryLog& log);

}  // namespace tsm

#pragma once

#include <optional>

#include "tsm/plane_graph.hpp"

namespace tsm {

/// A 2-edge-cut: inclusionwise minimal, so removal leaves exactly two
/// components. `cyclic` means both sides contain a cycle.
struct EdgeCut {
  std::set<EdgeId> edges;
  std::set<VertexId> side1;  // contains the smallest vertex id of the graph
  std::set<VertexId> side2;
  bool cyclic = false;
};

enum class SpecialShape { cycle, theta_subdivision, k4_subdivision, none };

std::set<EdgeId> bridges(const PlaneGraph& g);

/// Validates that {e1,e2} is a 2-edge-cut and computes its sides and cyclic
/// flag. Throws NotACut otherwise.
EdgeCut make_cut(const PlaneGraph& g, EdgeId e1, EdgeId e2);

/// All 2-edge-cuts of a connected bridgeless graph, sorted by edge ids.
/// Throws HasBridge when a bridge is present.
std::vector<EdgeCut> two_edge_cuts(const PlaneGraph& g);

bool is_cyclic_cut(const PlaneGraph& g, const EdgeCut& c);

/// No cyclic edge-cut of size one or two. Cycles, trees and theta/K4
/// subdivisions all qualify.
bool is_cyclically_3ec(const PlaneGraph& g);

bool has_cyclic_2cut(const PlaneGraph& g);
std::optional<EdgeCut> any_cyclic_2cut(const PlaneGraph& g);

/// Among all cyclic 2-edge-cuts, one whose side containing v has minimum
/// vertex count (ties broken by edge ids). Throws NoCyclicCut.
EdgeCut min_side_cyclic_2cut(const PlaneGraph& g, VertexId v);

/// Suppresses 2-vertices and compares the result against the theta graph and
/// K4 by structure; cycles are detected before suppression.
SpecialShape recognize_special(const PlaneGraph& g);

}  // namespace tsm

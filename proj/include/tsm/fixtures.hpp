#pragma once

#include <cstdint>
#include <vector>

#include "tsm/plane_graph.hpp"

namespace tsm {

// Plane fixtures with fixed vertex/edge numbering (documented per generator).

/// Vertices 0..n-1, edge i joins i and (i+1) mod n. n >= 2 (n == 2 gives the
/// 2-cycle with a parallel pair).
PlaneGraph cycle_graph(int n);

/// Two hubs 0 and 1 joined by three paths with l1, l2, l3 edges (each >= 1).
/// theta_subdivision(1,1,1) is the theta graph itself; (1,1,2) is the gadget
/// with a single 2-vertex.
PlaneGraph theta_subdivision(int l1, int l2, int l3);

/// K4 on vertices 0..3, edges 0:(01) 1:(02) 2:(03) 3:(12) 4:(13) 5:(23).
PlaneGraph k4();

/// K4 with edge i replaced by a path of lengths[i] edges (each >= 1).
PlaneGraph k4_subdivision(const std::vector<int>& lengths);

/// Cube: top ring 0-3 (edges 0..3), bottom ring 4-7 (edges 4..7),
/// verticals i-(i+4) (edges 8..11).
PlaneGraph cube();

/// Cube with the listed edge ids (0..11) subdivided once each.
PlaneGraph cube_sd(const std::vector<int>& subdivided);

/// The standard 4-subdivision fixture: cube_sd({1, 3, 4, 6}) — one subdivided
/// edge on every face.
PlaneGraph cubesd4();

/// Triangular prism: top triangle 0-2, bottom 3-5.
PlaneGraph prism();

/// Two triangles a1 a2 a3 = 0 1 2 and b1 b2 b3 = 3 4 5, joined by a1-b1
/// (edge 6) and a2-b2 (edge 7).
PlaneGraph bitriangle();

/// Chain of k quadrilateral blocks, consecutive blocks joined by two rails;
/// every junction is a cyclic 2-edge-cut. 4k vertices, 6k-2 edges.
PlaneGraph two_cut_chain(int k);

/// Replace edge e by a two-edge path through a fresh vertex. The id e is kept
/// for one half; the other half gets a fresh id. Fixture helper, not a logged
/// surgery.
PlaneGraph subdivide_edge(const PlaneGraph& g, EdgeId e);

/// Random connected plane multigraph with max degree 3, grown from a triangle
/// by edge subdivision, chord insertion and pendant-cycle insertion.
PlaneGraph random_planar_subcubic(int n, std::uint64_t seed);

/// Random connected plane graph with all degrees in {2,3} and every cycle
/// separating: composed from cycle/theta/K4-subdivision atoms by bridge and
/// crosswise two-cut joins, padded by subdivisions to exactly n vertices.
PlaneGraph random_sep_subcubic(int n, std::uint64_t seed);

}  // namespace tsm

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "tsm/fixtures.hpp"
#include "tsm/plane_graph.hpp"

using namespace tsm;

namespace {

using RotSpec = std::vector<std::pair<VertexId, std::vector<std::pair<EdgeId, VertexId>>>>;

RotSpec c4_spec() {
  return {
      {0, {{3, 3}, {0, 1}}},
      {1, {{0, 0}, {1, 2}}},
      {2, {{1, 1}, {2, 3}}},
      {3, {{2, 2}, {3, 0}}},
  };
}

int count_two_vertices(const PlaneGraph& g, const Face& f) {
  int n = 0;
  for (VertexId v : f.vertices())
    if (g.degree(v) == 2) ++n;
  return n;
}

}  // namespace

TEST_CASE("build_from_rotation on C4") {
  PlaneGraph g = PlaneGraph::build_from_rotation(c4_spec());
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 4);
  CHECK(g.faces().size() == 2);
  for (const Face& f : g.faces()) {
    CHECK(f.boundary.size() == 4);
    CHECK(f.is_cycle);
  }
}

TEST_CASE("build_from_rotation rejects bad input") {
  RotSpec broken = c4_spec();
  broken[1].second[0].second = 3;  // edge 0 now claims endpoints {0->1, 1->3}
  CHECK_THROWS_AS(PlaneGraph::build_from_rotation(broken), Error);

  RotSpec loop{{0, {{0, 0}}}};
  CHECK_THROWS_AS(PlaneGraph::build_from_rotation(loop), Error);
}

TEST_CASE("K4 rotation traces four faces; a twisted rotation violates Euler") {
  PlaneGraph g = k4();
  CHECK(g.faces().size() == 4);

  // Swapping one vertex's rotation order gives a genus-1 rotation system.
  RotSpec spec;
  for (VertexId v : g.vertices()) {
    std::vector<std::pair<EdgeId, VertexId>> row;
    for (EdgeId e : g.rotation(v)) row.push_back({e, g.other_end(e, v)});
    if (v == 0) std::swap(row[0], row[1]);
    spec.push_back({v, row});
  }
  CHECK_THROWS_AS(PlaneGraph::build_from_rotation(spec), Error);
}

TEST_CASE("fixture face counts satisfy Euler") {
  CHECK(theta_subdivision(1, 1, 1).faces().size() == 3);
  CHECK(cycle_graph(2).faces().size() == 2);
  CHECK(cube().faces().size() == 6);
  CHECK(prism().faces().size() == 5);
  CHECK(bitriangle().faces().size() == 4);
  CHECK(k4_subdivision({2, 2, 2, 2, 2, 2}).faces().size() == 4);
  CHECK(cubesd4().faces().size() == 6);
  CHECK(two_cut_chain(5).faces().size() == 10);
}

TEST_CASE("bitriangle has exactly one face with no 2-vertex") {
  PlaneGraph g = bitriangle();
  int without = 0;
  for (const Face& f : g.faces())
    if (count_two_vertices(g, f) == 0) ++without;
  CHECK(without == 1);
}

TEST_CASE("set_outer_face") {
  PlaneGraph g = cycle_graph(4);
  PlaneGraph h = g.set_outer_face(1);
  CHECK(h.outer_face() == 1);
  CHECK(h.outer_boundary_edges() == std::vector<EdgeId>{0, 1, 2, 3});
  CHECK(h.faces().size() == g.faces().size());
  CHECK_THROWS_AS(g.set_outer_face(7), Error);

  PlaneGraph k = k4_subdivision({2, 2, 2, 2, 2, 2});
  for (int f = 0; f < static_cast<int>(k.faces().size()); ++f) {
    PlaneGraph r = k.set_outer_face(f);
    for (EdgeId e : r.face(f).edge_set()) CHECK(r.on_outer_boundary(e));
  }
}

TEST_CASE("contract_edge") {
  PlaneGraph c4 = cycle_graph(4);
  PlaneGraph c3 = c4.contract_edge(0, 0);
  CHECK(c3.vertex_count() == 3);
  CHECK(c3.edge_count() == 3);
  CHECK(c3.faces().size() == 2);
  CHECK_FALSE(c3.has_vertex(1));

  PlaneGraph theta = theta_subdivision(1, 1, 1);
  CHECK_THROWS_AS(theta.contract_edge(0, 0), Error);

  PlaneGraph k = k4_subdivision({2, 2, 2, 2, 2, 2});
  // Every original K4 edge id 0..5 is now a (2,3)-edge into its subdivision
  // vertex.
  auto [a, b] = k.endpoints(0);
  VertexId two = k.degree(a) == 2 ? a : b;
  CHECK(k.degree(two) == 2);
  PlaneGraph kc = k.contract_edge(0, two);
  CHECK(kc.degree(two) == 3);
  CHECK(kc.vertex_count() == k.vertex_count() - 1);
  CHECK(kc.faces().size() == k.faces().size());
}

TEST_CASE("delete operations") {
  PlaneGraph c4 = cycle_graph(4);
  PlaneGraph p4 = c4.delete_edges({0});
  CHECK(p4.edge_count() == 3);
  CHECK(p4.is_connected());

  PlaneGraph star = k4().delete_edges({3, 4, 5});  // drop triangle on 1,2,3
  CHECK(star.is_connected());
  CHECK(star.degree(0) == 3);

  PlaneGraph k = k4_subdivision({2, 2, 2, 2, 2, 2});
  VertexId sd = 4;  // first subdivision vertex
  CHECK(k.degree(sd) == 2);
  PlaneGraph kd = k.delete_vertex(sd);
  CHECK(kd.is_connected());
  CHECK(kd.vertex_count() == 9);
  CHECK_THROWS_AS(k.delete_vertex(99), Error);
}

TEST_CASE("suppress_two_vertex") {
  PlaneGraph x = theta_subdivision(1, 1, 2);
  std::vector<VertexId> twos;
  for (VertexId v : x.vertices())
    if (x.degree(v) == 2) twos.push_back(v);
  REQUIRE(twos.size() == 1);
  PlaneGraph t = x.suppress_two_vertex(twos[0]);
  CHECK(t.vertex_count() == 2);
  CHECK(t.edge_count() == 3);
  CHECK(t.faces().size() == 3);

  PlaneGraph c3 = cycle_graph(4).suppress_two_vertex(2);
  CHECK(c3.vertex_count() == 3);

  CHECK_THROWS_AS(cycle_graph(2).suppress_two_vertex(0), Error);
}

TEST_CASE("quotient_component on the bitriangle") {
  PlaneGraph g = bitriangle();
  auto [q, u] = g.quotient_component({6, 7}, {3, 4, 5});
  CHECK(q.vertex_count() == 4);
  CHECK(q.edge_count() == 5);
  CHECK(q.degree(0) == 3);
  CHECK(q.degree(1) == 3);
  CHECK(q.degree(2) == 2);
  CHECK(q.degree(u) == 2);
  CHECK(q.is_connected());
  // Degrees outside the quotiented side are untouched.
  for (VertexId v : {0, 1, 2}) CHECK(q.degree(v) == g.degree(v));

  CHECK_THROWS_AS(g.quotient_component({0, 3}, {3, 4, 5}), Error);
}

TEST_CASE("quotient_component on C4 opposite edges") {
  PlaneGraph g = cycle_graph(4);
  auto [q, u] = g.quotient_component({0, 2}, {1, 2});
  CHECK(q.vertex_count() == 3);
  CHECK(q.edge_count() == 3);
  CHECK(q.is_connected());
  CHECK(q.degree(u) == 2);
}

TEST_CASE("surgery log replays to the same embedding") {
  PlaneGraph g = cubesd4();
  PlaneGraph h = g.set_outer_face(2)
                     .delete_vertex(8)
                     .delete_edges({0})
                     .contract_edge(4, 4);
  PlaneGraph r = replay(cubesd4(), h.log());
  CHECK(r.same_embedding(h));
}

TEST_CASE("random_planar_subcubic produces valid subcubic plane graphs") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    PlaneGraph g = random_planar_subcubic(18, seed);
    CHECK(g.vertex_count() == 18);
    CHECK(g.is_connected());
    for (VertexId v : g.vertices()) CHECK(g.degree(v) <= 3);
  }
}

TEST_CASE("random_sep_subcubic produces degree-2/3 plane graphs") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    PlaneGraph g = random_sep_subcubic(24, seed);
    CHECK(g.vertex_count() == 24);
    CHECK(g.is_connected());
    for (VertexId v : g.vertices()) {
      CHECK(g.degree(v) >= 2);
      CHECK(g.degree(v) <= 3);
    }
  }
}

TEST_CASE("edge ids are stable across surgeries") {
  PlaneGraph g = two_cut_chain(3);
  std::mt19937_64 rng(7);
  PlaneGraph h = g;
  for (int step = 0; step < 4; ++step) {
    std::vector<EdgeId> es = h.edges();
    EdgeId e = es[rng() % es.size()];
    auto [a, b] = h.endpoints(e);
    if (h.has_parallel_edge(e)) continue;
    PlaneGraph next = h.contract_edge(e, a);
    for (EdgeId id : next.edges()) CHECK(g.has_edge(id));
    h = next;
    if (h.vertex_count() < 4) break;
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "tsm/connectivity.hpp"
#include "tsm/fixtures.hpp"

using namespace tsm;

namespace {

// Reference enumeration: try every edge pair directly.
std::vector<std::pair<std::set<EdgeId>, bool>> naive_two_cuts(const PlaneGraph& g) {
  std::vector<std::pair<std::set<EdgeId>, bool>> out;
  std::vector<EdgeId> es = g.edges();
  for (size_t i = 0; i < es.size(); ++i)
    for (size_t j = i + 1; j < es.size(); ++j) {
      try {
        EdgeCut c = make_cut(g, es[i], es[j]);
        out.push_back({c.edges, c.cyclic});
      } catch (const Error&) {
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_path_side(const PlaneGraph& g, const std::set<VertexId>& side) {
  int within = 0;
  for (EdgeId e : g.edges()) {
    auto [a, b] = g.endpoints(e);
    if (side.count(a) && side.count(b)) ++within;
  }
  if (within != static_cast<int>(side.size()) - 1) return false;
  for (VertexId v : side) {
    int deg = 0;
    for (EdgeId e : g.rotation(v))
      if (side.count(g.other_end(e, v))) ++deg;
    if (deg > 2) return false;
  }
  return true;
}

PlaneGraph two_triangles_one_bridge() {
  // Triangles 0-1-2 and 3-4-5 joined by edge 0-3.
  return PlaneGraph::build_from_rotation({
      {0, {{0, 1}, {2, 2}, {6, 3}}},
      {1, {{1, 2}, {0, 0}}},
      {2, {{2, 0}, {1, 1}}},
      {3, {{3, 4}, {5, 5}, {6, 0}}},
      {4, {{4, 5}, {3, 3}}},
      {5, {{5, 3}, {4, 4}}},
  });
}

}  // namespace

TEST_CASE("bridges") {
  CHECK(bridges(cycle_graph(4)).empty());
  CHECK(bridges(two_triangles_one_bridge()) == std::set<EdgeId>{6});

  // Cube minus the top face: the verticals become bridges.
  PlaneGraph g = cube().delete_edges({0, 1, 2, 3});
  std::set<EdgeId> expect{8, 9, 10, 11};
  CHECK(bridges(g) == expect);
  // Cross-check by per-edge removal.
  for (EdgeId e : g.edges()) {
    bool disconnects = components(g.delete_edges({e})).size() > 1;
    CHECK(disconnects == (expect.count(e) != 0));
  }
}

TEST_CASE("two_edge_cuts on the bitriangle") {
  std::vector<EdgeCut> cuts = two_edge_cuts(bitriangle());
  bool found = false;
  for (const EdgeCut& c : cuts)
    if (c.edges == std::set<EdgeId>{6, 7}) {
      found = true;
      CHECK(c.cyclic);
      CHECK(c.side1 == std::set<VertexId>{0, 1, 2});
    }
  CHECK(found);
}

TEST_CASE("two_edge_cuts on C4: every pair is a cut, none cyclic") {
  std::vector<EdgeCut> cuts = two_edge_cuts(cycle_graph(4));
  CHECK(cuts.size() == 6);
  for (const EdgeCut& c : cuts) CHECK_FALSE(c.cyclic);
}

TEST_CASE("two_edge_cuts rejects bridges; K4SD6 has no cyclic cut") {
  CHECK_THROWS_AS(two_edge_cuts(two_triangles_one_bridge()), Error);
  for (const EdgeCut& c : two_edge_cuts(k4_subdivision({2, 2, 2, 2, 2, 2})))
    CHECK_FALSE(c.cyclic);
}

TEST_CASE("class enumeration agrees with naive pair checking") {
  std::vector<PlaneGraph> graphs{
      bitriangle(),
      cycle_graph(6),
      k4_subdivision({2, 2, 2, 2, 2, 2}),
      cubesd4(),
      theta_subdivision(2, 3, 2),
      theta_subdivision(1, 2, 2),
      two_cut_chain(4),
      prism(),
  };
  for (std::uint64_t seed = 1; seed <= 8; ++seed)
    graphs.push_back(random_sep_subcubic(16, seed));
  for (const PlaneGraph& g : graphs) {
    if (!bridges(g).empty()) continue;
    std::vector<std::pair<std::set<EdgeId>, bool>> expect = naive_two_cuts(g);
    std::vector<std::pair<std::set<EdgeId>, bool>> got;
    for (const EdgeCut& c : two_edge_cuts(g)) got.push_back({c.edges, c.cyclic});
    std::sort(got.begin(), got.end());
    CHECK(got == expect);
  }
}

TEST_CASE("is_cyclic_cut") {
  PlaneGraph bi = bitriangle();
  CHECK(is_cyclic_cut(bi, make_cut(bi, 6, 7)));

  PlaneGraph c6 = cycle_graph(6);
  CHECK_FALSE(is_cyclic_cut(c6, make_cut(c6, 0, 3)));

  PlaneGraph k = k4_subdivision({2, 2, 2, 2, 2, 2});
  // Cut isolating one subdivision vertex: its two path edges.
  VertexId sd = 4;
  const auto& r = k.rotation(sd);
  CHECK_FALSE(is_cyclic_cut(k, make_cut(k, r[0], r[1])));

  CHECK_THROWS_AS(make_cut(bi, 0, 3), Error);
}

TEST_CASE("Lemma-1-style shortcut holds for all cuts of 2EC fixtures") {
  std::vector<PlaneGraph> graphs{bitriangle(), cubesd4(), two_cut_chain(3),
                                 theta_subdivision(2, 2, 2), cycle_graph(8)};
  for (const PlaneGraph& g : graphs) {
    for (const EdgeCut& c : two_edge_cuts(g)) {
      if (!is_path_side(g, c.side1) && !is_path_side(g, c.side2)) CHECK(c.cyclic);
    }
  }
}

TEST_CASE("is_cyclically_3ec") {
  CHECK(is_cyclically_3ec(k4_subdivision({2, 2, 2, 2, 2, 2})));
  CHECK_FALSE(is_cyclically_3ec(bitriangle()));
  CHECK(is_cyclically_3ec(cubesd4()));
  CHECK(is_cyclically_3ec(cycle_graph(5)));
  CHECK(is_cyclically_3ec(theta_subdivision(1, 1, 1)));
  CHECK(is_cyclically_3ec(k4()));
  CHECK_FALSE(is_cyclically_3ec(two_triangles_one_bridge()));  // cyclic bridge cut
  CHECK_FALSE(is_cyclically_3ec(two_cut_chain(2)));
}

TEST_CASE("bridgeless and parallel-free consequences for cyclically 3ec members") {
  std::vector<PlaneGraph> graphs{k4(), cube(), prism(), cubesd4(),
                                 k4_subdivision({1, 2, 1, 2, 1, 2}),
                                 theta_subdivision(2, 2, 2), cycle_graph(2)};
  for (const PlaneGraph& g : graphs) {
    bool in_class = true;
    for (VertexId v : g.vertices())
      in_class = in_class && (g.degree(v) == 2 || g.degree(v) == 3);
    if (!in_class || !is_cyclically_3ec(g)) continue;
    CHECK(bridges(g).empty());
    bool has_parallel = false;
    for (EdgeId e : g.edges()) has_parallel = has_parallel || g.has_parallel_edge(e);
    if (has_parallel) {
      bool two_cycle = g.vertex_count() == 2 && g.edge_count() == 2;
      CHECK((two_cycle || recognize_special(g) == SpecialShape::theta_subdivision ||
             recognize_special(g) == SpecialShape::cycle));
    }
  }
}

TEST_CASE("min_side_cyclic_2cut") {
  PlaneGraph bi = bitriangle();
  EdgeCut c = min_side_cyclic_2cut(bi, 2);
  CHECK(c.edges == std::set<EdgeId>{6, 7});
  const std::set<VertexId>& vside = c.side1.count(2) ? c.side1 : c.side2;
  CHECK(vside == std::set<VertexId>{0, 1, 2});

  // Chain of three blocks: the cut nearest the end block.
  PlaneGraph ch = two_cut_chain(3);
  EdgeCut c2 = min_side_cyclic_2cut(ch, 0);
  CHECK(c2.edges == std::set<EdgeId>{4, 5});  // first junction rails
  const std::set<VertexId>& vs = c2.side1.count(0) ? c2.side1 : c2.side2;
  CHECK(vs.size() == 4);

  CHECK_THROWS_AS(min_side_cyclic_2cut(k4_subdivision({2, 2, 2, 2, 2, 2}), 0), Error);
}

TEST_CASE("min_side_cyclic_2cut agrees with exhaustive search") {
  std::vector<PlaneGraph> graphs{bitriangle(), two_cut_chain(4)};
  for (std::uint64_t seed = 11; seed <= 16; ++seed)
    graphs.push_back(random_sep_subcubic(18, seed));
  for (const PlaneGraph& g : graphs) {
    if (!bridges(g).empty()) continue;
    std::vector<EdgeCut> all = two_edge_cuts(g);
    for (VertexId v : g.vertices()) {
      long best = -1;
      for (const EdgeCut& c : all) {
        if (!c.cyclic) continue;
        long sz = static_cast<long>((c.side1.count(v) ? c.side1 : c.side2).size());
        if (best < 0 || sz < best) best = sz;
      }
      if (best < 0) {
        CHECK_THROWS_AS(min_side_cyclic_2cut(g, v), Error);
      } else {
        EdgeCut got = min_side_cyclic_2cut(g, v);
        long sz = static_cast<long>((got.side1.count(v) ? got.side1 : got.side2).size());
        CHECK(sz == best);
      }
    }
  }
}

TEST_CASE("any_cyclic_2cut and has_cyclic_2cut") {
  CHECK(has_cyclic_2cut(bitriangle()));
  CHECK_FALSE(has_cyclic_2cut(cubesd4()));
  auto c = any_cyclic_2cut(two_cut_chain(3));
  REQUIRE(c.has_value());
  CHECK(c->cyclic);
  CHECK_FALSE(any_cyclic_2cut(k4()).has_value());
}

TEST_CASE("recognize_special") {
  CHECK(recognize_special(cycle_graph(7)) == SpecialShape::cycle);
  CHECK(recognize_special(cycle_graph(2)) == SpecialShape::cycle);
  CHECK(recognize_special(theta_subdivision(1, 1, 2)) == SpecialShape::theta_subdivision);
  CHECK(recognize_special(theta_subdivision(3, 2, 4)) == SpecialShape::theta_subdivision);
  CHECK(recognize_special(k4_subdivision({2, 2, 2, 2, 2, 2})) == SpecialShape::k4_subdivision);
  CHECK(recognize_special(k4()) == SpecialShape::k4_subdivision);
  CHECK(recognize_special(cubesd4()) == SpecialShape::none);
  CHECK(recognize_special(bitriangle()) == SpecialShape::none);
}

TEST_CASE("cyclically 3ec members suppress to 3-edge-connected cubic graphs") {
  std::vector<PlaneGraph> graphs{cubesd4(), k4_subdivision({2, 1, 2, 1, 2, 1}),
                                 theta_subdivision(2, 2, 2), cube(), prism()};
  for (const PlaneGraph& g : graphs) {
    REQUIRE(is_cyclically_3ec(g));
    if (recognize_special(g) == SpecialShape::cycle) continue;
    PlaneGraph h = g;
    for (;;) {
      std::optional<VertexId> pick;
      for (VertexId v : h.vertices())
        if (h.degree(v) == 2) {
          pick = v;
          break;
        }
      if (!pick) break;
      h = h.suppress_two_vertex(*pick);
    }
    for (VertexId v : h.vertices()) CHECK(h.degree(v) == 3);
    CHECK(bridges(h).empty());
    // No 2-edge-cut at all: 3-edge-connected.
    std::vector<EdgeId> es = h.edges();
    for (size_t i = 0; i < es.size(); ++i)
      for (size_t j = i + 1; j < es.size(); ++j)
        CHECK_THROWS_AS(make_cut(h, es[i], es[j]), Error);
  }
}

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hjarcs/arcsearch.hpp"
#include "hjarcs/canon.hpp"
#include "hjarcs/geometry.hpp"
#include "hjarcs/util.hpp"

using namespace hjarcs;

namespace {

ColoredGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                              std::vector<int32_t> colors = {}) {
  ColoredGraph g = ColoredGraph::create(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  if (!colors.empty()) g.color = std::move(colors);
  return g;
}

// brute force: count permutations preserving adjacency and colors
uint64_t brute_aut_order(const ColoredGraph& g) {
  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 0);
  uint64_t count = 0;
  do {
    bool ok = true;
    for (int v = 0; v < g.n && ok; ++v)
      if (g.color[perm[v]] != g.color[v]) ok = false;
    for (int u = 0; u < g.n && ok; ++u)
      for (int v = u + 1; v < g.n && ok; ++v)
        if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v])) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

ColoredGraph relabel(const ColoredGraph& g, const std::vector<int>& perm) {
  ColoredGraph h = ColoredGraph::create(g.n);
  for (int u = 0; u < g.n; ++u) {
    h.color[perm[u]] = g.color[u];
    for (int v = u + 1; v < g.n; ++v)
      if (g.adjacent(u, v)) h.add_edge(perm[u], perm[v]);
  }
  return h;
}

ColoredGraph random_graph(SplitMix64& rng, int maxN, int maxColors) {
  int n = 1 + int(rng.below(maxN));
  ColoredGraph g = ColoredGraph::create(n);
  for (int v = 0; v < n; ++v) g.color[v] = int(rng.below(maxColors));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.below(2)) g.add_edge(u, v);
  return g;
}

// color-preserving random permutation
std::vector<int> random_color_perm(SplitMix64& rng, const ColoredGraph& g) {
  std::map<int, std::vector<int>> byColor;
  for (int v = 0; v < g.n; ++v) byColor[g.color[v]].push_back(v);
  std::vector<int> perm(g.n);
  for (auto& [c, verts] : byColor) {
    std::vector<int> shuffled = verts;
    for (size_t i = shuffled.size(); i > 1; --i) std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
    for (size_t i = 0; i < verts.size(); ++i) perm[verts[i]] = shuffled[i];
  }
  return perm;
}

}  // namespace

TEST_CASE("refine examples") {
  // complete graph: the unit partition is already equitable
  ColoredGraph k4 = graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  auto cells = refine_partition(k4, {{0, 1, 2, 3}});
  REQUIRE(cells.size() == 1);
  CHECK(cells[0] == std::vector<int32_t>{0, 1, 2, 3});

  // path P3: degree split into endpoints and middle
  ColoredGraph p3 = graph_from_edges(3, {{0, 1}, {1, 2}});
  cells = refine_partition(p3, {{0, 1, 2}});
  REQUIRE(cells.size() == 2);
  CHECK(cells[0] == std::vector<int32_t>{0, 2});
  CHECK(cells[1] == std::vector<int32_t>{1});

  // 4-cycle 0-1-2-3 with vertex 0 individualized: the coarsest equitable
  // refinement is {0},{2},{1,3} (fragments ordered by ascending neighbour
  // count); the swap of 1 and 3 fixes 0 and 2, so no neighbour-count
  // refinement can separate 1 from 3 and the partition is not discrete
  ColoredGraph c4 = graph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  cells = refine_partition(c4, {{0}, {1, 2, 3}});
  REQUIRE(cells.size() == 3);
  CHECK(cells[0] == std::vector<int32_t>{0});
  CHECK(cells[1] == std::vector<int32_t>{2});
  CHECK(cells[2] == std::vector<int32_t>{1, 3});
}

TEST_CASE("triangle and relabelings") {
  ColoredGraph tri = graph_from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CanonResult a = canonical_form(tri);
  CHECK(a.aut_order.equals(6));
  std::vector<int> perm{2, 0, 1};
  CanonResult b = canonical_form(relabel(tri, perm));
  CHECK(a.form == b.form);
}

TEST_CASE("4-cycle automorphisms vs brute force") {
  ColoredGraph c4 = graph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CanonResult r = canonical_form(c4);
  CHECK(r.aut_order.equals(8));
  CHECK(brute_aut_order(c4) == 8);
}

TEST_CASE("orbit examples") {
  ColoredGraph edgeless = ColoredGraph::create(3);
  auto orbits = automorphism_orbits(edgeless);
  REQUIRE(orbits.size() == 1);
  CHECK(orbits[0].size() == 3);

  ColoredGraph star = graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  orbits = automorphism_orbits(star);
  REQUIRE(orbits.size() == 2);
  CHECK(orbits[0] == std::vector<int32_t>{0});
  CHECK(orbits[1] == std::vector<int32_t>{1, 2, 3});
}

TEST_CASE("PHG(2,Z4) incidence graph group and orbits") {
  auto ring = std::make_shared<const RingTable>(build_ring("Z4"));
  Geometry g = Geometry::build(ring, 2);
  Arc empty(g);
  ColoredGraph ig = arc_graph(empty, 2);
  CanonResult r = canonical_form(ig);
  CHECK(r.aut_order.equals(43008));  // |PGL(3,Z4)| = 2^9 * |GL(3,2)| / 2
  auto orbits = automorphism_orbits(ig);
  CHECK(orbits.size() == 2);  // all points; all hyperplanes
  CHECK(orbits[0].size() == 28);
  CHECK(orbits[1].size() == 28);
}

TEST_CASE("canonical form invariance on random colored graphs") {
  SplitMix64 rng(98765);
  for (int trial = 0; trial < 120; ++trial) {
    ColoredGraph g = random_graph(rng, 24, 3);
    CanonResult base = canonical_form(g);
    for (int rep = 0; rep < 4; ++rep) {
      auto perm = random_color_perm(rng, g);
      CanonResult r = canonical_form(relabel(g, perm));
      REQUIRE(r.form == base.form);
    }
  }
}

TEST_CASE("small census counts and exact automorphism orders") {
  // all labeled graphs on n vertices; canonical forms partition them into the
  // known numbers of isomorphism classes: 1, 2, 4, 11, 34
  const int classCount[6] = {0, 1, 2, 4, 11, 34};
  for (int n = 1; n <= 5; ++n) {
    std::set<std::vector<uint8_t>> forms;
    int edges = n * (n - 1) / 2;
    for (int mask = 0; mask < (1 << edges); ++mask) {
      ColoredGraph g = ColoredGraph::create(n);
      int e = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++e)
          if (mask & (1 << e)) g.add_edge(u, v);
      CanonResult r = canonical_form(g);
      forms.insert(r.form);
      if (n <= 4) CHECK(r.aut_order.equals(brute_aut_order(g)));
    }
    CHECK(int(forms.size()) == classCount[n]);
  }
}

TEST_CASE("aut orders match brute force on random graphs up to 7 vertices") {
  SplitMix64 rng(31337);
  for (int trial = 0; trial < 60; ++trial) {
    ColoredGraph g = random_graph(rng, 7, 2);
    CanonResult r = canonical_form(g);
    CHECK(r.aut_order.equals(brute_aut_order(g)));
  }
}

TEST_CASE("permutation group order") {
  CHECK(permutation_group_order(5, {}).equals(1));
  // S_8 from a transposition and an 8-cycle
  std::vector<int32_t> t{1, 0, 2, 3, 4, 5, 6, 7};
  std::vector<int32_t> c{1, 2, 3, 4, 5, 6, 7, 0};
  CHECK(permutation_group_order(8, {t, c}).equals(40320));
  // cyclic group of order 12
  std::vector<int32_t> r(12);
  for (int i = 0; i < 12; ++i) r[i] = (i + 1) % 12;
  CHECK(permutation_group_order(12, {r}).equals(12));
}

TEST_CASE("group enumeration") {
  std::vector<int32_t> t{1, 0, 2};
  std::vector<int32_t> c{1, 2, 0};
  auto all = enumerate_group(3, {t, c}, 100);
  CHECK(all.size() == 6);
  CHECK_THROWS(enumerate_group(3, {t, c}, 3));
}

TEST_CASE("dimacs parsing") {
  ColoredGraph g = parse_dimacs("c comment\np edge 4 3\nn 1 5\ne 1 2\ne 2 3\ne 3 4\n");
  CHECK(g.n == 4);
  CHECK(g.color[0] == 5);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(2, 3));
  CHECK(!g.adjacent(0, 3));
  CHECK_THROWS(parse_dimacs("e 1 2\n"));
  CHECK_THROWS(parse_dimacs("p edge 2 1\ne 1 5\n"));
}

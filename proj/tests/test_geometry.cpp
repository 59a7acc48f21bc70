#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

#include "hjarcs/geometry.hpp"
#include "hjarcs/util.hpp"

using namespace hjarcs;

namespace {

std::shared_ptr<const RingTable> ring(const std::string& name) {
  static std::map<std::string, std::shared_ptr<const RingTable>> cache;
  auto it = cache.find(name);
  if (it == cache.end())
    it = cache.emplace(name, std::make_shared<const RingTable>(build_ring(name))).first;
  return it->second;
}

const Geometry& geom(const std::string& name, int k) {
  static std::map<std::pair<std::string, int>, std::shared_ptr<Geometry>> cache;
  auto key = std::make_pair(name, k);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_shared<Geometry>(Geometry::build(ring(name), k))).first;
  return *it->second;
}

int64_t expected_points(const RingTable& R, int k) {
  int64_t a = 1;
  for (int i = 0; i < (R.m - 1) * k; ++i) a *= R.q;
  int64_t geo = 0, pw = 1;
  for (int i = 0; i <= k; ++i) {
    geo += pw;
    pw *= R.q;
  }
  return a * geo;
}

int64_t expected_points_per_hyperplane(const RingTable& R, int k) {
  int64_t a = 1;
  for (int i = 0; i < (R.m - 1) * (k - 1); ++i) a *= R.q;
  int64_t geo = 0, pw = 1;
  for (int i = 0; i < k; ++i) {
    geo += pw;
    pw *= R.q;
  }
  return a * geo;
}

// brute-force oracle: enumerate all vectors, keep those with a unit
// coordinate, dedupe by right-scaling normalization
std::vector<Coords> brute_points(const RingTable& R, int k) {
  std::set<Coords> out;
  int64_t total = 1;
  for (int i = 0; i <= k; ++i) total *= R.size;
  for (int64_t t = 0; t < total; ++t) {
    Coords c{};
    int64_t tt = t;
    for (int i = 0; i <= k; ++i) {
      c[i] = Elt(tt % R.size);
      tt /= R.size;
    }
    auto norm = normalize_point(R, k, c);
    if (norm) out.insert(*norm);
  }
  return {out.begin(), out.end()};
}

}  // namespace

TEST_CASE("point counts match the formula") {
  CHECK(geom("Z4", 2).num_points() == 28);
  CHECK(geom("Z4", 3).num_points() == 120);
  CHECK(geom("Z4", 4).num_points() == 496);
  CHECK(geom("Z8", 2).num_points() == 112);
  for (const auto& name : {"Z4", "S22", "Z8", "H8", "S23", "Z9", "S32", "G42", "S42", "T4",
                           "Z16", "I16", "J16", "K16", "S24"}) {
    for (int k = 1; k <= 2; ++k) {
      const Geometry& g = geom(name, k);
      CHECK(g.num_points() == expected_points(g.ring(), k));
      CHECK(g.num_hyperplanes() == g.num_points());
    }
  }
  for (const auto& name : {"Z4", "S22", "Z9", "S32"}) {
    const Geometry& g = geom(name, 3);
    CHECK(g.num_points() == expected_points(g.ring(), 3));
  }
}

TEST_CASE("enumeration matches the brute-force oracle") {
  for (const auto& name : {"Z4", "Z8", "T4", "S42"}) {
    const Geometry& g = geom(name, 2);
    auto brute = brute_points(g.ring(), 2);
    REQUIRE(int(brute.size()) == g.num_points());
    for (int i = 0; i < g.num_points(); ++i) CHECK(g.points()[i].coords == brute[i]);
  }
  // dual brute force for hyperplanes (left normalization)
  const Geometry& g = geom("T4", 2);
  const RingTable& R = g.ring();
  std::set<Coords> hyps;
  for (int64_t t = 0; t < R.size * R.size * R.size; ++t) {
    Coords c{};
    int64_t tt = t;
    for (int i = 0; i <= 2; ++i) {
      c[i] = Elt(tt % R.size);
      tt /= R.size;
    }
    auto norm = normalize_hyperplane(R, 2, c);
    if (norm) hyps.insert(*norm);
  }
  CHECK(int(hyps.size()) == g.num_hyperplanes());
}

TEST_CASE("normalization examples") {
  const RingTable& R = *ring("Z4");
  Coords raw{3, 2, 1};
  auto norm = normalize_point(R, 2, raw);
  REQUIRE(norm.has_value());
  CHECK((*norm)[0] == 1);
  CHECK((*norm)[1] == 2);
  CHECK((*norm)[2] == 3);
  Coords nonfree{2, 0, 2};
  CHECK(!normalize_point(R, 2, nonfree).has_value());
}

TEST_CASE("incidence examples over Z4") {
  const RingTable& R = *ring("Z4");
  CHECK(incident(R, 2, Coords{0, 0, 1}, Coords{1, 2, 0}));
  CHECK(!incident(R, 2, Coords{1, 1, 1}, Coords{1, 2, 3}));  // sum = 2
  const Geometry& g = geom("Z4", 2);
  for (int p = 0; p < g.num_points(); ++p) CHECK(g.hyps_of_point(p).size() == 6);  // q^m + q^{m-1}
}

TEST_CASE("points per hyperplane matches the formula") {
  for (const auto& name : {"Z4", "S22", "Z8", "H8", "Z9", "T4", "Z16", "K16"}) {
    const Geometry& g = geom(name, 2);
    int64_t expect = expected_points_per_hyperplane(g.ring(), 2);
    for (int h = 0; h < g.num_hyperplanes(); ++h) CHECK(int64_t(g.points_of_hyp(h).size()) == expect);
  }
  const Geometry& g3 = geom("Z4", 3);
  for (int h = 0; h < g3.num_hyperplanes(); ++h)
    CHECK(int64_t(g3.points_of_hyp(h).size()) == expected_points_per_hyperplane(g3.ring(), 3));
  const Geometry& g1 = geom("Z9", 1);
  for (int h = 0; h < g1.num_hyperplanes(); ++h) CHECK(g1.points_of_hyp(h).size() == 1);
}

TEST_CASE("incidence is invariant under unit rescaling") {
  SplitMix64 rng(12345);
  for (const auto& name : {"Z4", "T4", "G42"}) {
    const Geometry& g = geom(name, 2);
    const RingTable& R = g.ring();
    std::vector<Elt> units;
    for (int a = 0; a < R.size; ++a)
      if (R.unit(Elt(a))) units.push_back(Elt(a));
    for (int trial = 0; trial < 200; ++trial) {
      int p = int(rng.below(g.num_points()));
      int h = int(rng.below(g.num_hyperplanes()));
      Elt s = units[rng.below(units.size())];
      Elt t = units[rng.below(units.size())];
      Coords ps = g.points()[p].coords, ch = g.hyperplanes()[h].coeffs;
      for (int i = 0; i <= 2; ++i) {
        ps[i] = R.mul(ps[i], s);  // right-scale the point
        ch[i] = R.mul(t, ch[i]);  // left-scale the hyperplane
      }
      CHECK(incident(R, 2, ch, ps) == g.incidence_bit(p, h));
    }
  }
}

TEST_CASE("neighbour classes and the quotient map") {
  const Geometry& g = geom("Z4", 2);
  CHECK(g.num_classes() == 7);
  std::map<int, int> sizes;
  for (int p = 0; p < g.num_points(); ++p) sizes[g.point_class(p)]++;
  for (auto [cls, size] : sizes) CHECK(size == 4);
  auto id1 = g.point_id(Coords{1, 0, 0});
  auto id2 = g.point_id(Coords{1, 2, 2});
  auto id3 = g.point_id(Coords{0, 1, 0});
  REQUIRE(id1.has_value());
  REQUIRE(id2.has_value());
  REQUIRE(id3.has_value());
  CHECK(g.neighbours(*id1, *id2));
  CHECK(!g.neighbours(*id1, *id3));
  // class count and size for a few other rings
  for (const auto& name : {"Z8", "S32", "T4", "S24"}) {
    const Geometry& gg = geom(name, 2);
    const RingTable& R = gg.ring();
    int64_t expect = 1;
    for (int i = 0; i < (R.m - 1) * 2; ++i) expect *= R.q;
    std::map<int, int64_t> cs;
    for (int p = 0; p < gg.num_points(); ++p) cs[gg.point_class(p)]++;
    CHECK(int64_t(cs.size()) == (int64_t(R.q) * R.q * R.q - 1) / (R.q - 1));
    for (auto [cls, size] : cs) CHECK(size == expect);
  }
}

TEST_CASE("deterministic lexicographic order") {
  const Geometry& g = geom("Z4", 2);
  for (int i = 1; i < g.num_points(); ++i) CHECK(g.points()[i - 1].coords < g.points()[i].coords);
  CHECK(g.points()[0].coords == Coords{0, 0, 1});
}

TEST_CASE("geometry cache round trip") {
  const Geometry& g = geom("Z8", 2);
  std::string path = "test_geom_cache.bin";
  g.save_cache(path);
  Geometry loaded = Geometry::load_cache(path, ring("Z8"));
  CHECK(loaded.num_points() == g.num_points());
  CHECK(loaded.k() == g.k());
  for (int p = 0; p < g.num_points(); ++p) {
    CHECK(loaded.points()[p].coords == g.points()[p].coords);
    CHECK(loaded.hyps_of_point(p) == g.hyps_of_point(p));
    CHECK(loaded.point_class(p) == g.point_class(p));
  }
  CHECK_THROWS(Geometry::load_cache(path, ring("Z4")));
  std::remove(path.c_str());
}

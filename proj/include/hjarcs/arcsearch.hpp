#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hjarcs/bigint.hpp"
#include "hjarcs/canon.hpp"
#include "hjarcs/geometry.hpp"

namespace hjarcs {

// A multiset of points of a Geometry with cached hyperplane loads.
struct Arc {
  const Geometry* geom = nullptr;
  std::vector<uint8_t> mult;   // per point
  std::vector<uint8_t> loads;  // per hyperplane
  int n = 0;

  explicit Arc(const Geometry& g)
      : geom(&g), mult(g.num_points(), 0), loads(g.num_hyperplanes(), 0) {}

  void add(int p) {
    ++mult[p];
    ++n;
    for (int32_t h : geom->hyps_of_point(p)) ++loads[h];
  }
  void remove(int p) {
    --mult[p];
    --n;
    for (int32_t h : geom->hyps_of_point(p)) --loads[h];
  }
  bool can_add(int p, int u) const {
    for (int32_t h : geom->hyps_of_point(p))
      if (loads[h] + 1 > u) return false;
    return true;
  }
  int max_load() const;
  bool valid(int u) const { return max_load() <= u; }
  void recompute_loads();  // from scratch, for consistency checks
  std::vector<int32_t> support() const;
  std::vector<std::pair<int32_t, int32_t>> point_mults() const;  // (id, mult), support only
};

// All points whose multiplicity can be raised by one while keeping every
// hyperplane load at most u (multiset semantics: a point already in the arc
// may be addable again). With sets_only, points of multiplicity > 0 are
// excluded.
std::vector<int32_t> addable_points(const Arc& arc, int u, bool sets_only = false);

// Bipartite incidence graph with hyperplane vertices in one reserved color
// and point vertices colored by multiplicity 0..u.
ColoredGraph arc_graph(const Arc& arc, int u);

// Nakayama test: the support generates a proper submodule iff the residue
// vectors have F_q-rank < k+1.
bool is_degenerate(const Arc& arc);

struct ArcClass {
  std::vector<std::pair<int32_t, int32_t>> rep;  // (point id, multiplicity)
  int n = 0;
  BigUInt aut_order;
  bool complete = true;
  bool degenerate = false;
  std::vector<uint8_t> canonical_form;
};

struct SizeCensus {
  int n = 0;
  int64_t nondegenerate = 0;
  int64_t total = 0;
};

struct SearchStats {
  int64_t nodes = 0;
  int64_t canon_calls = 0;
  int64_t children_tried = 0;
  int64_t rejected_multiplicity = 0;
  int64_t rejected_refinement = 0;
  int64_t rejected_orbit = 0;
};

struct ClassifyOptions {
  int u = 2;
  bool sets_only = false;
  int min_size = 0;  // prune subtrees that cannot reach this size (loses smaller classes)
  int jobs = 1;
  double budget_seconds = 0;  // 0 = unlimited
  std::string checkpoint_path;  // resumed from when it exists; written on budget stop
  bool keep_full_census = false;  // keep representatives for every size, not just the maximum
};

struct ClassificationResult {
  std::string ring;
  int k = 0, u = 0;
  bool sets_only = false;
  int min_size = 0;
  bool final_result = true;  // false when the budget ran out (checkpoint written)
  int m_u = -1;              // maximum n over complete classes found
  int64_t nondegenerate_at_max = 0;
  int64_t total_at_max = 0;
  std::vector<ArcClass> classes_at_max;          // sorted by canonical form
  std::vector<SizeCensus> census;                // complete classes by size
  std::vector<ArcClass> full_census_classes;     // with keep_full_census
  SearchStats stats;
};

// Isomorph-free exhaustive generation of complete (n,u)-arcs up to
// geometric equivalence by canonical augmentation.
ClassificationResult classify(const Geometry& geom, const ClassifyOptions& opt);

struct HyperovalCensus {
  int target_size = 0;
  int64_t count = 0;
  std::vector<std::vector<int32_t>> hyperovals;  // point id sets
  int64_t distinct_canonical_forms = 0;
  BigUInt stabilizer_order;  // of the first hyperoval, when any exist
};

// All (q^m + q^{m-1} + 1, 2)-arcs of a Hjelmslev plane, without isomorph
// rejection. Requires k = 2.
HyperovalCensus hyperoval_census(const Geometry& geom);

// The unique hyperoval through a quadrangle (4 points in pairwise distinct
// neighbour classes, no 3 classes collinear in the quotient plane).
// Throws when the input is not a quadrangle or no unique completion exists.
Arc complete_to_hyperoval(const Geometry& geom, const std::vector<int32_t>& quadrangle);

}  // namespace hjarcs

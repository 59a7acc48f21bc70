#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hjarcs/ring.hpp"

namespace hjarcs {

using Coords = std::array<Elt, 5>;  // entries 0..k used

struct PointRep {
  Coords coords{};
  int32_t id = -1;
};

struct HyperplaneRep {
  Coords coeffs{};
  int32_t id = -1;
};

// Points and hyperplanes of PHG(k,R) with the incidence relation, the
// neighbour-class partition and the quotient map to PG(k, F_q).
// Immutable after build; all queries are pure reads.
class Geometry {
 public:
  static Geometry build(std::shared_ptr<const RingTable> ring, int k);

  const RingTable& ring() const { return *ring_; }
  std::shared_ptr<const RingTable> ring_ptr() const { return ring_; }
  int k() const { return k_; }
  int num_points() const { return int(points_.size()); }
  int num_hyperplanes() const { return int(hyperplanes_.size()); }
  const std::vector<PointRep>& points() const { return points_; }
  const std::vector<HyperplaneRep>& hyperplanes() const { return hyperplanes_; }

  bool incidence_bit(int point, int hyp) const {
    return (inc_[size_t(point) * words_ + (hyp >> 6)] >> (hyp & 63)) & 1;
  }
  const std::vector<int32_t>& hyps_of_point(int point) const { return hyps_of_point_[point]; }
  const std::vector<int32_t>& points_of_hyp(int hyp) const { return points_of_hyp_[hyp]; }
  int hyps_per_point() const { return int(hyps_of_point_[0].size()); }

  int point_class(int point) const { return class_of_point_[point]; }
  int hyp_class(int hyp) const { return class_of_hyp_[hyp]; }
  int num_classes() const { return num_classes_; }
  // Quotient image of a point: index into pg_points(), equal to its class id.
  int quotient_point(int point) const { return class_of_point_[point]; }
  const std::vector<Coords>& pg_points() const { return pg_points_; }
  bool neighbours(int p1, int p2) const { return class_of_point_[p1] == class_of_point_[p2]; }

  std::optional<int> point_id(const Coords& normalized) const;
  std::optional<int> hyp_id(const Coords& normalized) const;

  // Shared bipartite incidence-graph adjacency (points 0..P-1, then
  // hyperplanes P..P+H-1), reused by every arc-colored graph.
  int graph_vertices() const { return num_points() + num_hyperplanes(); }
  int graph_words() const { return graph_words_; }
  const std::shared_ptr<const std::vector<uint64_t>>& graph_adj() const { return graph_adj_; }

  std::string summary() const;
  void save_cache(const std::string& path) const;
  static Geometry load_cache(const std::string& path, std::shared_ptr<const RingTable> ring);

 private:
  std::shared_ptr<const RingTable> ring_;
  int k_ = 0;
  int words_ = 0;        // words per incidence row (over hyperplanes)
  int graph_words_ = 0;  // words per incidence-graph adjacency row
  std::vector<PointRep> points_;
  std::vector<HyperplaneRep> hyperplanes_;
  std::vector<uint64_t> inc_;  // point-major bitmatrix
  std::vector<std::vector<int32_t>> hyps_of_point_;
  std::vector<std::vector<int32_t>> points_of_hyp_;
  std::vector<int32_t> class_of_point_;
  std::vector<int32_t> class_of_hyp_;
  int num_classes_ = 0;
  std::vector<Coords> pg_points_;
  std::shared_ptr<const std::vector<uint64_t>> graph_adj_;

  void finish_from_incidence();  // derive lists, classes, graph adjacency
};

// Right-normalizes a point representative (earliest unit coordinate scaled
// to 1). Returns nullopt when no coordinate is a unit.
std::optional<Coords> normalize_point(const RingTable& R, int k, const Coords& raw);
// Left-normalizes a hyperplane coefficient vector.
std::optional<Coords> normalize_hyperplane(const RingTable& R, int k, const Coords& raw);

// Incidence test sum_i c_i * x_i == 0, products in left-coefficient,
// right-point order (this matters for T4).
bool incident(const RingTable& R, int k, const Coords& coeffs, const Coords& point);

// Normalized representatives of the points of PG(k, F_q), lex sorted.
std::vector<Coords> enumerate_pg_points(const FieldTable& f, int k);

}  // namespace hjarcs

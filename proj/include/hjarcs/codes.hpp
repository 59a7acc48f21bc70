#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hjarcs/arcsearch.hpp"
#include "hjarcs/geometry.hpp"
#include "hjarcs/ring.hpp"

namespace hjarcs {

// Homogeneous weight, normalized to {0, q-1, q}: zero, outside the socle,
// nonzero socle. With this normalization d_hom equals q^{2-m} times the
// minimum Hamming distance of the Gray image.
int hom_weight(const RingTable& R, Elt x);
int hom_distance(const RingTable& R, const std::vector<Elt>& a, const std::vector<Elt>& b);

// Generalized Gray map R -> F_q^{q^{m-1}}: with theta-adic digit residues
// (x0..x_{m-1}), the coordinate indexed by c in F_q^{m-1} (lexicographic,
// leftmost digit most significant) is x_{m-1} + sum_i c_i * x_{i-1}.
std::vector<uint8_t> gray_map(const RingTable& R, Elt x);

struct GeneratorMatrix {
  int k = 0;                            // k+1 rows
  int n = 0;                            // columns
  std::vector<std::vector<Elt>> rows;   // (k+1) x n
};

GeneratorMatrix generator_matrix(const Arc& arc);

struct CodeReport {
  int n = 0;                     // code length
  int64_t cardinality = 0;       // |C| after deduplication
  bool injective = true;         // x -> xG injective (fails only for degenerate arcs)
  bool degenerate = false;
  int64_t d_hom = 0;             // minimum homogeneous distance
  int gray_q = 0;
  int gray_length = 0;           // n * q^{m-1}
  int gray_dimension = -1;       // log_q |C| when integral, else -1
  int64_t gray_min_hamming = 0;
  bool gray_linear = false;      // F_q-linearity of the Gray image
  std::map<int64_t, int64_t> weight_enumerator;  // Hamming weight -> count in psi(C)
};

// Enumerates all codewords xG for x in R^{1 x (k+1)} and reports the
// homogeneous and Gray-image parameters.
CodeReport code_report(const Arc& arc);

// ---- arc files -------------------------------------------------------------
// Text format: header lines `ring=<name>` and `dim=<k>`, then one point per
// line `(e1:e2:...:ek+1)` with ring element literals, optionally followed by
// `mult=<m>`. Blank lines and `#` comments are ignored.

struct ArcFile {
  std::string ring;
  int k = 0;
  std::vector<std::pair<Coords, int>> points;  // normalized coords, multiplicity
};

ArcFile parse_arc_file(const std::string& text, const RingTable& R);
std::string arc_file_ring_name(const std::string& text);  // peek at the header
Arc arc_from_file(const ArcFile& file, const Geometry& geom);
std::string write_arc_file(const Arc& arc);

}  // namespace hjarcs

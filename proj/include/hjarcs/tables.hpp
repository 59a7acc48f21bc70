#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hjarcs {

// One cell of the classification overview table: expected maximum size and
// class counts of maximal (n,u)-arcs in PHG(k, ring).
struct Table1Cell {
  const char* ring;
  int k;
  int u;
  int m;                  // expected m_u(k, ring)
  int64_t nondegenerate;  // -1 when unknown
  int64_t total;          // -1 when unknown
  bool lower_bound_only;  // compare m as a lower bound (the open Z16 cell)
  bool desk;              // member of scope=small
};

const std::vector<Table1Cell>& table1_cells();

// A bundled reference arc with its published invariants.
struct AppendixArc {
  const char* key;
  const char* ring;
  int k;
  int n;
  int u;
  uint64_t g;       // automorphism group order
  int64_t d_hom;
  int gray_q;
  int gray_length;
  int gray_dimension;
  int64_t gray_min_hamming;
  bool gray_linear;  // linearity of the Gray image is asserted for this entry
  std::vector<std::pair<int64_t, int64_t>> weight_enumerator;  // weight -> count
  const char* arc_file;  // text in the arc file format
  const char* remark;    // static note on the best comparable linear code
};

const std::vector<AppendixArc>& appendix_arcs();

}  // namespace hjarcs

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "hjarcs/bigint.hpp"

namespace hjarcs {

// Vertex-colored undirected graph with shared adjacency bits. Rows of the
// adjacency bitmatrix are `words` 64-bit words each; the vector may be
// shared between many graphs that differ only in colors (arc multiplicity
// recoloring of one incidence graph).
struct ColoredGraph {
  int n = 0;
  int words = 0;
  std::shared_ptr<const std::vector<uint64_t>> adj;
  std::vector<int32_t> color;

  static ColoredGraph create(int n);
  ColoredGraph with_colors(std::vector<int32_t> colors) const;
  void add_edge(int u, int v);  // only valid on graphs made by create()
  bool adjacent(int u, int v) const {
    return ((*adj)[size_t(u) * words + (v >> 6)] >> (v & 63)) & 1;
  }
  const uint64_t* row(int v) const { return adj->data() + size_t(v) * words; }
};

struct CanonResult {
  // Color sequence of the canonical order followed by the upper-triangular
  // adjacency bits of the relabeled graph; equal byte strings iff isomorphic.
  std::vector<uint8_t> form;
  std::vector<int32_t> labeling;  // vertex -> canonical position
  std::vector<std::vector<int32_t>> generators;
  BigUInt aut_order;
};

// Coarsest equitable refinement of an ordered partition (1-dimensional
// Weisfeiler-Leman by neighbour counts). The input partition must respect
// colors if it is to be used for isomorphism work; refine itself only needs
// a partition of the vertex set.
std::vector<std::vector<int32_t>> refine_partition(const ColoredGraph& g,
                                                   const std::vector<std::vector<int32_t>>& partition);

CanonResult canonical_form(const ColoredGraph& g);

// Orbits of the automorphism group, sorted by smallest member.
std::vector<std::vector<int32_t>> automorphism_orbits(const ColoredGraph& g);

// First cell of the root equitable refinement (by color classes) whose color
// satisfies `pred`; empty when no such cell. Used as a cheap, isomorphism-
// invariant prefilter: the vertex of minimal canonical position among those
// whose color satisfies pred always lies in this cell, and the cell is a
// union of automorphism orbits.
std::vector<int32_t> first_refined_cell_with(const ColoredGraph& g, bool (*pred)(int32_t color, void* ctx),
                                             void* ctx);

// Exact order of the permutation group generated by `gens` on n points,
// via a deterministic orbit-stabilizer (Schreier-Sims) chain.
BigUInt permutation_group_order(int n, const std::vector<std::vector<int32_t>>& gens);

// All elements of the generated group, by closure. Throws when the group
// exceeds `limit` elements.
std::vector<std::vector<int32_t>> enumerate_group(int n, const std::vector<std::vector<int32_t>>& gens,
                                                  size_t limit);

// DIMACS-like colored graph text: "p edge N M" header, "n v c" color lines
// (1-based vertices), "e u v" edge lines. Throws on malformed input.
ColoredGraph parse_dimacs(const std::string& text);

}  // namespace hjarcs

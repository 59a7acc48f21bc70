#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hjarcs {

// Dense element index into a ring's operation tables. 0 is the zero
// element, 1 the one element, in every ring built here.
using Elt = uint8_t;

constexpr Elt kNoInverse = 0xff;

// Arithmetic tables for one of the residue fields F_2, F_3, F_4.
// F_4 is F_2[a]/(a^2+a+1) with element order 0, 1, a, a+1.
struct FieldTable {
  int q = 0;
  int p = 0;
  int r = 1;
  std::array<std::array<uint8_t, 4>, 4> add{};
  std::array<std::array<uint8_t, 4>, 4> mul{};
  std::array<uint8_t, 4> neg{};
  std::array<uint8_t, 4> inv{};  // inv[0] unused
  int generator = 1;             // multiplicative generator, 'a' when q > p

  std::string literal(int x) const;
};

FieldTable make_field(int q);

struct RingSpec {
  std::string name;          // Z4, S22, Z8, H8, S23, Z9, S32, G42, S42, T4, Z16, I16, J16, K16, S24
  std::string presentation;  // e.g. "Z_4[X]/(X^2+2, X^3)"
  bool skew = false;         // true only for T4
};

// A finite chain ring materialized as operation tables. Immutable after
// construction; freely shareable across threads.
struct RingTable {
  RingSpec spec;
  int size = 0;  // q^m
  int q = 0, m = 0, p = 0, r = 0, lambda = 0;
  FieldTable field;  // residue field F_q

  std::vector<Elt> add_t, mul_t;  // size x size, row major
  std::vector<Elt> neg_t;
  std::vector<Elt> inv_t;  // kNoInverse on non-units
  std::vector<uint8_t> unit_t;
  std::vector<uint8_t> residue_t;  // element -> F_q index
  Elt theta = 0;                   // fixed radical generator
  std::vector<Elt> gamma;          // transversal of rad R; gamma[j] has residue j, gamma[0] = 0
  std::vector<uint8_t> val_t;      // valuation in 0..m
  std::vector<std::array<Elt, 4>> digits_t;  // theta-adic digits, entries 0..m-1 used
  std::vector<Elt> theta_pow_t;              // theta^0..theta^m
  std::vector<std::string> literals;
  std::string sigma_note;  // T4 only

  Elt add(Elt a, Elt b) const { return add_t[size_t(a) * size + b]; }
  Elt mul(Elt a, Elt b) const { return mul_t[size_t(a) * size + b]; }
  Elt neg(Elt a) const { return neg_t[a]; }
  Elt sub(Elt a, Elt b) const { return add(a, neg_t[b]); }
  Elt inv(Elt a) const { return inv_t[a]; }
  bool unit(Elt a) const { return unit_t[a] != 0; }
  uint8_t residue(Elt a) const { return residue_t[a]; }
  int valuation(Elt a) const { return val_t[a]; }
  Elt theta_pow(int i) const { return theta_pow_t[i]; }
  bool in_socle(Elt a) const { return val_t[a] >= m - 1; }

  // Unique digits (g0..g_{m-1}) over gamma with x = sum g_i theta^i.
  std::array<Elt, 4> theta_adic(Elt x) const { return digits_t[x]; }

  std::string literal(Elt x) const { return literals[x]; }
  // Parses an element literal ("3", "X+1", "aX+(a+1)", "2a+3", ...).
  // Throws std::runtime_error on malformed input.
  Elt parse(std::string_view text) const;

  std::string dump_tables() const;  // stable text format for `ring show`
};

const std::vector<std::string>& ring_names();
RingSpec ring_spec(const std::string& name);

// Builds the named ring and validates the chain-ring axioms exhaustively.
// Throws std::runtime_error for unknown names or if validation fails.
RingTable build_ring(const std::string& name);

}  // namespace hjarcs

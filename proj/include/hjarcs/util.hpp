#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace hjarcs {

struct UnionFind {
  std::vector<int32_t> parent;

  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }

  bool same(int a, int b) { return find(a) == find(b); }
};

// splitmix64: deterministic PRNG for tests and rescaling checks.
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // uniform in [0, bound)
  uint64_t below(uint64_t bound) { return next() % bound; }
};

struct Hash128 {
  uint64_t lo = 0, hi = 0;
  bool operator==(const Hash128& o) const { return lo == o.lo && hi == o.hi; }
  bool operator<(const Hash128& o) const { return hi != o.hi ? hi < o.hi : lo < o.lo; }
};

inline Hash128 hash_bytes(const uint8_t* data, size_t len) {
  uint64_t h1 = 0x51'7c'c1'b7'27'22'0a'95ull ^ len;
  uint64_t h2 = 0x2f'8b'fb'61'0e'ab'81'77ull + len;
  for (size_t i = 0; i < len; ++i) {
    h1 = (h1 ^ data[i]) * 0x100000001b3ull;
    h2 = (h2 + data[i]) * 0xc2b2ae3d27d4eb4full;
    h2 ^= h2 >> 29;
  }
  h1 ^= h1 >> 33;
  h1 *= 0xff51afd7ed558ccdull;
  h1 ^= h1 >> 33;
  h2 ^= h1;
  return {h1, h2};
}

struct Hash128Hasher {
  size_t operator()(const Hash128& h) const { return static_cast<size_t>(h.lo ^ (h.hi * 0x9e3779b97f4a7c15ull)); }
};

}  // namespace hjarcs

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "hjarcs/ring.hpp"

using namespace hjarcs;

namespace {

RingTable& ring(const std::string& name) {
  static std::map<std::string, RingTable> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, build_ring(name)).first;
  return it->second;
}

// ---- independent symbolic-reduction oracle ---------------------------------
//
// Quotients of M[X] (coefficients mod M, or F_4 digit arithmetic) by an ideal:
// two truncated polynomials are congruent iff their difference lies in the
// additive span of the shifted ideal generators. Everything is finite, so the
// span is materialized exhaustively.

struct PolyQuotientOracle {
  int M;        // coefficient modulus; 0 means F_4 digits
  int N;        // truncation degree (X^N and above must lie in the ideal)
  std::set<std::vector<int>> span;
  const FieldTable* f4 = nullptr;

  int cadd(int a, int b) const { return f4 ? f4->add[a][b] : (a + b) % M; }
  int cmul(int a, int b) const { return f4 ? f4->mul[a][b] : (a * b) % M; }
  int csize() const { return f4 ? 4 : M; }

  std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b) const {
    std::vector<int> c(N, 0);
    for (int i = 0; i < N; ++i) c[i] = cadd(a[i], b[i]);
    return c;
  }
  std::vector<int> mul(const std::vector<int>& a, const std::vector<int>& b) const {
    std::vector<int> c(N, 0);
    for (int i = 0; i < N; ++i)
      for (int j = 0; i + j < N; ++j) c[i + j] = cadd(c[i + j], cmul(a[i], b[j]));
    return c;
  }

  PolyQuotientOracle(int M_, int N_, const std::vector<std::vector<int>>& ideal_gens,
                     const FieldTable* f4_ = nullptr)
      : M(M_), N(N_), f4(f4_) {
    // additive closure of all scalar multiples of X^j * gen
    std::vector<std::vector<int>> seeds;
    for (const auto& g : ideal_gens) {
      std::vector<int> gg(N, 0);
      for (size_t i = 0; i < g.size() && int(i) < N; ++i) gg[i] = g[i];
      for (int j = 0; j < N; ++j) {
        std::vector<int> shifted(N, 0);
        bool overflow = false;
        for (int i = 0; i < N; ++i) {
          if (gg[i] == 0) continue;
          if (i + j >= N) {
            overflow = true;  // would leave the truncation window
            break;
          }
          shifted[i + j] = gg[i];
        }
        if (overflow) continue;
        for (int s = 1; s < csize(); ++s) {
          std::vector<int> scaled(N, 0);
          for (int i = 0; i < N; ++i) scaled[i] = cmul(s, shifted[i]);
          seeds.push_back(scaled);
        }
      }
    }
    std::vector<int> zero(N, 0);
    span.insert(zero);
    std::vector<std::vector<int>> frontier{zero};
    while (!frontier.empty()) {
      std::vector<std::vector<int>> next;
      for (const auto& x : frontier)
        for (const auto& s : seeds) {
          auto y = add(x, s);
          if (span.insert(y).second) next.push_back(y);
        }
      frontier = std::move(next);
    }
  }

  bool congruent(const std::vector<int>& a, const std::vector<int>& b) const {
    std::vector<int> diff(N, 0);
    for (int i = 0; i < N; ++i) {
      int nb = b[i];
      // negate in the coefficient structure
      if (f4)
        nb = b[i];  // characteristic 2
      else
        nb = (M - b[i]) % M;
      diff[i] = cadd(a[i], nb);
    }
    return span.count(diff) > 0;
  }
};

// canonical representative polynomial of an element index, per ring encoding
std::vector<int> rep_poly(const std::string& name, int x, int N) {
  std::vector<int> p(N, 0);
  if (name == "H8" || name == "I16" || name == "J16" || name == "G42") {
    p[0] = x % 4;
    p[1] = x / 4;
  } else if (name == "K16") {
    p[0] = x % 4;
    p[1] = (x / 4) % 2;
    p[2] = x / 8;
  } else if (name == "S22" || name == "S23" || name == "S24") {
    for (int i = 0; x; ++i, x /= 2) p[i] = x % 2;
  } else if (name == "S32") {
    p[0] = x % 3;
    p[1] = x / 3;
  } else if (name == "S42") {
    p[0] = x % 4;
    p[1] = x / 4;
  } else {
    REQUIRE(false);
  }
  return p;
}

void check_tables_against_oracle(const std::string& name, const PolyQuotientOracle& oracle) {
  const RingTable& R = ring(name);
  int N = oracle.N;
  for (int a = 0; a < R.size; ++a)
    for (int b = 0; b < R.size; ++b) {
      auto pa = rep_poly(name, a, N), pb = rep_poly(name, b, N);
      auto sum = oracle.add(pa, pb);
      auto prod = oracle.mul(pa, pb);
      CHECK(oracle.congruent(sum, rep_poly(name, R.add(Elt(a), Elt(b)), N)));
      CHECK(oracle.congruent(prod, rep_poly(name, R.mul(Elt(a), Elt(b)), N)));
    }
  // distinct elements are distinct in the quotient
  for (int a = 0; a < R.size; ++a)
    for (int b = a + 1; b < R.size; ++b)
      CHECK(!oracle.congruent(rep_poly(name, a, N), rep_poly(name, b, N)));
}

}  // namespace

TEST_CASE("all fifteen rings build and validate") {
  CHECK(ring_names().size() == 15);
  for (const auto& name : ring_names()) {
    const RingTable& R = ring(name);
    CHECK(R.size == [&] {
      int s = 1;
      for (int i = 0; i < R.m; ++i) s *= R.q;
      return s;
    }());
    CHECK(R.add(0, 3 % R.size) == 3 % R.size);
  }
  CHECK_THROWS(build_ring("Z6"));
}

TEST_CASE("Z4 basics") {
  const RingTable& R = ring("Z4");
  CHECK(R.mul(2, 2) == 0);
  CHECK(R.unit(3));
  CHECK(R.theta == 2);
  CHECK(R.m == 2);
}

TEST_CASE("H8 presentation via symbolic reduction oracle") {
  // Z4[X]/(X^2+2, X^3): X*X = 2 and 2*X = 0
  PolyQuotientOracle oracle(4, 8, {{2, 0, 1}, {0, 0, 0, 1}});
  const RingTable& R = ring("H8");
  Elt X = R.parse("X");
  CHECK(R.mul(X, X) == R.parse("2"));
  CHECK(R.mul(R.parse("2"), X) == 0);
  check_tables_against_oracle("H8", oracle);
}

TEST_CASE("presented commutative rings match the ideal-span oracle") {
  check_tables_against_oracle("G42", PolyQuotientOracle(4, 6, {{1, 1, 1}}));
  check_tables_against_oracle("I16", PolyQuotientOracle(4, 8, {{2, 0, 1}}));
  check_tables_against_oracle("J16", PolyQuotientOracle(4, 8, {{2, 2, 1}}));
  check_tables_against_oracle("K16", PolyQuotientOracle(4, 8, {{2, 0, 0, 1}, {0, 0, 0, 0, 1}}));
  check_tables_against_oracle("S22", PolyQuotientOracle(2, 6, {{0, 0, 1}}));
  check_tables_against_oracle("S23", PolyQuotientOracle(2, 8, {{0, 0, 0, 1}}));
  check_tables_against_oracle("S24", PolyQuotientOracle(2, 10, {{0, 0, 0, 0, 1}}));
  check_tables_against_oracle("S32", PolyQuotientOracle(3, 6, {{0, 0, 1}}));
  const FieldTable f4 = make_field(4);
  check_tables_against_oracle("S42", PolyQuotientOracle(0, 6, {{0, 0, 1}}, &f4));
}

TEST_CASE("T4 skew multiplication via the matrix representation") {
  // c0 + c1 X embeds into 2x2 matrices over F_4 as [[c0, c1], [0, c0^2]]
  const RingTable& R = ring("T4");
  const FieldTable f = make_field(4);
  auto frob = [&](int x) { return f.mul[x][x]; };
  auto to_mat = [&](int x) {
    int c0 = x % 4, c1 = x / 4;
    return std::array<int, 4>{c0, c1, 0, frob(c0)};
  };
  auto mat_mul = [&](std::array<int, 4> A, std::array<int, 4> B) {
    return std::array<int, 4>{
        f.add[f.mul[A[0]][B[0]]][f.mul[A[1]][B[2]]], f.add[f.mul[A[0]][B[1]]][f.mul[A[1]][B[3]]],
        f.add[f.mul[A[2]][B[0]]][f.mul[A[3]][B[2]]], f.add[f.mul[A[2]][B[1]]][f.mul[A[3]][B[3]]]};
  };
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) {
      auto M = mat_mul(to_mat(a), to_mat(b));
      CHECK(M == to_mat(R.mul(Elt(a), Elt(b))));
    }
  // X * a = (a+1) * X, i.e. sigma(a) = a^2 = a+1
  Elt X = R.parse("X"), A = R.parse("a");
  CHECK(R.mul(X, A) == R.parse("(a+1)X"));
  CHECK(R.mul(X, A) != R.mul(A, X));
}

TEST_CASE("commutativity holds except for T4") {
  for (const auto& name : ring_names()) {
    const RingTable& R = ring(name);
    bool comm = true;
    for (int a = 0; a < R.size && comm; ++a)
      for (int b = 0; b < R.size; ++b)
        if (R.mul(Elt(a), Elt(b)) != R.mul(Elt(b), Elt(a))) {
          comm = false;
          break;
        }
    CHECK(comm == (name != "T4"));
  }
}

TEST_CASE("T4 one-sided ideals coincide as a chain") {
  const RingTable& R = ring("T4");
  for (int x = 0; x < R.size; ++x) {
    std::set<Elt> left, right;
    for (int b = 0; b < R.size; ++b) {
      left.insert(R.mul(Elt(b), Elt(x)));
      right.insert(R.mul(Elt(x), Elt(b)));
    }
    CHECK(left == right);
  }
}

TEST_CASE("unit counts and radical filtration") {
  for (const auto& name : ring_names()) {
    const RingTable& R = ring(name);
    int units = 0;
    for (int a = 0; a < R.size; ++a) units += R.unit(Elt(a));
    CHECK(units == R.size - R.size / R.q);
    // |rad^i| = q^{m-i}
    for (int i = 0; i <= R.m; ++i) {
      int count = 0;
      for (int a = 0; a < R.size; ++a) count += (R.valuation(Elt(a)) >= i);
      int expect = 1;
      for (int j = 0; j < R.m - i; ++j) expect *= R.q;
      CHECK(count == expect);
    }
  }
}

TEST_CASE("residue map is constant on radical cosets and induces the field") {
  for (const auto& name : ring_names()) {
    const RingTable& R = ring(name);
    for (int a = 0; a < R.size; ++a)
      for (int b = 0; b < R.size; ++b) {
        if (R.valuation(R.sub(Elt(a), Elt(b))) >= 1) CHECK(R.residue(Elt(a)) == R.residue(Elt(b)));
        CHECK(R.residue(R.add(Elt(a), Elt(b))) == R.field.add[R.residue(Elt(a))][R.residue(Elt(b))]);
        CHECK(R.residue(R.mul(Elt(a), Elt(b))) == R.field.mul[R.residue(Elt(a))][R.residue(Elt(b))]);
      }
  }
}

TEST_CASE("theta-adic expansion") {
  const RingTable& Z4 = ring("Z4");
  CHECK(Z4.theta_adic(0)[0] == 0);
  CHECK(Z4.theta_adic(0)[1] == 0);
  CHECK(Z4.theta_adic(3)[0] == 1);  // 3 = 1 + 1*2
  CHECK(Z4.theta_adic(3)[1] == 1);
  const RingTable& Z8 = ring("Z8");
  auto d6 = Z8.theta_adic(6);  // 6 = 0 + 1*2 + 1*4
  CHECK(d6[0] == 0);
  CHECK(d6[1] == 1);
  CHECK(d6[2] == 1);
  // expansion is a bijection Gamma^m -> R for every ring
  for (const auto& name : ring_names()) {
    const RingTable& R = ring(name);
    std::set<int> seen;
    for (int x = 0; x < R.size; ++x) {
      auto d = R.theta_adic(Elt(x));
      Elt sum = 0;
      for (int i = 0; i < R.m; ++i) {
        bool inGamma = std::find(R.gamma.begin(), R.gamma.end(), d[i]) != R.gamma.end();
        CHECK(inGamma);
        sum = R.add(sum, R.mul(d[i], R.theta_pow(i)));
      }
      CHECK(sum == x);
      seen.insert(x);
    }
    CHECK(int(seen.size()) == R.size);
  }
}

TEST_CASE("valuation examples") {
  CHECK(ring("Z4").valuation(2) == 1);
  CHECK(ring("Z8").valuation(4) == 2);
  const RingTable& T4 = ring("T4");
  CHECK(T4.valuation(T4.mul(T4.parse("X"), T4.parse("a+1"))) == 1);
}

TEST_CASE("gamma is a transversal containing zero") {
  for (const auto& name : ring_names()) {
    const RingTable& R = ring(name);
    CHECK(int(R.gamma.size()) == R.q);
    CHECK(R.gamma[0] == 0);
    std::set<int> residues;
    for (Elt g : R.gamma) residues.insert(R.residue(g));
    CHECK(int(residues.size()) == R.q);
    // multiplicatively closed (Teichmueller-style)
    for (Elt g : R.gamma)
      for (Elt h : R.gamma) {
        Elt prod = R.mul(g, h);
        CHECK(std::find(R.gamma.begin(), R.gamma.end(), prod) != R.gamma.end());
      }
  }
}

TEST_CASE("literal round trip") {
  for (const auto& name : ring_names()) {
    const RingTable& R = ring(name);
    for (int x = 0; x < R.size; ++x) {
      CAPTURE(name);
      CAPTURE(R.literal(Elt(x)));
      CHECK(R.parse(R.literal(Elt(x))) == x);
    }
  }
}

TEST_CASE("literal parsing of appendix-style forms") {
  const RingTable& T4 = ring("T4");
  CHECK(T4.parse("aX+(a+1)") == T4.add(T4.mul(T4.parse("a"), T4.parse("X")), T4.parse("a+1")));
  CHECK(T4.parse("(a+1)X") == T4.mul(T4.parse("a+1"), T4.parse("X")));
  const RingTable& S23 = ring("S23");
  CHECK(S23.parse("X^2+X+1") == S23.add(S23.add(S23.mul(S23.parse("X"), S23.parse("X")), S23.parse("X")), 1));
  const RingTable& G42 = ring("G42");
  CHECK(G42.parse("2a+3") == G42.add(G42.mul(G42.parse("2"), G42.parse("a")), G42.parse("3")));
  CHECK(G42.parse("3a") == G42.mul(G42.parse("3"), G42.parse("a")));
  const RingTable& S32 = ring("S32");
  CHECK(S32.parse("2X+2") == S32.add(S32.mul(S32.parse("2"), S32.parse("X")), S32.parse("2")));
  CHECK_THROWS(ring("Z4").parse("X"));
  CHECK_THROWS(ring("Z4").parse("a"));
  CHECK_THROWS(ring("Z4").parse("1+"));
}

TEST_CASE("field tables") {
  for (int q : {2, 3, 4}) {
    FieldTable f = make_field(q);
    CHECK(f.q == q);
    for (int a = 0; a < q; ++a) {
      CHECK(f.add[a][f.neg[a]] == 0);
      if (a) CHECK(f.mul[a][f.inv[a]] == 1);
    }
  }
  FieldTable f4 = make_field(4);
  CHECK(f4.generator == 2);
  CHECK(f4.mul[2][2] == 3);  // a^2 = a+1
  CHECK(f4.literal(3) == "a+1");
}

TEST_CASE("ring show dumps stable text") {
  std::string dump = ring("Z4").dump_tables();
  CHECK(dump.find("ring Z4") != std::string::npos);
  CHECK(dump.find("theta 2 (2)") != std::string::npos);
  CHECK(dump.find("add") != std::string::npos);
}

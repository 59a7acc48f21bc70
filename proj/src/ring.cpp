#include "hjarcs/ring.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hjarcs {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error("ring: " + msg); }

void check(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}

}  // namespace

std::string FieldTable::literal(int x) const {
  if (q <= 3) return std::to_string(x);
  static const char* f4[4] = {"0", "1", "a", "a+1"};
  return f4[x];
}

FieldTable make_field(int q) {
  FieldTable f;
  f.q = q;
  if (q == 2 || q == 3) {
    f.p = q;
    f.r = 1;
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        f.add[a][b] = uint8_t((a + b) % q);
        f.mul[a][b] = uint8_t((a * b) % q);
      }
    f.generator = q == 2 ? 1 : 2;
  } else if (q == 4) {
    f.p = 2;
    f.r = 2;
    // bit 0 = constant term, bit 1 = coefficient of a; a^2 = a+1
    auto mul4 = [](int x, int y) {
      int x0 = x & 1, x1 = x >> 1, y0 = y & 1, y1 = y >> 1;
      int c0 = x0 & y0, c1 = (x0 & y1) ^ (x1 & y0), c2 = x1 & y1;
      return (c0 ^ c2) | ((c1 ^ c2) << 1);
    };
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        f.add[a][b] = uint8_t(a ^ b);
        f.mul[a][b] = uint8_t(mul4(a, b));
      }
    f.generator = 2;  // 'a', of multiplicative order 3
  } else {
    fail("unsupported field order " + std::to_string(q));
  }
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (f.add[a][b] == 0) f.neg[a] = uint8_t(b);
      if (f.mul[a][b] == 1) f.inv[a] = uint8_t(b);
    }
  }
  // field axioms, exhaustively
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      check(f.add[a][b] == f.add[b][a] && f.mul[a][b] == f.mul[b][a], "field commutativity");
      for (int c = 0; c < q; ++c) {
        check(f.add[f.add[a][b]][c] == f.add[a][f.add[b][c]], "field add assoc");
        check(f.mul[f.mul[a][b]][c] == f.mul[a][f.mul[b][c]], "field mul assoc");
        check(f.mul[a][f.add[b][c]] == f.add[f.mul[a][b]][f.mul[a][c]], "field distributivity");
      }
    }
  if (q > f.p) {
    int x = f.generator, order = 1;
    while (x != 1) {
      x = f.mul[x][f.generator];
      ++order;
    }
    check(order == q - 1, "field generator order");
  }
  return f;
}

namespace {

struct RingParams {
  const char* name;
  const char* presentation;
  int q, m, p, r, lambda;
  bool skew;
};

const RingParams kRings[] = {
    {"Z4", "Z_4", 2, 2, 2, 1, 2, false},
    {"S22", "F_2[X]/(X^2)", 2, 2, 2, 1, 1, false},
    {"Z8", "Z_8", 2, 3, 2, 1, 3, false},
    {"H8", "Z_4[X]/(X^2+2, X^3)", 2, 3, 2, 1, 2, false},
    {"S23", "F_2[X]/(X^3)", 2, 3, 2, 1, 1, false},
    {"Z9", "Z_9", 3, 2, 3, 1, 2, false},
    {"S32", "F_3[X]/(X^2)", 3, 2, 3, 1, 1, false},
    {"G42", "Z_4[a]/(a^2+a+1)", 4, 2, 2, 2, 2, false},
    {"S42", "F_4[X]/(X^2) with F_4 = F_2[a]/(a^2+a+1)", 4, 2, 2, 2, 1, false},
    {"T4", "F_4[X;sigma]/(X^2) with sigma(b) = b^2", 4, 2, 2, 2, 1, true},
    {"Z16", "Z_16", 2, 4, 2, 1, 4, false},
    {"I16", "Z_4[X]/(X^2+2)", 2, 4, 2, 1, 2, false},
    {"J16", "Z_4[X]/(X^2+2X+2)", 2, 4, 2, 1, 2, false},
    {"K16", "Z_4[X]/(X^3+2, X^4)", 2, 4, 2, 1, 2, false},
    {"S24", "F_2[X]/(X^4)", 2, 4, 2, 1, 1, false},
};

const RingParams& params_for(const std::string& name) {
  for (const auto& rp : kRings)
    if (name == rp.name) return rp;
  fail("unknown ring name '" + name + "'");
}

// ---- raw arithmetic per presentation family -------------------------------
//
// Each ring's elements are encoded as a canonical coefficient tuple packed
// into the dense index; the lambdas below implement multiplication on the
// packed form, reduced by the defining relations.

struct RawOps {
  int size;
  std::function<int(int, int)> add;
  std::function<int(int, int)> mul;
  std::function<uint8_t(int)> residue;  // onto F_q index
  std::function<std::string(int)> literal;
};

std::string z4_poly_literal(int c0, int c1, int c2, const char* sym) {
  // c2*sym^2 + c1*sym + c0 with coefficients in Z4, descending powers
  std::string s;
  auto term = [&](int c, int pow) {
    if (c == 0) return;
    if (!s.empty()) s += "+";
    if (c != 1) s += std::to_string(c);
    if (pow >= 1) s += sym;
    if (pow == 2) s += "^2";
  };
  term(c2, 2);
  term(c1, 1);
  if (c0 != 0 || s.empty()) {
    if (!s.empty()) s += "+";
    s += std::to_string(c0);
  }
  return s;
}

RawOps make_zn(int n) {
  RawOps ops;
  ops.size = n;
  ops.add = [n](int a, int b) { return (a + b) % n; };
  ops.mul = [n](int a, int b) { return (a * b) % n; };
  int p = (n % 3 == 0) ? 3 : 2;
  ops.residue = [p](int a) { return uint8_t(a % p); };
  ops.literal = [](int a) { return std::to_string(a); };
  return ops;
}

// S_{q,m} = F_q[X]/(X^m): index = sum of digit_i * q^i
RawOps make_truncated(const FieldTable& f, int m) {
  int q = f.q;
  int size = 1;
  for (int i = 0; i < m; ++i) size *= q;
  RawOps ops;
  ops.size = size;
  auto digits = [q, m](int x) {
    std::array<int, 4> d{};
    for (int i = 0; i < m; ++i) {
      d[i] = x % q;
      x /= q;
    }
    return d;
  };
  ops.add = [=, &f](int a, int b) {
    auto da = digits(a), db = digits(b);
    int out = 0, pw = 1;
    for (int i = 0; i < m; ++i) {
      out += f.add[da[i]][db[i]] * pw;
      pw *= q;
    }
    return out;
  };
  ops.mul = [=, &f](int a, int b) {
    auto da = digits(a), db = digits(b);
    std::array<int, 4> dc{};
    for (int i = 0; i < m; ++i)
      for (int j = 0; i + j < m; ++j) dc[i + j] = f.add[dc[i + j]][f.mul[da[i]][db[j]]];
    int out = 0, pw = 1;
    for (int i = 0; i < m; ++i) {
      out += dc[i] * pw;
      pw *= q;
    }
    return out;
  };
  ops.residue = [q](int a) { return uint8_t(a % q); };
  ops.literal = [=, &f](int x) {
    auto d = digits(x);
    std::string s;
    for (int i = m - 1; i >= 1; --i) {
      if (d[i] == 0) continue;
      if (!s.empty()) s += "+";
      if (d[i] != 1) {
        std::string c = f.literal(d[i]);
        s += (c.find('+') != std::string::npos) ? "(" + c + ")" : c;
      }
      s += "X";
      if (i > 1) s += "^" + std::to_string(i);
    }
    if (d[0] != 0 || s.empty()) {
      if (!s.empty()) {
        std::string c = f.literal(d[0]);
        s += "+" + ((c.find('+') != std::string::npos) ? "(" + c + ")" : c);
      } else {
        s = f.literal(d[0]);
      }
    }
    return s;
  };
  return ops;
}

// Z4[X]/(X^2 - (e0 + e1 X)): index = a + 4b for a + bX
RawOps make_z4_quadratic(int e0, int e1, const char* sym) {
  RawOps ops;
  ops.size = 16;
  ops.add = [](int x, int y) {
    int a = (x % 4 + y % 4) % 4, b = (x / 4 + y / 4) % 4;
    return a + 4 * b;
  };
  ops.mul = [e0, e1](int x, int y) {
    int a = x % 4, b = x / 4, c = y % 4, d = y / 4;
    int con = (a * c + b * d % 4 * e0) % 4;
    int lin = (a * d + b * c + b * d % 4 * e1) % 4;
    return con + 4 * lin;
  };
  ops.residue = [](int x) { return uint8_t(x % 2); };  // overridden for G42
  ops.literal = [sym](int x) { return z4_poly_literal(x % 4, x / 4, 0, sym); };
  return ops;
}

// H8 = Z4[X]/(X^2+2, X^3): a + bX with a in Z4, b in Z2 (2X = 0); index a + 4b
RawOps make_h8() {
  RawOps ops;
  ops.size = 8;
  ops.add = [](int x, int y) { return (x % 4 + y % 4) % 4 + 4 * ((x / 4 + y / 4) % 2); };
  ops.mul = [](int x, int y) {
    int a = x % 4, b = x / 4, c = y % 4, d = y / 4;
    return (a * c + 2 * b * d) % 4 + 4 * ((a * d + b * c) % 2);
  };
  ops.residue = [](int x) { return uint8_t(x % 2); };
  ops.literal = [](int x) { return z4_poly_literal(x % 4, x / 4, 0, "X"); };
  return ops;
}

// K16 = Z4[X]/(X^3+2, X^4): a + bX + cX^2, a in Z4, b,c in Z2; index a + 4b + 8c
RawOps make_k16() {
  RawOps ops;
  ops.size = 16;
  ops.add = [](int x, int y) {
    return (x % 4 + y % 4) % 4 + 4 * (((x / 4) % 2 + (y / 4) % 2) % 2) + 8 * ((x / 8 + y / 8) % 2);
  };
  ops.mul = [](int x, int y) {
    int a = x % 4, b = (x / 4) % 2, c = x / 8;
    int d = y % 4, e = (y / 4) % 2, f = y / 8;
    int con = (a * d + 2 * (b * f + c * e)) % 4;  // X^3 = 2, X^4 = 0
    int lin = (a * e + b * d) % 2;
    int qua = (a * f + b * e + c * d) % 2;
    return con + 4 * lin + 8 * qua;
  };
  ops.residue = [](int x) { return uint8_t(x % 2); };
  ops.literal = [](int x) { return z4_poly_literal(x % 4, (x / 4) % 2, x / 8, "X"); };
  return ops;
}

// S42 / T4: c0 + c1 X over F_4, X^2 = 0; index c0 + 4c1.
// T4 is skew: X b = sigma(b) X with sigma the Frobenius b -> b^2.
RawOps make_f4_ext(const FieldTable& f4, bool skew) {
  RawOps ops;
  ops.size = 16;
  ops.add = [&f4](int x, int y) {
    return f4.add[x % 4][y % 4] + 4 * f4.add[x / 4][y / 4];
  };
  ops.mul = [&f4, skew](int x, int y) {
    int c0 = x % 4, c1 = x / 4, d0 = y % 4, d1 = y / 4;
    int d0s = skew ? f4.mul[d0][d0] : d0;  // sigma(d0) = d0^2
    // (c0 + c1 X)(d0 + d1 X) = c0 d0 + (c0 d1 + c1 sigma(d0)) X
    return f4.mul[c0][d0] + 4 * f4.add[f4.mul[c0][d1]][f4.mul[c1][d0s]];
  };
  ops.residue = [](int x) { return uint8_t(x % 4); };
  ops.literal = [&f4](int x) {
    int c0 = x % 4, c1 = x / 4;
    std::string s;
    if (c1 != 0) {
      if (c1 != 1) {
        std::string c = f4.literal(c1);
        s += (c.find('+') != std::string::npos) ? "(" + c + ")" : c;
      }
      s += "X";
    }
    if (c0 != 0 || s.empty()) {
      std::string c = f4.literal(c0);
      if (!s.empty())
        s += "+" + ((c.find('+') != std::string::npos) ? "(" + c + ")" : c);
      else
        s = c;
    }
    return s;
  };
  return ops;
}

// G42 = Z4[a]/(a^2+a+1), the Galois ring GR(16,4). Residue map reduces
// coefficients mod 2 onto F_4 = F_2[a]/(a^2+a+1).
RawOps make_g42() {
  RawOps ops = make_z4_quadratic(3, 3, "a");  // a^2 = 3 + 3a
  ops.residue = [](int x) { return uint8_t((x % 2) + 2 * ((x / 4) % 2)); };
  return ops;
}

}  // namespace

const std::vector<std::string>& ring_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& rp : kRings) v.emplace_back(rp.name);
    return v;
  }();
  return names;
}

RingSpec ring_spec(const std::string& name) {
  const auto& rp = params_for(name);
  return RingSpec{rp.name, rp.presentation, rp.skew};
}

RingTable build_ring(const std::string& name) {
  const auto& rp = params_for(name);
  RingTable R;
  R.spec = ring_spec(name);
  R.q = rp.q;
  R.m = rp.m;
  R.p = rp.p;
  R.r = rp.r;
  R.lambda = rp.lambda;
  R.field = make_field(rp.q);

  static FieldTable f4 = make_field(4);
  RawOps ops = [&]() -> RawOps {
    std::string n = name;
    if (n == "Z4") return make_zn(4);
    if (n == "Z8") return make_zn(8);
    if (n == "Z9") return make_zn(9);
    if (n == "Z16") return make_zn(16);
    if (n == "S22") return make_truncated(R.field, 2);
    if (n == "S23") return make_truncated(R.field, 3);
    if (n == "S24") return make_truncated(R.field, 4);
    if (n == "S32") return make_truncated(R.field, 2);
    if (n == "S42") return make_f4_ext(f4, false);
    if (n == "T4") return make_f4_ext(f4, true);
    if (n == "H8") return make_h8();
    if (n == "G42") return make_g42();
    if (n == "I16") return make_z4_quadratic(2, 0, "X");
    if (n == "J16") return make_z4_quadratic(2, 2, "X");
    if (n == "K16") return make_k16();
    fail("unhandled ring " + n);
  }();

  int s = ops.size;
  int expected = 1;
  for (int i = 0; i < R.m; ++i) expected *= R.q;
  check(s == expected, "size != q^m");
  R.size = s;

  R.add_t.resize(size_t(s) * s);
  R.mul_t.resize(size_t(s) * s);
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b) {
      R.add_t[size_t(a) * s + b] = Elt(ops.add(a, b));
      R.mul_t[size_t(a) * s + b] = Elt(ops.mul(a, b));
    }
  R.residue_t.resize(s);
  R.literals.resize(s);
  for (int a = 0; a < s; ++a) {
    R.residue_t[a] = ops.residue(a);
    R.literals[a] = ops.literal(a);
  }
  if (rp.skew) R.sigma_note = "X b = sigma(b) X with sigma(b) = b^2 (Frobenius of F_4)";

  // ---- exhaustive validation (|R| <= 16, so this is cheap) ----
  for (int a = 0; a < s; ++a) {
    check(R.add(0, a) == a && R.add(a, 0) == a, "additive identity");
    check(R.mul(1, a) == a && R.mul(a, 1) == a, "multiplicative identity");
    check(R.mul(0, a) == 0 && R.mul(a, 0) == 0, "zero annihilates");
  }
  R.neg_t.resize(s, kNoInverse);
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b)
      if (R.add(a, b) == 0) R.neg_t[a] = Elt(b);
  for (int a = 0; a < s; ++a) check(R.neg_t[a] != kNoInverse, "additive inverse exists");
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b) {
      check(R.add(a, b) == R.add(b, a), "addition commutes");
      for (int c = 0; c < s; ++c) {
        check(R.add(R.add(a, b), c) == R.add(a, R.add(b, c)), "addition associates");
        check(R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)), "multiplication associates");
        check(R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c)), "left distributivity");
        check(R.mul(R.add(a, b), c) == R.add(R.mul(a, c), R.mul(b, c)), "right distributivity");
      }
    }
  bool commutative = true;
  for (int a = 0; a < s && commutative; ++a)
    for (int b = 0; b < s; ++b)
      if (R.mul(a, b) != R.mul(b, a)) {
        commutative = false;
        break;
      }
  check(commutative == !rp.skew, "commutativity flag");

  // characteristic = additive order of 1 = p^lambda
  {
    int ord = 1;  // invariant: x == ord * 1
    Elt x = 1;
    while (x != 0) {
      x = R.add(x, 1);
      ++ord;
      check(ord <= s + 1, "characteristic runaway");
    }
    int pl = 1;
    for (int i = 0; i < R.lambda; ++i) pl *= R.p;
    check(ord == pl, "characteristic != p^lambda");
  }

  // units and inverses (in a finite ring a one-sided inverse is two-sided)
  R.unit_t.assign(s, 0);
  R.inv_t.assign(s, kNoInverse);
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b)
      if (R.mul(a, b) == 1) {
        check(R.mul(b, a) == 1, "one-sided inverse");
        R.unit_t[a] = 1;
        R.inv_t[a] = Elt(b);
      }
  int unitCount = 0, qm1 = s / R.q * (R.q - 1);
  for (int a = 0; a < s; ++a) unitCount += R.unit_t[a];
  check(unitCount == qm1, "unit count != q^m - q^{m-1}");

  // residue map: surjective ring map onto F_q, kernel = non-units
  for (int a = 0; a < s; ++a) {
    check(R.residue_t[a] < R.q, "residue range");
    check((R.residue_t[a] != 0) == (R.unit_t[a] != 0), "unit iff nonzero residue");
    for (int b = 0; b < s; ++b) {
      check(R.residue(R.add(a, b)) == R.field.add[R.residue(a)][R.residue(b)], "residue additive");
      check(R.residue(R.mul(a, b)) == R.field.mul[R.residue(a)][R.residue(b)], "residue multiplicative");
    }
  }
  check(R.residue(1) == 1, "residue of one");

  // radical generator theta: smallest non-unit with theta R = R theta = rad
  auto right_ideal = [&](Elt x) {
    std::set<Elt> v;
    for (int b = 0; b < s; ++b) v.insert(R.mul(x, Elt(b)));
    return v;
  };
  auto left_ideal = [&](Elt x) {
    std::set<Elt> v;
    for (int b = 0; b < s; ++b) v.insert(R.mul(Elt(b), x));
    return v;
  };
  int radSize = s / R.q;
  R.theta = kNoInverse;
  for (int a = 0; a < s; ++a) {
    if (R.unit_t[a]) continue;
    auto ri = right_ideal(Elt(a)), li = left_ideal(Elt(a));
    if (int(ri.size()) == radSize && ri == li) {
      R.theta = Elt(a);
      break;
    }
  }
  check(R.theta != kNoInverse, "no radical generator found");

  // radical filtration and valuations
  R.theta_pow_t.resize(R.m + 1);
  R.theta_pow_t[0] = 1;
  for (int i = 1; i <= R.m; ++i) R.theta_pow_t[i] = R.mul(R.theta_pow_t[i - 1], R.theta);
  check(R.theta_pow_t[R.m] == 0 && R.theta_pow_t[R.m - 1] != 0, "theta nilpotency index");
  R.val_t.assign(s, 0);
  int layer = s;
  for (int i = 0; i <= R.m; ++i) {
    auto ri = right_ideal(R.theta_pow_t[i]);
    auto li = left_ideal(R.theta_pow_t[i]);
    check(ri == li, "rad^i not two-sided");
    check(int(ri.size()) == (i == 0 ? s : layer), "rad^i size != q^{m-i}");
    for (Elt x : ri) R.val_t[x] = uint8_t(i);
    layer /= R.q;
    if (layer == 0) layer = 1;
  }
  check(R.val_t[0] == R.m, "valuation of zero");
  // chain condition: every nonzero x = eps * theta^i with eps a unit
  for (int x = 1; x < s; ++x) {
    int i = R.val_t[x];
    bool found = false;
    for (int e = 0; e < s && !found; ++e)
      if (R.unit_t[e] && R.mul(Elt(e), R.theta_pow_t[i]) == x) found = true;
    check(found, "chain condition: x != unit * theta^val");
  }

  // transversal gamma: {0} together with the powers of a Teichmueller unit
  {
    Elt xi = kNoInverse;
    for (int e = 0; e < s; ++e) {
      if (!R.unit_t[e]) continue;
      // e^(q-1) == 1 and residue(e) generates F_q^*
      Elt pw = 1;
      for (int i = 0; i < R.q - 1; ++i) pw = R.mul(pw, Elt(e));
      if (pw != 1) continue;
      int rres = R.residue(Elt(e)), ord = 1, cur = rres;
      while (cur != 1) {
        cur = R.field.mul[cur][rres];
        ++ord;
      }
      if (ord == R.q - 1) {
        xi = Elt(e);
        break;
      }
    }
    check(xi != kNoInverse, "no Teichmueller unit found");
    R.gamma.assign(R.q, 0);
    Elt cur = 1;
    for (int i = 0; i < R.q - 1; ++i) {
      R.gamma.at(R.residue(cur)) = cur;
      cur = R.mul(cur, xi);
    }
    check(cur == 1, "Teichmueller orbit closes");
    for (int j = 0; j < R.q; ++j) check(R.residue(R.gamma[j]) == j, "gamma indexed by residue");
  }

  // theta-adic digit table: sum gamma_i theta^i must hit every element once
  {
    R.digits_t.assign(s, {});
    std::vector<int> seen(s, 0);
    int tuples = 1;
    for (int i = 0; i < R.m; ++i) tuples *= R.q;
    for (int t = 0; t < tuples; ++t) {
      int tt = t;
      std::array<Elt, 4> dig{};
      Elt sum = 0;
      for (int i = 0; i < R.m; ++i) {
        dig[i] = R.gamma[tt % R.q];
        tt /= R.q;
        sum = R.add(sum, R.mul(dig[i], R.theta_pow_t[i]));
      }
      check(!seen[sum], "theta-adic expansion not injective");
      seen[sum] = 1;
      R.digits_t[sum] = dig;
    }
  }

  return R;
}

// ---- literal parsing -------------------------------------------------------

namespace {

struct Parser {
  const RingTable& R;
  std::string_view s;
  size_t i = 0;

  explicit Parser(const RingTable& r, std::string_view text) : R(r), s(text) {}

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void die(const std::string& msg) {
    fail("parse error in '" + std::string(s) + "' at " + std::to_string(i) + ": " + msg);
  }

  Elt gen_a() const {
    const std::string& n = R.spec.name;
    if (n == "S42" || n == "T4") return 2;   // constant a
    if (n == "S24" || n == "S22" || n == "S23") return kNoInverse;
    if (n == "G42") return 4;                // a itself, index 0 + 4*1
    return kNoInverse;
  }
  Elt gen_x() const {
    const std::string& n = R.spec.name;
    if (n == "Z4" || n == "Z8" || n == "Z9" || n == "Z16" || n == "G42") return kNoInverse;
    return Elt(n[0] == 'S' ? R.q : 4);  // S_{q,m}: digit 1 at X; others: packed index 4
  }

  Elt from_int(long v) {
    int chr = 1;
    for (int j = 0; j < R.lambda; ++j) chr *= R.p;
    long red = ((v % chr) + chr) % chr;
    Elt out = 0;
    for (long j = 0; j < red; ++j) out = R.add(out, 1);
    return out;
  }

  Elt parse_expr() {
    bool negate = false;
    skip();
    if (eat('-'))
      negate = true;
    else
      eat('+');
    Elt v = parse_term();
    if (negate) v = R.neg(v);
    for (;;) {
      skip();
      if (eat('+'))
        v = R.add(v, parse_term());
      else if (eat('-'))
        v = R.sub(v, parse_term());
      else
        break;
    }
    return v;
  }

  Elt parse_term() {
    Elt v = parse_factor();
    for (;;) {
      skip();
      if (i >= s.size()) break;
      char c = s[i];
      if (c == '^') {
        ++i;
        long e = parse_int();
        if (e < 0) die("negative exponent");
        Elt base = v;
        v = 1;
        for (long j = 0; j < e; ++j) v = R.mul(v, base);
      } else if (c == '*' || c == '(' || c == 'a' || c == 'X' || std::isdigit(static_cast<unsigned char>(c))) {
        if (c == '*') ++i;
        v = R.mul(v, parse_factor());
      } else {
        break;
      }
    }
    return v;
  }

  Elt parse_factor() {
    skip();
    if (i >= s.size()) die("unexpected end");
    char c = s[i];
    if (c == '(') {
      ++i;
      Elt v = parse_expr();
      if (!eat(')')) die("missing ')'");
      return v;
    }
    if (c == 'a') {
      ++i;
      Elt g = gen_a();
      if (g == kNoInverse) die("'a' is not a generator of this ring");
      return g;
    }
    if (c == 'X') {
      ++i;
      Elt g = gen_x();
      if (g == kNoInverse) die("'X' is not a generator of this ring");
      return g;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return from_int(parse_int());
    die("unexpected character");
  }

  long parse_int() {
    skip();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) die("expected integer");
    return std::stol(std::string(s.substr(start, i - start)));
  }
};

}  // namespace

Elt RingTable::parse(std::string_view text) const {
  Parser p(*this, text);
  Elt v = p.parse_expr();
  p.skip();
  if (p.i != text.size()) p.die("trailing input");
  return v;
}

std::string RingTable::dump_tables() const {
  std::ostringstream os;
  os << "ring " << spec.name << "\n";
  os << "presentation " << spec.presentation << "\n";
  os << "q " << q << " m " << m << " p " << p << " r " << r << " lambda " << lambda << "\n";
  os << "size " << size << "\n";
  os << "theta " << int(theta) << " (" << literal(theta) << ")\n";
  if (!sigma_note.empty()) os << "sigma " << sigma_note << "\n";
  os << "gamma";
  for (Elt g : gamma) os << " " << int(g) << ":" << literal(g);
  os << "\n";
  os << "elements\n";
  for (int a = 0; a < size; ++a)
    os << "  " << a << " " << literal(Elt(a)) << (unit(Elt(a)) ? " unit" : "")
       << " val " << valuation(Elt(a)) << " res " << int(residue(Elt(a))) << "\n";
  auto table = [&](const char* name, const std::vector<Elt>& t) {
    os << name << "\n";
    for (int a = 0; a < size; ++a) {
      os << " ";
      for (int b = 0; b < size; ++b) os << " " << int(t[size_t(a) * size + b]);
      os << "\n";
    }
  };
  table("add", add_t);
  table("mul", mul_t);
  return os.str();
}

}  // namespace hjarcs

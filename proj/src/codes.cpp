#include "hjarcs/codes.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "hjarcs/util.hpp"

namespace hjarcs {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error("codes: " + msg); }

}  // namespace

int hom_weight(const RingTable& R, Elt x) {
  if (x == 0) return 0;
  return R.in_socle(x) ? R.q : R.q - 1;
}

int hom_distance(const RingTable& R, const std::vector<Elt>& a, const std::vector<Elt>& b) {
  if (a.size() != b.size()) fail("length mismatch");
  int d = 0;
  for (size_t i = 0; i < a.size(); ++i) d += hom_weight(R, R.sub(a[i], b[i]));
  return d;
}

std::vector<uint8_t> gray_map(const RingTable& R, Elt x) {
  int q = R.q, m = R.m;
  int len = 1;
  for (int i = 0; i < m - 1; ++i) len *= q;
  auto digits = R.theta_adic(x);
  std::array<uint8_t, 4> res{};
  for (int i = 0; i < m; ++i) res[i] = R.residue(digits[i]);
  std::vector<uint8_t> out(len);
  const FieldTable& F = R.field;
  // c runs lexicographically over F_q^{m-1}, leftmost coordinate most significant
  std::array<uint8_t, 4> c{};
  for (int idx = 0; idx < len; ++idx) {
    uint8_t v = res[m - 1];
    for (int i = 1; i <= m - 1; ++i) v = F.add[v][F.mul[c[i - 1]][res[i - 1]]];
    out[idx] = v;
    for (int i = m - 2; i >= 0; --i) {  // odometer, rightmost fastest
      if (++c[i] < q) break;
      c[i] = 0;
    }
  }
  return out;
}

GeneratorMatrix generator_matrix(const Arc& arc) {
  const Geometry& G = *arc.geom;
  GeneratorMatrix gm;
  gm.k = G.k();
  gm.n = arc.n;
  gm.rows.assign(G.k() + 1, {});
  for (auto& row : gm.rows) row.reserve(arc.n);
  for (int p = 0; p < G.num_points(); ++p)
    for (int c = 0; c < arc.mult[p]; ++c)
      for (int i = 0; i <= G.k(); ++i) gm.rows[i].push_back(G.points()[p].coords[i]);
  return gm;
}

CodeReport code_report(const Arc& arc) {
  const Geometry& G = *arc.geom;
  const RingTable& R = G.ring();
  const FieldTable& F = R.field;
  int k = G.k(), n = arc.n, q = R.q, m = R.m;
  if (n == 0) fail("empty arc has no code");
  GeneratorMatrix gm = generator_matrix(arc);

  CodeReport rep;
  rep.n = n;
  rep.degenerate = is_degenerate(arc);
  rep.gray_q = q;
  int symlen = 1;
  for (int i = 0; i < m - 1; ++i) symlen *= q;
  rep.gray_length = n * symlen;

  // Gray images of the ring elements, precomputed per symbol.
  std::vector<std::vector<uint8_t>> psi(R.size);
  for (int x = 0; x < R.size; ++x) psi[x] = gray_map(R, Elt(x));

  int64_t messages = 1;
  for (int i = 0; i <= k; ++i) messages *= R.size;

  std::unordered_set<std::string> seen;
  std::vector<Elt> word(n);
  std::vector<uint8_t> gray(rep.gray_length);
  std::vector<std::vector<uint8_t>> basis;  // row-reduced, for F_q-linearity
  std::vector<int> pivots;

  int64_t minHom = -1, minGray = -1;
  std::vector<Elt> msg(k + 1, 0);
  for (int64_t t = 0; t < messages; ++t) {
    for (int j = 0; j < n; ++j) {
      Elt acc = 0;
      for (int i = 0; i <= k; ++i) acc = R.add(acc, R.mul(msg[i], gm.rows[i][j]));
      word[j] = acc;
    }
    // odometer over messages
    for (int i = 0; i <= k; ++i) {
      if (++msg[i] < R.size) break;
      msg[i] = 0;
    }
    if (!seen.insert(std::string(word.begin(), word.end())).second) {
      rep.injective = false;
      continue;
    }
    int64_t whom = 0;
    for (int j = 0; j < n; ++j) whom += hom_weight(R, word[j]);
    for (int j = 0; j < n; ++j)
      std::copy(psi[word[j]].begin(), psi[word[j]].end(), gray.begin() + size_t(j) * symlen);
    int64_t wgray = 0;
    for (uint8_t g : gray)
      if (g) ++wgray;
    rep.weight_enumerator[wgray]++;
    if (wgray > 0) {
      if (minGray < 0 || wgray < minGray) minGray = wgray;
      if (minHom < 0 || whom < minHom) minHom = whom;
    }
    // incremental row reduction of the Gray image over F_q
    std::vector<uint8_t> v = gray;
    for (size_t bi = 0; bi < basis.size(); ++bi) {
      uint8_t c = v[pivots[bi]];
      if (!c) continue;
      for (int j = 0; j < rep.gray_length; ++j) v[j] = F.add[v[j]][F.neg[F.mul[c][basis[bi][j]]]];
    }
    int pc = -1;
    for (int j = 0; j < rep.gray_length; ++j)
      if (v[j]) {
        pc = j;
        break;
      }
    if (pc >= 0) {
      uint8_t inv = F.inv[v[pc]];
      for (int j = 0; j < rep.gray_length; ++j) v[j] = F.mul[inv][v[j]];
      basis.push_back(std::move(v));
      pivots.push_back(pc);
    }
  }

  rep.cardinality = int64_t(seen.size());
  rep.d_hom = minHom < 0 ? 0 : minHom;
  rep.gray_min_hamming = minGray < 0 ? 0 : minGray;
  // |C| = q^dim exactly when the Gray image is linear
  int64_t span = 1;
  for (size_t i = 0; i < basis.size(); ++i) span *= q;
  rep.gray_linear = (span == rep.cardinality);
  int64_t pw = 1;
  int dim = 0;
  while (pw < rep.cardinality) {
    pw *= q;
    ++dim;
  }
  rep.gray_dimension = (pw == rep.cardinality) ? dim : -1;
  return rep;
}

// ---------------------------------------------------------------------------
// Arc files.

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

std::string arc_file_ring_name(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    line = trim(line);
    if (line.rfind("ring=", 0) == 0) return trim(line.substr(5));
  }
  fail("arc file has no ring= header");
}

ArcFile parse_arc_file(const std::string& text, const RingTable& R) {
  ArcFile out;
  out.k = -1;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("ring=", 0) == 0) {
      out.ring = trim(line.substr(5));
      continue;
    }
    if (line.rfind("dim=", 0) == 0) {
      out.k = std::stoi(trim(line.substr(4)));
      continue;
    }
    if (line[0] != '(') fail("line " + std::to_string(lineno) + ": expected a point");
    size_t close = line.find(')');
    if (close == std::string::npos) fail("line " + std::to_string(lineno) + ": missing ')'");
    if (out.k < 0) fail("dim= header must precede points");
    std::string body = line.substr(1, close - 1);
    std::vector<std::string> parts;
    size_t start = 0;
    int depth = 0;
    for (size_t i = 0; i <= body.size(); ++i) {
      if (i == body.size() || (body[i] == ':' && depth == 0)) {
        parts.push_back(body.substr(start, i - start));
        start = i + 1;
      } else if (body[i] == '(') {
        ++depth;
      } else if (body[i] == ')') {
        --depth;
      }
    }
    if (int(parts.size()) != out.k + 1)
      fail("line " + std::to_string(lineno) + ": expected " + std::to_string(out.k + 1) + " coordinates");
    Coords raw{};
    for (int i = 0; i <= out.k; ++i) raw[i] = R.parse(parts[i]);
    auto norm = normalize_point(R, out.k, raw);
    if (!norm) fail("line " + std::to_string(lineno) + ": no unit coordinate");
    int mult = 1;
    std::string tail = trim(line.substr(close + 1));
    if (!tail.empty()) {
      if (tail.rfind("mult=", 0) != 0) fail("line " + std::to_string(lineno) + ": unexpected trailer");
      mult = std::stoi(tail.substr(5));
      if (mult < 1) fail("line " + std::to_string(lineno) + ": multiplicity must be positive");
    }
    out.points.emplace_back(*norm, mult);
  }
  if (out.ring.empty()) fail("arc file has no ring= header");
  if (out.ring != R.spec.name) fail("arc file ring " + out.ring + " does not match " + R.spec.name);
  if (out.k < 0) fail("arc file has no dim= header");
  if (out.points.empty()) fail("arc file has no points");
  return out;
}

Arc arc_from_file(const ArcFile& file, const Geometry& geom) {
  if (file.k != geom.k()) fail("arc file dimension mismatch");
  Arc arc(geom);
  for (const auto& [coords, mult] : file.points) {
    auto id = geom.point_id(coords);
    if (!id) fail("arc point is not a point of the geometry");
    for (int c = 0; c < mult; ++c) arc.add(*id);
  }
  return arc;
}

std::string write_arc_file(const Arc& arc) {
  const Geometry& G = *arc.geom;
  const RingTable& R = G.ring();
  std::ostringstream os;
  os << "ring=" << R.spec.name << "\n";
  os << "dim=" << G.k() << "\n";
  for (int p = 0; p < G.num_points(); ++p) {
    if (!arc.mult[p]) continue;
    os << "(";
    for (int i = 0; i <= G.k(); ++i) {
      if (i) os << ":";
      os << R.literal(G.points()[p].coords[i]);
    }
    os << ")";
    if (arc.mult[p] > 1) os << " mult=" << int(arc.mult[p]);
    os << "\n";
  }
  return os.str();
}

}  // namespace hjarcs

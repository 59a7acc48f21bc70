#include "hjarcs/geometry.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hjarcs {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error("geometry: " + msg); }

}  // namespace

std::optional<Coords> normalize_point(const RingTable& R, int k, const Coords& raw) {
  int j = -1;
  for (int i = 0; i <= k; ++i)
    if (R.unit(raw[i])) {
      j = i;
      break;
    }
  if (j < 0) return std::nullopt;
  Elt s = R.inv(raw[j]);
  Coords out{};
  for (int i = 0; i <= k; ++i) out[i] = R.mul(raw[i], s);
  return out;
}

std::optional<Coords> normalize_hyperplane(const RingTable& R, int k, const Coords& raw) {
  int j = -1;
  for (int i = 0; i <= k; ++i)
    if (R.unit(raw[i])) {
      j = i;
      break;
    }
  if (j < 0) return std::nullopt;
  Elt s = R.inv(raw[j]);
  Coords out{};
  for (int i = 0; i <= k; ++i) out[i] = R.mul(s, raw[i]);
  return out;
}

bool incident(const RingTable& R, int k, const Coords& coeffs, const Coords& point) {
  Elt sum = 0;
  for (int i = 0; i <= k; ++i) sum = R.add(sum, R.mul(coeffs[i], point[i]));
  return sum == 0;
}

std::vector<Coords> enumerate_pg_points(const FieldTable& f, int k) {
  std::vector<Coords> out;
  // first nonzero coordinate equal to 1: leading zeros, a 1, then anything
  for (int j = k; j >= 0; --j) {
    // j = position of the leading 1 counted from the left; enumerate tails
    int tail = k - j;
    int total = 1;
    for (int i = 0; i < tail; ++i) total *= f.q;
    for (int t = 0; t < total; ++t) {
      Coords c{};
      c[j] = 1;
      int tt = t;
      for (int i = j + 1; i <= k; ++i) {
        c[i] = Elt(tt % f.q);
        tt /= f.q;
      }
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Geometry Geometry::build(std::shared_ptr<const RingTable> ring, int k) {
  if (k < 1 || k > 4) fail("dimension k must be in 1..4");
  const RingTable& R = *ring;
  Geometry g;
  g.ring_ = std::move(ring);
  g.k_ = k;

  // Normal forms directly: position j of the earliest unit gets coordinate 1,
  // positions before j hold non-units, positions after j are free.
  std::vector<Elt> nonunits;
  for (int a = 0; a < R.size; ++a)
    if (!R.unit(Elt(a))) nonunits.push_back(Elt(a));

  std::vector<Coords> reps;
  for (int j = 0; j <= k; ++j) {
    size_t pre = 1, post = 1;
    for (int i = 0; i < j; ++i) pre *= nonunits.size();
    for (int i = j + 1; i <= k; ++i) post *= size_t(R.size);
    for (size_t pa = 0; pa < pre; ++pa) {
      Coords base{};
      size_t t = pa;
      for (int i = 0; i < j; ++i) {
        base[i] = nonunits[t % nonunits.size()];
        t /= nonunits.size();
      }
      base[j] = 1;
      for (size_t pb = 0; pb < post; ++pb) {
        Coords c = base;
        size_t u = pb;
        for (int i = j + 1; i <= k; ++i) {
          c[i] = Elt(u % R.size);
          u /= size_t(R.size);
        }
        reps.push_back(c);
      }
    }
  }
  std::sort(reps.begin(), reps.end());
  g.points_.resize(reps.size());
  for (size_t i = 0; i < reps.size(); ++i) g.points_[i] = PointRep{reps[i], int32_t(i)};
  // hyperplane normal forms have the same shape (left scaling)
  g.hyperplanes_.resize(reps.size());
  for (size_t i = 0; i < reps.size(); ++i) g.hyperplanes_[i] = HyperplaneRep{reps[i], int32_t(i)};

  int P = int(g.points_.size());
  g.words_ = (P + 63) / 64;
  g.inc_.assign(size_t(P) * g.words_, 0);
  for (int pi = 0; pi < P; ++pi) {
    const Coords& x = g.points_[pi].coords;
    uint64_t* row = g.inc_.data() + size_t(pi) * g.words_;
    for (int h = 0; h < P; ++h)
      if (incident(R, k, g.hyperplanes_[h].coeffs, x)) row[h >> 6] |= 1ull << (h & 63);
  }
  g.finish_from_incidence();
  return g;
}

void Geometry::finish_from_incidence() {
  const RingTable& R = *ring_;
  int P = num_points(), H = num_hyperplanes();
  hyps_of_point_.assign(P, {});
  points_of_hyp_.assign(H, {});
  for (int p = 0; p < P; ++p)
    for (int h = 0; h < H; ++h)
      if (incidence_bit(p, h)) {
        hyps_of_point_[p].push_back(h);
        points_of_hyp_[h].push_back(p);
      }
  size_t per_point = hyps_of_point_.empty() ? 0 : hyps_of_point_[0].size();
  for (const auto& v : hyps_of_point_)
    if (v.size() != per_point) fail("points not on equally many hyperplanes");

  pg_points_ = enumerate_pg_points(R.field, k_);
  std::map<Coords, int> pg_index;
  for (size_t i = 0; i < pg_points_.size(); ++i) pg_index[pg_points_[i]] = int(i);
  auto residue_class = [&](const Coords& c) {
    Coords res{};
    for (int i = 0; i <= k_; ++i) res[i] = R.residue(c[i]);
    auto it = pg_index.find(res);
    if (it == pg_index.end()) fail("residue vector is not a normalized PG point");
    return it->second;
  };
  class_of_point_.resize(P);
  for (int p = 0; p < P; ++p) class_of_point_[p] = residue_class(points_[p].coords);
  class_of_hyp_.resize(H);
  for (int h = 0; h < H; ++h) class_of_hyp_[h] = residue_class(hyperplanes_[h].coeffs);
  num_classes_ = int(pg_points_.size());

  int NV = P + H;
  graph_words_ = (NV + 63) / 64;
  auto adj = std::make_shared<std::vector<uint64_t>>(size_t(NV) * graph_words_, 0);
  for (int p = 0; p < P; ++p)
    for (int32_t h : hyps_of_point_[p]) {
      int v = P + h;
      (*adj)[size_t(p) * graph_words_ + (v >> 6)] |= 1ull << (v & 63);
      (*adj)[size_t(v) * graph_words_ + (p >> 6)] |= 1ull << (p & 63);
    }
  graph_adj_ = std::move(adj);
}

std::optional<int> Geometry::point_id(const Coords& normalized) const {
  auto cmp = [](const PointRep& a, const Coords& c) { return a.coords < c; };
  auto it = std::lower_bound(points_.begin(), points_.end(), normalized, cmp);
  if (it == points_.end() || it->coords != normalized) return std::nullopt;
  return it->id;
}

std::optional<int> Geometry::hyp_id(const Coords& normalized) const {
  auto cmp = [](const HyperplaneRep& a, const Coords& c) { return a.coeffs < c; };
  auto it = std::lower_bound(hyperplanes_.begin(), hyperplanes_.end(), normalized, cmp);
  if (it == hyperplanes_.end() || it->coeffs != normalized) return std::nullopt;
  return it->id;
}

std::string Geometry::summary() const {
  std::ostringstream os;
  os << "PHG(" << k_ << "," << ring_->spec.name << ")\n";
  os << "points " << num_points() << "\n";
  os << "hyperplanes " << num_hyperplanes() << "\n";
  os << "points per hyperplane " << points_of_hyp_[0].size() << "\n";
  os << "hyperplanes per point " << hyps_of_point_[0].size() << "\n";
  os << "neighbour classes " << num_classes_ << " of size " << num_points() / num_classes_ << "\n";
  return os.str();
}

namespace {

constexpr char kCacheMagic[4] = {'H', 'J', 'G', 'C'};
constexpr uint32_t kCacheVersion = 1;

template <typename T>
void put(std::ostream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}
template <typename T>
void get(std::istream& is, T& v) {
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
}

}  // namespace

void Geometry::save_cache(const std::string& path) const {
  std::ofstream os(path, std::ios::binary);
  if (!os) fail("cannot open cache file for writing: " + path);
  os.write(kCacheMagic, 4);
  put(os, kCacheVersion);
  uint32_t nameLen = uint32_t(ring_->spec.name.size());
  put(os, nameLen);
  os.write(ring_->spec.name.data(), nameLen);
  put(os, int32_t(k_));
  put(os, int32_t(num_points()));
  for (const auto& p : points_) os.write(reinterpret_cast<const char*>(p.coords.data()), 5);
  for (const auto& h : hyperplanes_) os.write(reinterpret_cast<const char*>(h.coeffs.data()), 5);
  os.write(reinterpret_cast<const char*>(inc_.data()), std::streamsize(inc_.size() * 8));
  if (!os) fail("cache write failed: " + path);
}

Geometry Geometry::load_cache(const std::string& path, std::shared_ptr<const RingTable> ring) {
  std::ifstream is(path, std::ios::binary);
  if (!is) fail("cannot open cache file: " + path);
  char magic[4];
  is.read(magic, 4);
  if (std::memcmp(magic, kCacheMagic, 4) != 0) fail("bad cache magic");
  uint32_t version = 0;
  get(is, version);
  if (version != kCacheVersion) fail("unsupported cache version");
  uint32_t nameLen = 0;
  get(is, nameLen);
  std::string name(nameLen, '\0');
  is.read(name.data(), nameLen);
  if (name != ring->spec.name) fail("cache ring '" + name + "' does not match requested ring");
  int32_t k = 0, P = 0;
  get(is, k);
  get(is, P);
  Geometry g;
  g.ring_ = std::move(ring);
  g.k_ = k;
  g.points_.resize(P);
  g.hyperplanes_.resize(P);
  for (int i = 0; i < P; ++i) {
    is.read(reinterpret_cast<char*>(g.points_[i].coords.data()), 5);
    g.points_[i].id = i;
  }
  for (int i = 0; i < P; ++i) {
    is.read(reinterpret_cast<char*>(g.hyperplanes_[i].coeffs.data()), 5);
    g.hyperplanes_[i].id = i;
  }
  g.words_ = (P + 63) / 64;
  g.inc_.resize(size_t(P) * g.words_);
  is.read(reinterpret_cast<char*>(g.inc_.data()), std::streamsize(g.inc_.size() * 8));
  if (!is) fail("cache truncated: " + path);
  g.finish_from_incidence();
  return g;
}

}  // namespace hjarcs

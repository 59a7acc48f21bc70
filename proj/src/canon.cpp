#include "hjarcs/canon.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "hjarcs/util.hpp"

namespace hjarcs {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error("canon: " + msg); }

}  // namespace

ColoredGraph ColoredGraph::create(int n) {
  ColoredGraph g;
  g.n = n;
  g.words = (n + 63) / 64;
  g.adj = std::make_shared<std::vector<uint64_t>>(size_t(n) * g.words, 0);
  g.color.assign(n, 0);
  return g;
}

ColoredGraph ColoredGraph::with_colors(std::vector<int32_t> colors) const {
  if (int(colors.size()) != n) fail("color vector size mismatch");
  ColoredGraph g = *this;
  g.color = std::move(colors);
  return g;
}

void ColoredGraph::add_edge(int u, int v) {
  if (u == v) fail("self-loops not supported");
  auto& a = const_cast<std::vector<uint64_t>&>(*adj);
  a[size_t(u) * words + (v >> 6)] |= 1ull << (v & 63);
  a[size_t(v) * words + (u >> 6)] |= 1ull << (u & 63);
}

// ---------------------------------------------------------------------------
// Equitable refinement + individualization search (McKay style).

namespace {

class Canonizer {
 public:
  explicit Canonizer(const ColoredGraph& g) : g_(g), n_(g.n), W_(g.words) {
    for (int v = 0; v < n_; ++v)
      if (g_.color[v] < 0 || g_.color[v] > 65535) fail("colors must fit in two bytes");
    setw_.assign(W_, 0);
    cnt_.assign(n_, 0);
    queue_.reserve(size_t(n_));
    inQueue_.assign(n_, 0);
    frames_.resize(size_t(n_) + 2);  // depth bound; inner vectors allocate lazily
    root_init();
  }

  // Root partition: vertices sorted by color, cells glued per color.
  void root_init() {
    Frame& f = frames_[0];
    f.lab.resize(n_);
    f.ptn.assign(n_, 0);
    std::iota(f.lab.begin(), f.lab.end(), 0);
    std::stable_sort(f.lab.begin(), f.lab.end(),
                     [&](int a, int b) { return g_.color[a] < g_.color[b]; });
    f.cells = 0;
    for (int i = 0; i < n_; ++i) {
      bool last = (i == n_ - 1) || g_.color[f.lab[i]] != g_.color[f.lab[i + 1]];
      f.ptn[i] = last ? 0 : 1;
      if (last) f.cells++;
    }
    queue_.clear();
    std::fill(inQueue_.begin(), inQueue_.end(), 0);
    qhead_ = 0;
    for (int i = 0; i < n_; ++i)
      if (i == 0 || f.ptn[i - 1] == 0) enqueue(i);
    refine(f);
  }

  std::vector<std::vector<int32_t>> refined_root_cells() {
    Frame& f = frames_[0];
    std::vector<std::vector<int32_t>> out;
    for (int cs = 0; cs < n_;) {
      int ce = cell_end(f, cs);
      out.emplace_back(f.lab.begin() + cs, f.lab.begin() + ce + 1);
      std::sort(out.back().begin(), out.back().end());
      cs = ce + 1;
    }
    return out;
  }

  CanonResult run() {
    if (n_ == 0) {
      CanonResult r;
      r.aut_order = BigUInt(1);
      return r;
    }
    recurse(0);
    CanonResult r;
    r.form = std::move(bestCert_);
    r.labeling.assign(n_, 0);
    for (int i = 0; i < n_; ++i) r.labeling[bestLab_[i]] = i;
    r.generators = std::move(gens_);
    r.aut_order = permutation_group_order(n_, r.generators);
    return r;
  }

 private:
  struct Frame {
    std::vector<int32_t> lab;
    std::vector<uint8_t> ptn;  // ptn[i] = 1 iff positions i and i+1 share a cell
    int cells = 0;
  };

  const ColoredGraph& g_;
  int n_, W_;
  std::vector<Frame> frames_;
  std::vector<uint64_t> setw_;
  std::vector<int32_t> cnt_;
  std::vector<int32_t> queue_;
  size_t qhead_ = 0;
  std::vector<uint8_t> inQueue_;

  std::vector<uint8_t> bestCert_, firstCert_;
  std::vector<int32_t> bestLab_, firstLab_;
  bool haveFirst_ = false;

  std::vector<std::vector<int32_t>> gens_;
  uint64_t gensVersion_ = 0;
  std::vector<int32_t> path_;

  void enqueue(int start) {
    if (!inQueue_[start]) {
      inQueue_[start] = 1;
      queue_.push_back(start);
    }
  }

  int cell_end(const Frame& f, int cs) const {
    int ce = cs;
    while (f.ptn[ce]) ++ce;
    return ce;
  }

  int popcnt_and(const uint64_t* row) const {
    int c = 0;
    for (int w = 0; w < W_; ++w) c += std::popcount(row[w] & setw_[w]);
    return c;
  }

  void refine(Frame& f) {
    while (qhead_ < queue_.size()) {
      if (f.cells == n_) break;
      int ws = queue_[qhead_++];
      inQueue_[ws] = 0;
      int we = cell_end(f, ws);
      std::fill(setw_.begin(), setw_.end(), 0);
      for (int i = ws; i <= we; ++i) {
        int v = f.lab[i];
        setw_[v >> 6] |= 1ull << (v & 63);
      }
      for (int cs = 0; cs < n_;) {
        int ce = cell_end(f, cs);
        if (ce > cs) split_cell(f, cs, ce);
        cs = ce + 1;
      }
    }
    // drain stale queue entries
    queue_.clear();
    qhead_ = 0;
    std::fill(inQueue_.begin(), inQueue_.end(), 0);
  }

  void split_cell(Frame& f, int cs, int ce) {
    int minc = INT32_MAX, maxc = INT32_MIN;
    for (int i = cs; i <= ce; ++i) {
      cnt_[i] = popcnt_and(g_.row(f.lab[i]));
      minc = std::min(minc, cnt_[i]);
      maxc = std::max(maxc, cnt_[i]);
    }
    if (minc == maxc) return;
    // stable counting sort of lab[cs..ce] by count
    int range = maxc - minc + 1;
    static thread_local std::vector<int32_t> bucket, tmpLab, tmpCnt;
    bucket.assign(range + 1, 0);
    for (int i = cs; i <= ce; ++i) bucket[cnt_[i] - minc + 1]++;
    for (int b = 1; b <= range; ++b) bucket[b] += bucket[b - 1];
    int len = ce - cs + 1;
    tmpLab.resize(len);
    tmpCnt.resize(len);
    for (int i = cs; i <= ce; ++i) {
      int pos = bucket[cnt_[i] - minc]++;
      tmpLab[pos] = f.lab[i];
      tmpCnt[pos] = cnt_[i];
    }
    bool wasQueued = inQueue_[cs] != 0;
    int fragments = 0, largestStart = -1, largestLen = 0, fragStart = cs;
    for (int i = 0; i < len; ++i) {
      f.lab[cs + i] = tmpLab[i];
      bool boundary = (i == len - 1) || tmpCnt[i] != tmpCnt[i + 1];
      f.ptn[cs + i] = boundary ? 0 : 1;
      if (boundary) {
        ++fragments;
        int flen = cs + i - fragStart + 1;
        if (flen > largestLen) {
          largestLen = flen;
          largestStart = fragStart;
        }
        fragStart = cs + i + 1;
      }
    }
    f.cells += fragments - 1;
    // queue bookkeeping: a queued cell is replaced by all its fragments; an
    // unqueued cell enqueues all fragments but one largest
    fragStart = cs;
    for (int i = 0; i < len; ++i) {
      if (f.ptn[cs + i] == 0) {
        if (wasQueued) {
          if (fragStart != cs) enqueue(fragStart);  // cs keeps its queue slot
        } else if (fragStart != largestStart) {
          enqueue(fragStart);
        }
        fragStart = cs + i + 1;
      }
    }
  }

  int target_cell(const Frame& f) const {
    int best = -1, bestLen = 1;
    for (int cs = 0; cs < n_;) {
      int ce = cell_end(f, cs);
      if (ce - cs + 1 > bestLen) {
        bestLen = ce - cs + 1;
        best = cs;
      }
      cs = ce + 1;
    }
    return best;  // -1 when discrete
  }

  void make_cert(const Frame& f, std::vector<uint8_t>& out) const {
    size_t bits = size_t(n_) * (n_ - 1) / 2;
    out.assign(2 * size_t(n_) + (bits + 7) / 8, 0);
    for (int i = 0; i < n_; ++i) {
      out[2 * i] = uint8_t(g_.color[f.lab[i]] >> 8);
      out[2 * i + 1] = uint8_t(g_.color[f.lab[i]] & 0xff);
    }
    size_t cursor = 2 * size_t(n_) * 8;
    for (int i = 0; i < n_; ++i) {
      const uint64_t* row = g_.row(f.lab[i]);
      for (int j = i + 1; j < n_; ++j, ++cursor) {
        int v = f.lab[j];
        if ((row[v >> 6] >> (v & 63)) & 1) out[cursor >> 3] |= uint8_t(1u << (cursor & 7));
      }
    }
  }

  void add_automorphism(const std::vector<int32_t>& refLab, const std::vector<int32_t>& lab) {
    bool identity = true;
    std::vector<int32_t> g(n_);
    for (int i = 0; i < n_; ++i) {
      g[refLab[i]] = lab[i];
      if (refLab[i] != lab[i]) identity = false;
    }
    if (identity) return;
    gens_.push_back(std::move(g));
    ++gensVersion_;
  }

  void handle_leaf(const Frame& f) {
    static thread_local std::vector<uint8_t> cert;
    make_cert(f, cert);
    if (!haveFirst_) {
      haveFirst_ = true;
      firstCert_ = cert;
      firstLab_ = f.lab;
      bestCert_ = cert;
      bestLab_ = f.lab;
      return;
    }
    if (cert == firstCert_)
      add_automorphism(firstLab_, f.lab);
    else if (cert == bestCert_)
      add_automorphism(bestLab_, f.lab);
    if (cert < bestCert_) {
      bestCert_ = cert;
      bestLab_ = f.lab;
    }
  }

  // union-find over the generators that fix the current path pointwise
  void build_prefix_uf(UnionFind& uf) const {
    for (const auto& g : gens_) {
      bool fixes = true;
      for (int v : path_)
        if (g[v] != v) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v)
        if (g[v] != v) uf.unite(v, g[v]);
    }
  }

  void recurse(int level) {
    Frame& f = frames_[level];
    int tc = target_cell(f);
    if (tc < 0) {
      handle_leaf(f);
      return;
    }
    int te = cell_end(f, tc);
    std::vector<int32_t> verts(f.lab.begin() + tc, f.lab.begin() + te + 1);
    std::sort(verts.begin(), verts.end());

    UnionFind uf(n_);
    build_prefix_uf(uf);
    uint64_t ufVersion = gensVersion_;
    std::vector<int32_t> processed;

    for (int32_t v : verts) {
      if (ufVersion != gensVersion_) {
        uf = UnionFind(n_);
        build_prefix_uf(uf);
        ufVersion = gensVersion_;
      }
      bool skip = false;
      for (int32_t w : processed)
        if (uf.same(v, w)) {
          skip = true;
          break;
        }
      if (skip) continue;
      processed.push_back(v);

      Frame& child = frames_[level + 1];
      child = f;
      // individualize v: move it to the front of the target cell
      int pos = tc;
      while (child.lab[pos] != v) ++pos;
      std::swap(child.lab[tc], child.lab[pos]);
      child.ptn[tc] = 0;
      child.cells++;
      queue_.clear();
      qhead_ = 0;
      std::fill(inQueue_.begin(), inQueue_.end(), 0);
      enqueue(tc);
      refine(child);
      path_.push_back(v);
      recurse(level + 1);
      path_.pop_back();
    }
  }
};

}  // namespace

std::vector<std::vector<int32_t>> refine_partition(const ColoredGraph& g,
                                                   const std::vector<std::vector<int32_t>>& partition) {
  // Run the same engine on a recolored copy: cell index becomes the color,
  // so the root partition of the engine is exactly `partition`.
  std::vector<int32_t> colors(g.n, -1);
  int idx = 0;
  for (const auto& cell : partition) {
    for (int32_t v : cell) {
      if (v < 0 || v >= g.n || colors[v] != -1) fail("refine: not a partition");
      colors[v] = idx;
    }
    ++idx;
  }
  for (int v = 0; v < g.n; ++v)
    if (colors[v] == -1) fail("refine: partition does not cover all vertices");
  ColoredGraph h = g.with_colors(std::move(colors));
  Canonizer c(h);
  auto cells = c.refined_root_cells();
  return cells;
}

CanonResult canonical_form(const ColoredGraph& g) {
  Canonizer c(g);
  return c.run();
}

std::vector<std::vector<int32_t>> automorphism_orbits(const ColoredGraph& g) {
  CanonResult r = canonical_form(g);
  UnionFind uf(g.n);
  for (const auto& gen : r.generators)
    for (int v = 0; v < g.n; ++v)
      if (gen[v] != v) uf.unite(v, gen[v]);
  std::vector<std::vector<int32_t>> orbits;
  std::vector<int32_t> orbitOf(g.n, -1);
  for (int v = 0; v < g.n; ++v) {
    int root = uf.find(v);
    if (orbitOf[root] < 0) {
      orbitOf[root] = int(orbits.size());
      orbits.emplace_back();
    }
    orbits[orbitOf[root]].push_back(v);
  }
  return orbits;
}

std::vector<int32_t> first_refined_cell_with(const ColoredGraph& g, bool (*pred)(int32_t, void*), void* ctx) {
  Canonizer c(g);
  for (auto& cell : c.refined_root_cells())
    if (pred(g.color[cell[0]], ctx)) return cell;
  return {};
}

// ---------------------------------------------------------------------------
// Deterministic Schreier-Sims orbit-stabilizer chain.

namespace {

bool is_identity_perm(const std::vector<int32_t>& g) {
  for (size_t i = 0; i < g.size(); ++i)
    if (g[i] != int32_t(i)) return false;
  return true;
}

std::vector<int32_t> compose_perm(const std::vector<int32_t>& a, const std::vector<int32_t>& b) {
  std::vector<int32_t> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

std::vector<int32_t> inverse_perm(const std::vector<int32_t>& a) {
  std::vector<int32_t> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[a[i]] = int32_t(i);
  return out;
}

// A strong generator assigned to level l fixes the bases of levels 0..l-1,
// so it participates in the orbit computation of every level j <= l. Orbits
// at level j therefore close under all generators of level >= j.
class SchreierSims {
 public:
  explicit SchreierSims(int n) : n_(n) {}

  void add(const std::vector<int32_t>& g) {
    auto [r, lvl] = sift(g, 0);
    if (r.empty()) return;  // sifted to identity
    insert_gen(std::move(r), lvl);
    drain();
  }

  BigUInt order() const {
    BigUInt o(1);
    for (const auto& L : levels_) o.mul(uint64_t(L.orbit.size()));
    return o;
  }

 private:
  struct Gen {
    std::vector<int32_t> perm;
    size_t level;  // fixes bases of all shallower levels
  };
  struct Level {
    int base = -1;
    std::vector<int32_t> orbit;
    std::vector<int32_t> where;  // point -> orbit index or -1
    std::vector<std::vector<int32_t>> transversal;  // orbit index -> perm, base -> point
  };
  struct Task {
    size_t level;
    int32_t orbitIdx;
    size_t genIdx;
  };

  int n_;
  std::vector<Level> levels_;
  std::vector<Gen> gens_;
  std::vector<Task> pending_;

  // Divide g by transversal elements until it is the identity (returns an
  // empty perm) or gets stuck; the stuck level may be one past the current
  // chain, in which case the level is created.
  std::pair<std::vector<int32_t>, size_t> sift(std::vector<int32_t> g, size_t lvl) {
    for (;;) {
      if (is_identity_perm(g)) return {{}, 0};
      if (lvl == levels_.size()) return {std::move(g), lvl};
      Level& L = levels_[lvl];
      int x = g[L.base];
      if (x == L.base) {
        ++lvl;
        continue;
      }
      if (L.where[x] < 0) return {std::move(g), lvl};
      g = compose_perm(inverse_perm(L.transversal[L.where[x]]), g);
      ++lvl;
    }
  }

  void ensure_level(size_t lvl, const std::vector<int32_t>& mover) {
    if (lvl < levels_.size()) return;
    Level L;
    for (int v = 0; v < n_; ++v)
      if (mover[v] != v) {
        L.base = v;
        break;
      }
    L.where.assign(n_, -1);
    L.orbit.push_back(L.base);
    L.where[L.base] = 0;
    std::vector<int32_t> id(n_);
    std::iota(id.begin(), id.end(), 0);
    L.transversal.push_back(std::move(id));
    levels_.push_back(std::move(L));
  }

  void insert_gen(std::vector<int32_t> g, size_t lvl) {
    ensure_level(lvl, g);
    size_t gi = gens_.size();
    gens_.push_back(Gen{std::move(g), lvl});
    for (size_t j = 0; j <= lvl && j < levels_.size(); ++j)
      for (size_t oi = 0; oi < levels_[j].orbit.size(); ++oi)
        pending_.push_back(Task{j, int32_t(oi), gi});
  }

  void drain() {
    while (!pending_.empty()) {
      Task task = pending_.back();
      pending_.pop_back();
      if (gens_[task.genIdx].level < task.level) continue;
      int y;
      std::vector<int32_t> t;
      {
        Level& L = levels_[task.level];
        const auto& g = gens_[task.genIdx].perm;
        int pt = L.orbit[task.orbitIdx];
        y = g[pt];
        t = compose_perm(g, L.transversal[task.orbitIdx]);
      }
      Level& L = levels_[task.level];
      if (L.where[y] < 0) {
        L.where[y] = int(L.orbit.size());
        L.orbit.push_back(y);
        L.transversal.push_back(std::move(t));
        int noi = int(L.orbit.size()) - 1;
        for (size_t gi = 0; gi < gens_.size(); ++gi)
          if (gens_[gi].level >= task.level) pending_.push_back(Task{task.level, int32_t(noi), gi});
      } else {
        std::vector<int32_t> s = compose_perm(inverse_perm(L.transversal[L.where[y]]), t);
        auto [r, lvl] = sift(std::move(s), task.level + 1);
        if (!r.empty()) insert_gen(std::move(r), lvl);
      }
    }
  }
};

}  // namespace

BigUInt permutation_group_order(int n, const std::vector<std::vector<int32_t>>& gens) {
  SchreierSims ss(n);
  for (const auto& g : gens) {
    if (int(g.size()) != n) fail("generator size mismatch");
    ss.add(g);
  }
  return ss.order();
}

std::vector<std::vector<int32_t>> enumerate_group(int n, const std::vector<std::vector<int32_t>>& gens,
                                                  size_t limit) {
  auto key = [](const std::vector<int32_t>& p) { return std::string(p.begin(), p.end()); };
  for (const auto& g : gens)
    for (int32_t v : g)
      if (v < 0 || v > 255) fail("enumerate_group supports up to 256 points");
  std::vector<std::vector<int32_t>> elements;
  std::unordered_set<std::string> seen;
  std::vector<int32_t> id(n);
  std::iota(id.begin(), id.end(), 0);
  elements.push_back(id);
  seen.insert(key(id));
  for (size_t head = 0; head < elements.size(); ++head) {
    std::vector<int32_t> cur = elements[head];  // copy: elements grows
    for (const auto& g : gens) {
      std::vector<int32_t> nxt(n);
      for (int v = 0; v < n; ++v) nxt[v] = g[cur[v]];
      if (seen.insert(key(nxt)).second) {
        if (elements.size() >= limit) fail("group enumeration exceeds limit");
        elements.push_back(std::move(nxt));
      }
    }
  }
  return elements;
}

ColoredGraph parse_dimacs(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int n = -1;
  ColoredGraph g;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      int m;
      if (!(ls >> kind >> n >> m) || kind != "edge" || n < 0) fail("bad DIMACS header");
      g = ColoredGraph::create(n);
    } else if (tag == "n") {
      int v, c;
      if (n < 0 || !(ls >> v >> c) || v < 1 || v > n) fail("bad DIMACS color line");
      g.color[v - 1] = c;
    } else if (tag == "e") {
      int u, v;
      if (n < 0 || !(ls >> u >> v) || u < 1 || u > n || v < 1 || v > n) fail("bad DIMACS edge");
      if (u != v) g.add_edge(u - 1, v - 1);
    } else {
      fail("unknown DIMACS line tag '" + tag + "'");
    }
  }
  if (n < 0) fail("missing DIMACS header");
  return g;
}

}  // namespace hjarcs

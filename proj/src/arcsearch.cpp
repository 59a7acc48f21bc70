#include "hjarcs/arcsearch.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstring>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include <json.hpp>

#include "hjarcs/util.hpp"

namespace hjarcs {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error("arcsearch: " + msg); }

}  // namespace

int Arc::max_load() const {
  int m = 0;
  for (uint8_t l : loads) m = std::max(m, int(l));
  return m;
}

void Arc::recompute_loads() {
  std::fill(loads.begin(), loads.end(), 0);
  for (int p = 0; p < geom->num_points(); ++p)
    for (int c = 0; c < mult[p]; ++c)
      for (int32_t h : geom->hyps_of_point(p)) ++loads[h];
}

std::vector<int32_t> Arc::support() const {
  std::vector<int32_t> out;
  for (int p = 0; p < geom->num_points(); ++p)
    if (mult[p]) out.push_back(p);
  return out;
}

std::vector<std::pair<int32_t, int32_t>> Arc::point_mults() const {
  std::vector<std::pair<int32_t, int32_t>> out;
  for (int p = 0; p < geom->num_points(); ++p)
    if (mult[p]) out.emplace_back(p, mult[p]);
  return out;
}

std::vector<int32_t> addable_points(const Arc& arc, int u, bool sets_only) {
  std::vector<int32_t> out;
  for (int p = 0; p < arc.geom->num_points(); ++p) {
    if (sets_only && arc.mult[p]) continue;
    if (arc.can_add(p, u)) out.push_back(p);
  }
  return out;
}

ColoredGraph arc_graph(const Arc& arc, int u) {
  const Geometry& G = *arc.geom;
  int P = G.num_points(), NV = G.graph_vertices();
  ColoredGraph g;
  g.n = NV;
  g.words = G.graph_words();
  g.adj = G.graph_adj();
  g.color.resize(NV);
  for (int p = 0; p < P; ++p) g.color[p] = arc.mult[p];
  for (int v = P; v < NV; ++v) g.color[v] = u + 1;
  return g;
}

bool is_degenerate(const Arc& arc) {
  const Geometry& G = *arc.geom;
  const RingTable& R = G.ring();
  const FieldTable& F = R.field;
  int k = G.k();
  // Gaussian elimination over F_q on the residue vectors of the support
  std::vector<std::array<uint8_t, 5>> rows;
  int rank = 0;
  std::array<int, 5> pivotCol{};
  for (int p = 0; p < G.num_points() && rank <= k; ++p) {
    if (!arc.mult[p]) continue;
    std::array<uint8_t, 5> v{};
    for (int i = 0; i <= k; ++i) v[i] = R.residue(G.points()[p].coords[i]);
    for (int rI = 0; rI < rank; ++rI) {
      uint8_t c = v[pivotCol[rI]];
      if (c == 0) continue;
      for (int i = 0; i <= k; ++i) v[i] = F.add[v[i]][F.neg[F.mul[c][rows[rI][i]]]];
    }
    int pc = -1;
    for (int i = 0; i <= k; ++i)
      if (v[i]) {
        pc = i;
        break;
      }
    if (pc < 0) continue;
    uint8_t inv = F.inv[v[pc]];
    for (int i = 0; i <= k; ++i) v[i] = F.mul[inv][v[i]];
    pivotCol[rank] = pc;
    rows.push_back(v);
    ++rank;
  }
  return rank < k + 1;
}

// ---------------------------------------------------------------------------
// Canonical augmentation search.

namespace {

struct SupportColor {
  int u;
  static bool pred(int32_t color, void* ctx) {
    int u = static_cast<SupportColor*>(ctx)->u;
    return color >= 1 && color <= u;
  }
};

// Arc plus a multiplicity histogram so the minimal positive multiplicity is
// available in O(u).
struct WorkArc {
  Arc arc;
  std::array<int32_t, 24> hist{};

  explicit WorkArc(const Geometry& g) : arc(g) {}
  void add(int p) {
    if (arc.mult[p]) --hist[arc.mult[p]];
    arc.add(p);
    ++hist[arc.mult[p]];
  }
  void remove(int p) {
    --hist[arc.mult[p]];
    arc.remove(p);
    if (arc.mult[p]) ++hist[arc.mult[p]];
  }
  int min_positive_mult() const {
    for (size_t m = 1; m < hist.size(); ++m)
      if (hist[m]) return int(m);
    return 0;
  }
};

using StoredPM = std::vector<std::pair<int32_t, int32_t>>;

class Searcher {
 public:
  Searcher(const Geometry& geom, const ClassifyOptions& opt) : G(geom), opt_(opt), u_(opt.u) {
    if (u_ < 2 || u_ > 20) fail("u must be in 2..20");
    P = G.num_points();
    NV = G.graph_vertices();
    hypsPerPoint = G.hyps_per_point();
  }

  ClassificationResult run();

 private:
  const Geometry& G;
  ClassifyOptions opt_;
  int u_;
  int P = 0, NV = 0, hypsPerPoint = 0;

  // collector state (mutex-guarded in parallel phase)
  std::mutex collMu_;
  std::map<int, std::pair<int64_t, int64_t>> census_;  // n -> (nondeg, total)
  int maxN_ = -1;
  std::vector<ArcClass> atMax_;
  std::vector<ArcClass> fullReps_;
  std::unordered_set<Hash128, Hash128Hasher> seen_;

  std::mutex leftoverMu_;
  std::vector<StoredPM> leftovers_;
  std::atomic<bool> budgetHit_{false};
  bool hasDeadline_ = false;
  std::chrono::steady_clock::time_point deadline_;

  std::mutex statsMu_;
  SearchStats stats_;

  bool past_deadline() const {
    return hasDeadline_ && std::chrono::steady_clock::now() >= deadline_;
  }

  void record_complete(const Arc& arc, const CanonResult& canon) {
    ArcClass cls;
    cls.rep = arc.point_mults();
    cls.n = arc.n;
    cls.aut_order = canon.aut_order;
    cls.degenerate = is_degenerate(arc);
    cls.canonical_form = canon.form;
    std::lock_guard<std::mutex> lock(collMu_);
    Hash128 h = hash_bytes(cls.canonical_form.data(), cls.canonical_form.size());
    if (!seen_.insert(h).second) fail("duplicate canonical form emitted (isomorph rejection bug)");
    auto& c = census_[cls.n];
    ++c.second;
    if (!cls.degenerate) ++c.first;
    if (opt_.keep_full_census) fullReps_.push_back(cls);
    if (cls.n > maxN_) {
      maxN_ = cls.n;
      atMax_.clear();
    }
    if (cls.n == maxN_) atMax_.push_back(std::move(cls));
  }

  void push_leftover(const Arc& arc) {
    std::lock_guard<std::mutex> lock(leftoverMu_);
    leftovers_.push_back(arc.point_mults());
    budgetHit_.store(true);
  }

  int upper_bound_total(const Arc& arc) const {
    static thread_local std::vector<int32_t> cap;
    cap.assign(P, 0);
    for (int p = 0; p < P; ++p) {
      int c = u_;
      for (int32_t h : G.hyps_of_point(p)) c = std::min(c, u_ - int(arc.loads[h]));
      cap[p] = std::max(c, 0);
    }
    int64_t usable = 0;
    for (int h = 0; h < G.num_hyperplanes(); ++h) {
      int slack = u_ - int(arc.loads[h]);
      if (slack <= 0) continue;
      int64_t sumCap = 0;
      for (int32_t p : G.points_of_hyp(h)) sumCap += cap[p];
      usable += std::min<int64_t>(slack, sumCap);
    }
    return arc.n + int(usable / hypsPerPoint);
  }

  std::vector<int32_t> child_colors(const Arc& arc) const {
    std::vector<int32_t> colors(NV);
    for (int p = 0; p < P; ++p) colors[p] = arc.mult[p];
    for (int v = P; v < NV; ++v) colors[v] = u_ + 1;
    return colors;
  }

  ColoredGraph graph_of(const Arc& arc) const {
    ColoredGraph g;
    g.n = NV;
    g.words = G.graph_words();
    g.adj = G.graph_adj();
    g.color = child_colors(arc);
    return g;
  }

  // Canonical deletion point: support vertex of minimal canonical position.
  int canonical_deletion(const Arc& arc, const CanonResult& canon) const {
    int best = -1, bestPos = INT32_MAX;
    for (int p = 0; p < P; ++p)
      if (arc.mult[p] && canon.labeling[p] < bestPos) {
        bestPos = canon.labeling[p];
        best = p;
      }
    return best;
  }

  // stopDepth >= 0: nodes with n >= stopDepth are pushed to `sink` unprocessed.
  void expand(WorkArc& wa, const CanonResult& canon, SearchStats& st, int stopDepth,
              std::vector<StoredPM>* sink) {
    Arc& arc = wa.arc;
    if (stopDepth >= 0 && arc.n >= stopDepth) {
      sink->push_back(arc.point_mults());
      return;
    }
    if (past_deadline()) {
      push_leftover(arc);
      return;
    }
    ++st.nodes;
    std::vector<int32_t> addable = addable_points(arc, u_, opt_.sets_only);
    if (addable.empty()) record_complete(arc, canon);
    if (opt_.min_size > 0 && upper_bound_total(arc) < opt_.min_size) return;
    if (addable.empty()) return;

    // one candidate per Aut(arc)-orbit on addable points
    UnionFind uf(P);
    for (const auto& g : canon.generators)
      for (int v = 0; v < P; ++v)
        if (g[v] != v) uf.unite(v, g[v]);
    std::vector<uint8_t> seenRoot(P, 0);  // per node; expand recurses
    SupportColor supportPred{u_};

    for (int32_t p : addable) {
      int root = uf.find(p);
      if (seenRoot[root]) continue;
      seenRoot[root] = 1;
      ++st.children_tried;

      wa.add(p);
      // pinned canonical deletion lives in the lowest positive multiplicity
      // class; reject other augmentations without touching the graph
      if (int(arc.mult[p]) != wa.min_positive_mult()) {
        ++st.rejected_multiplicity;
        wa.remove(p);
        continue;
      }
      ColoredGraph cg = graph_of(arc);
      std::vector<int32_t> cell = first_refined_cell_with(cg, &SupportColor::pred, &supportPred);
      if (!std::binary_search(cell.begin(), cell.end(), p)) {
        ++st.rejected_refinement;
        wa.remove(p);
        continue;
      }
      ++st.canon_calls;
      CanonResult childCanon = canonical_form(cg);
      int del = canonical_deletion(arc, childCanon);
      bool accept = (del == p);
      if (!accept) {
        UnionFind cuf(P);
        for (const auto& g : childCanon.generators)
          for (int v = 0; v < P; ++v)
            if (g[v] != v) cuf.unite(v, g[v]);
        accept = cuf.same(p, del);
      }
      if (accept) {
        expand(wa, childCanon, st, stopDepth, sink);
      } else {
        ++st.rejected_orbit;
      }
      wa.remove(p);
    }
  }

  WorkArc decode(const StoredPM& pm) const {
    WorkArc wa(G);
    for (auto [id, m] : pm) {
      if (id < 0 || id >= P || m < 1) fail("corrupt frontier arc");
      for (int c = 0; c < m; ++c) wa.add(id);
    }
    if (!wa.arc.valid(u_)) fail("frontier arc violates the load bound");
    return wa;
  }

  void process_stored(const StoredPM& pm, SearchStats& st, int stopDepth, std::vector<StoredPM>* sink) {
    WorkArc wa = decode(pm);
    CanonResult canon = canonical_form(graph_of(wa.arc));
    ++st.canon_calls;
    expand(wa, canon, st, stopDepth, sink);
  }

  void merge_stats(const SearchStats& st) {
    std::lock_guard<std::mutex> lock(statsMu_);
    stats_.nodes += st.nodes;
    stats_.canon_calls += st.canon_calls;
    stats_.children_tried += st.children_tried;
    stats_.rejected_multiplicity += st.rejected_multiplicity;
    stats_.rejected_refinement += st.rejected_refinement;
    stats_.rejected_orbit += st.rejected_orbit;
  }

  void load_checkpoint(std::vector<StoredPM>& frontier);
  void write_checkpoint(const std::vector<StoredPM>& frontier) const;
};

void Searcher::load_checkpoint(std::vector<StoredPM>& frontier) {
  std::ifstream is(opt_.checkpoint_path);
  json j = json::parse(is);
  if (j.at("format") != "hjarcs-checkpoint" || j.at("version") != 1) fail("unsupported checkpoint format");
  if (j.at("ring") != G.ring().spec.name || j.at("k") != G.k() || j.at("u") != u_ ||
      j.at("sets_only") != opt_.sets_only || j.at("min_size") != opt_.min_size)
    fail("checkpoint does not match the requested search");
  for (const auto& c : j.at("census")) {
    census_[c.at(0).get<int>()] = {c.at(1).get<int64_t>(), c.at(2).get<int64_t>()};
  }
  maxN_ = j.at("max_n").get<int>();
  auto readClasses = [&](const json& arr, std::vector<ArcClass>& out) {
    for (const auto& e : arr) {
      ArcClass cls;
      cls.n = e.at("n").get<int>();
      cls.degenerate = e.at("degenerate").get<bool>();
      for (const auto& pm : e.at("points")) cls.rep.emplace_back(pm.at(0).get<int>(), pm.at(1).get<int>());
      BigUInt order(0);
      {  // decimal string -> BigUInt
        BigUInt acc(0);
        for (char ch : e.at("aut_order").get<std::string>()) {
          acc.mul(10);
          BigUInt digit(uint64_t(ch - '0'));
          // small add via rebuild: BigUInt lacks add; reconstruct through u64 when possible
          if (acc.fits_u64() && digit.fits_u64() && acc.as_u64() <= UINT64_MAX - digit.as_u64())
            acc = BigUInt(acc.as_u64() + digit.as_u64());
          else
            fail("aut order too large for checkpoint reload");
        }
        order = acc;
      }
      cls.aut_order = order;
      std::string hex = e.at("form").get<std::string>();
      cls.canonical_form.resize(hex.size() / 2);
      auto nib = [](char c) -> int { return c <= '9' ? c - '0' : c - 'a' + 10; };
      for (size_t i = 0; i < cls.canonical_form.size(); ++i)
        cls.canonical_form[i] = uint8_t(nib(hex[2 * i]) * 16 + nib(hex[2 * i + 1]));
      out.push_back(std::move(cls));
    }
  };
  readClasses(j.at("classes_at_max"), atMax_);
  if (j.contains("full_census_classes")) readClasses(j.at("full_census_classes"), fullReps_);
  for (const auto& h : j.at("forms_seen")) {
    Hash128 hh;
    std::string s = h.get<std::string>();
    hh.lo = std::stoull(s.substr(0, 16), nullptr, 16);
    hh.hi = std::stoull(s.substr(16, 16), nullptr, 16);
    seen_.insert(hh);
  }
  for (const auto& f : j.at("frontier")) {
    StoredPM pm;
    for (const auto& e : f) pm.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    frontier.push_back(std::move(pm));
  }
}

namespace {

std::string hex_bytes(const std::vector<uint8_t>& v) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(v.size() * 2);
  for (uint8_t b : v) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

json classes_to_json(const std::vector<ArcClass>& classes) {
  json arr = json::array();
  for (const auto& cls : classes) {
    json e;
    e["n"] = cls.n;
    e["degenerate"] = cls.degenerate;
    e["aut_order"] = cls.aut_order.to_string();
    json pts = json::array();
    for (auto [id, m] : cls.rep) pts.push_back(json::array({id, m}));
    e["points"] = pts;
    e["form"] = hex_bytes(cls.canonical_form);
    arr.push_back(std::move(e));
  }
  return arr;
}

char hex_digit(uint64_t v, int shift) { return "0123456789abcdef"[(v >> shift) & 15]; }

std::string hash_to_hex(const Hash128& h) {
  std::string s(32, '0');
  for (int i = 0; i < 16; ++i) s[i] = hex_digit(h.lo, 60 - 4 * i);
  for (int i = 0; i < 16; ++i) s[16 + i] = hex_digit(h.hi, 60 - 4 * i);
  return s;
}

}  // namespace

void Searcher::write_checkpoint(const std::vector<StoredPM>& frontier) const {
  json j;
  j["format"] = "hjarcs-checkpoint";
  j["version"] = 1;
  j["ring"] = G.ring().spec.name;
  j["k"] = G.k();
  j["u"] = u_;
  j["sets_only"] = opt_.sets_only;
  j["min_size"] = opt_.min_size;
  json cen = json::array();
  for (const auto& [n, c] : census_) cen.push_back(json::array({n, c.first, c.second}));
  j["census"] = cen;
  j["max_n"] = maxN_;
  j["classes_at_max"] = classes_to_json(atMax_);
  if (opt_.keep_full_census) j["full_census_classes"] = classes_to_json(fullReps_);
  json seen = json::array();
  for (const auto& h : seen_) seen.push_back(hash_to_hex(h));
  j["forms_seen"] = seen;
  json fr = json::array();
  for (const auto& pm : frontier) {
    json a = json::array();
    for (auto [id, m] : pm) a.push_back(json::array({id, m}));
    fr.push_back(std::move(a));
  }
  j["frontier"] = fr;
  std::ofstream os(opt_.checkpoint_path);
  os << j.dump(1) << "\n";
  if (!os) fail("failed to write checkpoint " + opt_.checkpoint_path);
}

ClassificationResult Searcher::run() {
  if (opt_.budget_seconds > 0) {
    hasDeadline_ = true;
    deadline_ = std::chrono::steady_clock::now() +
                std::chrono::microseconds(int64_t(opt_.budget_seconds * 1e6));
  }

  std::vector<StoredPM> frontier;
  bool resumed = false;
  if (!opt_.checkpoint_path.empty()) {
    std::ifstream probe(opt_.checkpoint_path);
    if (probe.good()) {
      load_checkpoint(frontier);
      resumed = true;
    }
  }
  if (!resumed) frontier.push_back({});

  int jobs = std::max(1, opt_.jobs);
  if (jobs > 1) {
    // deepen the frontier so there is enough parallel work
    size_t want = size_t(8) * jobs;
    int stopDepth = frontier.empty() ? 0 : 1 + int(frontier.front().size());
    while (frontier.size() < want && !frontier.empty() && !budgetHit_.load()) {
      int maxN = 0;
      for (const auto& pm : frontier) {
        int n = 0;
        for (auto [id, m] : pm) n += m;
        maxN = std::max(maxN, n);
      }
      stopDepth = maxN + 1;
      std::vector<StoredPM> sink;
      SearchStats st;
      for (const auto& pm : frontier) process_stored(pm, st, stopDepth, &sink);
      merge_stats(st);
      if (sink.empty()) {
        frontier.clear();
        break;
      }
      frontier = std::move(sink);
      if (stopDepth > P * u_) break;  // safety net
    }
  }

  std::atomic<size_t> next{0};
  std::exception_ptr firstError;
  std::mutex errMu;
  auto worker = [&]() {
    SearchStats st;
    try {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= frontier.size()) break;
        if (budgetHit_.load()) {
          std::lock_guard<std::mutex> lock(leftoverMu_);
          leftovers_.push_back(frontier[i]);
          continue;
        }
        process_stored(frontier[i], st, -1, nullptr);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(errMu);
      if (!firstError) firstError = std::current_exception();
    }
    merge_stats(st);
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (firstError) std::rethrow_exception(firstError);

  ClassificationResult res;
  res.ring = G.ring().spec.name;
  res.k = G.k();
  res.u = u_;
  res.sets_only = opt_.sets_only;
  res.min_size = opt_.min_size;
  res.final_result = !budgetHit_.load();
  res.stats = stats_;
  res.m_u = maxN_;
  if (maxN_ >= 0) {
    auto it = census_.find(maxN_);
    res.nondegenerate_at_max = it->second.first;
    res.total_at_max = it->second.second;
  }
  for (const auto& [n, c] : census_) res.census.push_back(SizeCensus{n, c.first, c.second});
  auto byForm = [](const ArcClass& a, const ArcClass& b) {
    return a.canonical_form < b.canonical_form;
  };
  std::sort(atMax_.begin(), atMax_.end(), byForm);
  res.classes_at_max = std::move(atMax_);
  if (opt_.keep_full_census) {
    std::sort(fullReps_.begin(), fullReps_.end(), [&](const ArcClass& a, const ArcClass& b) {
      if (a.n != b.n) return a.n < b.n;
      return a.canonical_form < b.canonical_form;
    });
    res.full_census_classes = std::move(fullReps_);
  }

  if (!res.final_result) {
    if (opt_.checkpoint_path.empty()) fail("budget exhausted and no checkpoint path configured");
    write_checkpoint(leftovers_);
  }
  return res;
}

}  // namespace

ClassificationResult classify(const Geometry& geom, const ClassifyOptions& opt) {
  Searcher s(geom, opt);
  return s.run();
}

// ---------------------------------------------------------------------------
// Hyperovals.

HyperovalCensus hyperoval_census(const Geometry& geom) {
  if (geom.k() != 2) fail("hyperoval census requires a plane (k = 2)");
  const RingTable& R = geom.ring();
  int qm = R.size;  // q^m
  HyperovalCensus out;
  out.target_size = qm + qm / R.q + 1;
  int P = geom.num_points();
  // Any two distinct points share a line, so a hyperoval is a plain point
  // set; depth-first search over ids with the 2-arc load bound.
  Arc arc(geom);
  std::vector<int32_t> chosen;
  auto dfs = [&](auto&& self, int nextId) -> void {
    if (arc.n == out.target_size) {
      ++out.count;
      out.hyperovals.push_back(chosen);
      return;
    }
    if (P - nextId < out.target_size - arc.n) return;
    for (int p = nextId; p < P; ++p) {
      if (!arc.can_add(p, 2)) continue;
      arc.add(p);
      chosen.push_back(p);
      self(self, p + 1);
      chosen.pop_back();
      arc.remove(p);
    }
  };
  dfs(dfs, 0);

  if (out.count > 0) {
    std::unordered_set<Hash128, Hash128Hasher> forms;
    for (size_t i = 0; i < out.hyperovals.size(); ++i) {
      Arc h(geom);
      for (int32_t p : out.hyperovals[i]) h.add(p);
      CanonResult c = canonical_form(arc_graph(h, 2));
      forms.insert(hash_bytes(c.form.data(), c.form.size()));
      if (i == 0) out.stabilizer_order = c.aut_order;
    }
    out.distinct_canonical_forms = int64_t(forms.size());
  }
  return out;
}

Arc complete_to_hyperoval(const Geometry& geom, const std::vector<int32_t>& quadrangle) {
  if (geom.k() != 2) fail("hyperoval completion requires a plane (k = 2)");
  if (quadrangle.size() != 4) fail("a quadrangle needs exactly 4 points");
  const RingTable& R = geom.ring();
  const FieldTable& F = R.field;
  for (int32_t p : quadrangle)
    if (p < 0 || p >= geom.num_points()) fail("point id out of range");
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (quadrangle[i] == quadrangle[j]) fail("quadrangle points must be distinct");
      if (geom.neighbours(quadrangle[i], quadrangle[j]))
        fail("quadrangle points must lie in different neighbour classes");
    }
  // no 3 of the quotient points collinear: every 3-subset has F_q-rank 3
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      for (int c = b + 1; c < 4; ++c) {
        std::array<std::array<uint8_t, 3>, 3> m{};
        int rows[3] = {quadrangle[a], quadrangle[b], quadrangle[c]};
        for (int i = 0; i < 3; ++i)
          for (int col = 0; col < 3; ++col) m[i][col] = R.residue(geom.points()[rows[i]].coords[col]);
        // rank via elimination
        int rank = 0;
        for (int col = 0; col < 3 && rank < 3; ++col) {
          int pivot = -1;
          for (int i = rank; i < 3; ++i)
            if (m[i][col]) {
              pivot = i;
              break;
            }
          if (pivot < 0) continue;
          std::swap(m[rank], m[pivot]);
          uint8_t inv = F.inv[m[rank][col]];
          for (int cc = 0; cc < 3; ++cc) m[rank][cc] = F.mul[inv][m[rank][cc]];
          for (int i = 0; i < 3; ++i) {
            if (i == rank || !m[i][col]) continue;
            uint8_t f = m[i][col];
            for (int cc = 0; cc < 3; ++cc) m[i][cc] = F.add[m[i][cc]][F.neg[F.mul[f][m[rank][cc]]]];
          }
          ++rank;
        }
        if (rank < 3) fail("three quadrangle classes are collinear in the quotient plane");
      }

  int qm = R.size;
  int target = qm + qm / R.q + 1;
  Arc arc(geom);
  for (int32_t p : quadrangle) {
    if (!arc.can_add(p, 2)) fail("quadrangle is not a (4,2)-arc");
    arc.add(p);
  }
  std::vector<std::vector<int32_t>> completions;
  std::vector<int32_t> extra;
  int P = geom.num_points();
  auto dfs = [&](auto&& self, int nextId) -> void {
    if (arc.n == target) {
      completions.push_back(extra);
      return;
    }
    if (completions.size() > 1) return;
    // remaining candidates must suffice
    int needed = target - arc.n, available = 0;
    for (int p = nextId; p < P; ++p)
      if (!arc.mult[p] && arc.can_add(p, 2)) ++available;
    if (available < needed) return;
    for (int p = nextId; p < P; ++p) {
      if (arc.mult[p] || !arc.can_add(p, 2)) continue;
      arc.add(p);
      extra.push_back(p);
      self(self, p + 1);
      extra.pop_back();
      arc.remove(p);
      if (completions.size() > 1) return;
    }
  };
  dfs(dfs, 0);
  if (completions.empty()) fail("no hyperoval contains this quadrangle");
  if (completions.size() > 1) fail("hyperoval completion is not unique");
  Arc result(geom);
  for (int32_t p : quadrangle) result.add(p);
  for (int32_t p : completions[0]) result.add(p);
  return result;
}

}  // namespace hjarcs

#include "hjarcs/driver.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

#include "hjarcs/canon.hpp"
#include "hjarcs/util.hpp"

namespace hjarcs {

std::shared_ptr<const RingTable> GeometryPool::ring(const std::string& name) {
  auto it = rings_.find(name);
  if (it != rings_.end()) return it->second;
  auto r = std::make_shared<const RingTable>(build_ring(name));
  rings_[name] = r;
  return r;
}

std::shared_ptr<const Geometry> GeometryPool::geometry(const std::string& name, int k) {
  auto key = std::make_pair(name, k);
  auto it = geoms_.find(key);
  if (it != geoms_.end()) return it->second;
  auto g = std::make_shared<const Geometry>(Geometry::build(ring(name), k));
  geoms_[key] = g;
  return g;
}

// ---------------------------------------------------------------------------

AppendixCheck verify_appendix_arc(const AppendixArc& entry, GeometryPool& pool) {
  AppendixCheck out;
  out.key = entry.key;
  auto geom = pool.geometry(entry.ring, entry.k);
  ArcFile file = parse_arc_file(entry.arc_file, geom->ring());
  Arc arc = arc_from_file(file, *geom);

  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) out.diffs.push_back(what);
  };

  expect(arc.n == entry.n, "n: got " + std::to_string(arc.n) + ", expected " + std::to_string(entry.n));
  out.max_load = arc.max_load();
  expect(out.max_load <= entry.u,
         "u-validity: max load " + std::to_string(out.max_load) + " > " + std::to_string(entry.u));
  bool degenerate = is_degenerate(arc);
  expect(!degenerate, "arc is degenerate");

  CanonResult canon = canonical_form(arc_graph(arc, entry.u));
  out.aut_order = canon.aut_order;
  expect(canon.aut_order.equals(entry.g),
         "g: got " + canon.aut_order.to_string() + ", expected " + std::to_string(entry.g));

  out.report = code_report(arc);
  const CodeReport& r = out.report;
  expect(r.d_hom == entry.d_hom,
         "d_hom: got " + std::to_string(r.d_hom) + ", expected " + std::to_string(entry.d_hom));
  expect(r.gray_q == entry.gray_q, "gray q mismatch");
  expect(r.gray_length == entry.gray_length,
         "gray length: got " + std::to_string(r.gray_length) + ", expected " + std::to_string(entry.gray_length));
  expect(r.gray_dimension == entry.gray_dimension,
         "gray dimension: got " + std::to_string(r.gray_dimension) + ", expected " +
             std::to_string(entry.gray_dimension));
  expect(r.gray_min_hamming == entry.gray_min_hamming,
         "gray minimum distance: got " + std::to_string(r.gray_min_hamming) + ", expected " +
             std::to_string(entry.gray_min_hamming));
  if (entry.gray_linear) expect(r.gray_linear, "Gray image is not linear");
  expect(r.injective, "message map is not injective");

  std::map<int64_t, int64_t> expectedWE(entry.weight_enumerator.begin(), entry.weight_enumerator.end());
  if (r.weight_enumerator != expectedWE) {
    std::ostringstream os;
    os << "weight enumerator: got {";
    for (auto [w, c] : r.weight_enumerator) os << " " << c << "X^" << w;
    os << " }, expected {";
    for (auto [w, c] : expectedWE) os << " " << c << "X^" << w;
    os << " }";
    out.diffs.push_back(os.str());
  }
  out.pass = out.diffs.empty();
  return out;
}

std::vector<AppendixCheck> verify_appendix(GeometryPool& pool) {
  std::vector<AppendixCheck> out;
  for (const auto& entry : appendix_arcs()) out.push_back(verify_appendix_arc(entry, pool));
  return out;
}

// ---------------------------------------------------------------------------

CellRun run_table1_cell(const Table1Cell& cell, GeometryPool& pool, int jobs, double budget_seconds,
                        const std::string& checkpoint_dir) {
  CellRun run;
  run.cell = cell;
  auto geom = pool.geometry(cell.ring, cell.k);
  ClassifyOptions opt;
  opt.u = cell.u;
  opt.jobs = jobs;
  opt.budget_seconds = budget_seconds;
  if (!checkpoint_dir.empty())
    opt.checkpoint_path = checkpoint_dir + "/" + cell.ring + "_k" + std::to_string(cell.k) + "_u" +
                          std::to_string(cell.u) + ".ckpt.json";
  run.result = classify(*geom, opt);

  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) run.diffs.push_back(what);
  };
  if (!run.result.final_result) {
    run.diffs.push_back("budget exhausted; partial result is not comparable");
  } else if (cell.lower_bound_only) {
    expect(run.result.m_u >= cell.m, "m_u: got " + std::to_string(run.result.m_u) +
                                         ", expected at least " + std::to_string(cell.m));
  } else {
    expect(run.result.m_u == cell.m,
           "m_u: got " + std::to_string(run.result.m_u) + ", expected " + std::to_string(cell.m));
    if (cell.nondegenerate >= 0)
      expect(run.result.nondegenerate_at_max == cell.nondegenerate,
             "nondegenerate classes: got " + std::to_string(run.result.nondegenerate_at_max) +
                 ", expected " + std::to_string(cell.nondegenerate));
    if (cell.total >= 0)
      expect(run.result.total_at_max == cell.total,
             "total classes: got " + std::to_string(run.result.total_at_max) + ", expected " +
                 std::to_string(cell.total));
  }
  run.match = run.diffs.empty();
  return run;
}

// ---------------------------------------------------------------------------

Prop7Report run_prop7(GeometryPool& pool) {
  Prop7Report rep;
  auto geom = pool.geometry("Z4", 2);
  const Geometry& G = *geom;
  int P = G.num_points(), NV = G.graph_vertices();

  HyperovalCensus census = hyperoval_census(G);
  rep.census_count = census.count;
  rep.distinct_forms = census.distinct_canonical_forms;
  rep.stabilizer_order = census.stabilizer_order;

  Arc empty(G);
  CanonResult canon = canonical_form(arc_graph(empty, 2));
  rep.collineation_order = canon.aut_order;

  // kernel of the quotient action: automorphisms fixing every neighbour
  // class of points and of hyperplanes setwise
  auto group = enumerate_group(NV, canon.generators, 1u << 20);
  auto fixes_classes = [&](const std::vector<int32_t>& g) {
    for (int v = 0; v < NV; ++v) {
      int img = g[v];
      if (v < P) {
        if (img >= P || G.point_class(img) != G.point_class(v)) return false;
      } else {
        if (img < P || G.hyp_class(img - P) != G.hyp_class(v - P)) return false;
      }
    }
    return true;
  };
  std::vector<std::vector<int32_t>> kernel;
  for (const auto& g : group)
    if (fixes_classes(g)) kernel.push_back(g);
  rep.kernel_size = int64_t(kernel.size());

  // normality: conjugation by each generator keeps the kernel inside itself
  rep.kernel_normal = true;
  for (const auto& g : canon.generators) {
    std::vector<int32_t> ginv(NV);
    for (int v = 0; v < NV; ++v) ginv[g[v]] = v;
    for (const auto& h : kernel) {
      std::vector<int32_t> conj(NV);
      for (int v = 0; v < NV; ++v) conj[v] = g[h[ginv[v]]];
      if (!fixes_classes(conj)) {
        rep.kernel_normal = false;
        break;
      }
    }
    if (!rep.kernel_normal) break;
  }

  // regularity on the hyperovals: the kernel orbit of the first hyperoval
  // hits every hyperoval exactly once
  rep.kernel_regular = false;
  if (census.count > 0 && !kernel.empty()) {
    std::set<std::vector<int32_t>> all(census.hyperovals.begin(), census.hyperovals.end());
    std::map<std::vector<int32_t>, int> hits;
    for (const auto& h : kernel) {
      std::vector<int32_t> img;
      img.reserve(census.hyperovals[0].size());
      for (int32_t p : census.hyperovals[0]) img.push_back(h[p]);
      std::sort(img.begin(), img.end());
      hits[img]++;
    }
    rep.kernel_regular = int64_t(hits.size()) == census.count;
    for (const auto& [img, c] : hits) {
      if (c != 1 || !all.count(img)) rep.kernel_regular = false;
    }
  }
  return rep;
}

}  // namespace hjarcs

#include "hjarcs/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "hjarcs/canon.hpp"
#include "hjarcs/codes.hpp"
#include "hjarcs/driver.hpp"
#include "hjarcs/util.hpp"

namespace hjarcs {

namespace {

using json = nlohmann::ordered_json;

json ring_json(const RingTable& R) {
  json j;
  j["name"] = R.spec.name;
  j["presentation"] = R.spec.presentation;
  j["q"] = R.q;
  j["m"] = R.m;
  j["p"] = R.p;
  j["r"] = R.r;
  j["lambda"] = R.lambda;
  j["theta"] = R.literal(R.theta);
  json gamma = json::array();
  for (Elt g : R.gamma) gamma.push_back(R.literal(g));
  j["gamma"] = gamma;
  if (!R.sigma_note.empty()) j["sigma"] = R.sigma_note;
  return j;
}

json report_base(const std::string& command) {
  json j;
  j["schema"] = "hjarcs.report/1";
  json tool;
  tool["name"] = kToolName;
  tool["version"] = kToolVersion;
  j["tool"] = tool;
  j["command"] = command;
  json conv;
  conv["point_normalization"] = "earliest unit coordinate equals 1 (right scaling)";
  conv["hyperplane_normalization"] = "earliest unit coefficient equals 1 (left scaling)";
  conv["incidence"] = "sum_i c_i x_i = 0, coefficients on the left";
  conv["transversal"] = "0 together with the powers of a Teichmueller unit";
  j["conventions"] = conv;
  return j;
}

void emit_report(const json& j, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << j.dump(1) << "\n";
  } else {
    std::ofstream os(path);
    os << j.dump(1) << "\n";
    if (!os) throw std::runtime_error("cannot write report to " + path);
  }
}

json point_literal_array(const Geometry& G, const std::vector<std::pair<int32_t, int32_t>>& rep) {
  const RingTable& R = G.ring();
  json arr = json::array();
  for (auto [id, mult] : rep) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i <= G.k(); ++i) {
      if (i) os << ":";
      os << R.literal(G.points()[id].coords[i]);
    }
    os << ")";
    arr.push_back(json::array({os.str(), mult}));
  }
  return arr;
}

json classification_json(const Geometry& G, const ClassificationResult& res) {
  json j;
  j["status"] = res.final_result ? "final" : "budget-exhausted";
  j["m_u"] = res.m_u;
  j["nondegenerate_at_max"] = res.nondegenerate_at_max;
  j["total_at_max"] = res.total_at_max;
  json cen = json::array();
  for (const auto& c : res.census) {
    json e;
    e["n"] = c.n;
    e["nondegenerate"] = c.nondegenerate;
    e["total"] = c.total;
    cen.push_back(std::move(e));
  }
  j["census_of_complete_classes"] = cen;
  json cls = json::array();
  for (const auto& c : res.classes_at_max) {
    json e;
    e["n"] = c.n;
    e["aut_order"] = c.aut_order.to_string();
    e["degenerate"] = c.degenerate;
    e["points"] = point_literal_array(G, c.rep);
    cls.push_back(std::move(e));
  }
  j["classes_at_max"] = cls;
  json st;
  st["nodes"] = res.stats.nodes;
  st["canon_calls"] = res.stats.canon_calls;
  st["children_tried"] = res.stats.children_tried;
  st["rejected_multiplicity"] = res.stats.rejected_multiplicity;
  st["rejected_refinement"] = res.stats.rejected_refinement;
  st["rejected_orbit"] = res.stats.rejected_orbit;
  j["stats"] = st;
  return j;
}

json code_report_json(const CodeReport& r) {
  json j;
  j["length"] = r.n;
  j["cardinality"] = r.cardinality;
  j["injective"] = r.injective;
  j["degenerate"] = r.degenerate;
  j["d_hom"] = r.d_hom;
  json g;
  g["q"] = r.gray_q;
  g["length"] = r.gray_length;
  g["dimension"] = r.gray_dimension;
  g["min_hamming"] = r.gray_min_hamming;
  g["linear"] = r.gray_linear;
  json we = json::array();
  for (auto [w, c] : r.weight_enumerator) we.push_back(json::array({w, c}));
  g["weight_enumerator"] = we;
  j["gray"] = g;
  return j;
}

}  // namespace

int cmd_ring_list(std::ostream& out) {
  for (const auto& name : ring_names()) {
    RingSpec spec = ring_spec(name);
    out << name << "  " << spec.presentation << "\n";
  }
  return kOk;
}

int cmd_ring_show(const std::string& name, std::ostream& out) {
  RingTable R = build_ring(name);
  out << R.dump_tables();
  return kOk;
}

int cmd_geom_build(const std::string& ring, int k, const std::string& cache_path,
                   const std::string& report_path, std::ostream& out) {
  GeometryPool pool;
  auto geom = pool.geometry(ring, k);
  out << geom->summary();
  if (!cache_path.empty()) {
    geom->save_cache(cache_path);
    out << "cache written to " << cache_path << "\n";
  }
  if (!report_path.empty()) {
    json j = report_base("geom build --ring " + ring + " --dim " + std::to_string(k));
    j["ring"] = ring_json(geom->ring());
    j["k"] = k;
    j["points"] = geom->num_points();
    j["hyperplanes"] = geom->num_hyperplanes();
    j["points_per_hyperplane"] = int(geom->points_of_hyp(0).size());
    j["hyperplanes_per_point"] = geom->hyps_per_point();
    j["neighbour_classes"] = geom->num_classes();
    emit_report(j, report_path, out);
  }
  return kOk;
}

int cmd_search(const SearchArgs& args, std::ostream& out) {
  GeometryPool pool;
  auto geom = pool.geometry(args.ring, args.k);
  ClassifyOptions opt;
  opt.u = args.u;
  opt.sets_only = args.sets_only;
  opt.min_size = args.min_size;
  opt.jobs = args.jobs;
  opt.budget_seconds = args.budget_seconds;
  opt.checkpoint_path = args.checkpoint;
  opt.keep_full_census = args.full_census;

  auto t0 = std::chrono::steady_clock::now();
  ClassificationResult res = classify(*geom, opt);
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  out << "PHG(" << args.k << "," << args.ring << ") u=" << args.u
      << (args.sets_only ? " sets-only" : "") << "\n";
  if (res.min_size > 0)
    out << "note: min-size pruning at " << res.min_size << "; smaller complete classes were skipped\n";
  out << "status " << (res.final_result ? "final" : "budget-exhausted (checkpoint written)") << "\n";
  out << "m = " << res.m_u << " with " << res.nondegenerate_at_max << " nondegenerate / "
      << res.total_at_max << " total classes at the maximum\n";
  for (const auto& c : res.classes_at_max) {
    out << "  n=" << c.n << " g=" << c.aut_order.to_string() << (c.degenerate ? " degenerate" : "")
        << "\n";
  }

  std::ostringstream echo;
  echo << "search --ring " << args.ring << " --dim " << args.k << " --u " << args.u;
  if (args.sets_only) echo << " --sets-only";
  if (args.min_size) echo << " --min-size " << args.min_size;
  if (args.jobs != 1) echo << " --jobs " << args.jobs;
  json j = report_base(echo.str());
  j["ring"] = ring_json(geom->ring());
  j["k"] = args.k;
  j["u"] = args.u;
  j["sets_only"] = args.sets_only;
  j["min_size"] = args.min_size;
  j["classification"] = classification_json(*geom, res);
  j["wall_time_seconds"] = wall;
  if (!args.report_path.empty()) emit_report(j, args.report_path, out);
  return res.final_result ? kOk : kBudget;
}

int cmd_verify_file(const std::string& path, int u, const std::string& report_path, std::ostream& out) {
  std::ifstream is(path);
  if (!is) {
    std::cerr << "cannot open " << path << "\n";
    return kUsage;
  }
  std::stringstream buf;
  buf << is.rdbuf();
  std::string text = buf.str();

  GeometryPool pool;
  std::string ringName = arc_file_ring_name(text);
  auto ringPtr = pool.ring(ringName);
  ArcFile file = parse_arc_file(text, *ringPtr);
  auto geom = pool.geometry(ringName, file.k);
  Arc arc = arc_from_file(file, *geom);

  int maxLoad = arc.max_load();
  bool uValid = u <= 0 || maxLoad <= u;
  CodeReport rep = code_report(arc);
  CanonResult canon = canonical_form(arc_graph(arc, u > 0 ? u : maxLoad));

  out << "arc: n=" << arc.n << " in PHG(" << file.k << "," << ringName << ")\n";
  out << "max hyperplane load " << maxLoad;
  if (u > 0) out << " (u=" << u << ": " << (uValid ? "valid" : "INVALID") << ")";
  out << "\n";
  out << "degenerate " << (rep.degenerate ? "yes" : "no") << "\n";
  out << "g = " << canon.aut_order.to_string() << "\n";
  out << "d_hom = " << rep.d_hom << "\n";
  out << "gray image: [" << rep.gray_length << "," << rep.gray_dimension << ","
      << rep.gray_min_hamming << "] over F_" << rep.gray_q
      << (rep.gray_linear ? " (linear)" : " (nonlinear)") << "\n";

  json j = report_base("verify --arc-file " + path + (u > 0 ? " --u " + std::to_string(u) : ""));
  j["ring"] = ring_json(geom->ring());
  j["k"] = file.k;
  j["n"] = arc.n;
  if (u > 0) {
    j["u"] = u;
    j["u_valid"] = uValid;
  }
  j["max_load"] = maxLoad;
  j["aut_order"] = canon.aut_order.to_string();
  j["code"] = code_report_json(rep);
  j["points"] = point_literal_array(*geom, arc.point_mults());
  if (!report_path.empty()) emit_report(j, report_path, out);
  return uValid ? kOk : kMismatch;
}

int cmd_verify_appendix(const std::string& report_path, std::ostream& out) {
  GeometryPool pool;
  bool allPass = true;
  json entries = json::array();
  for (const auto& entry : appendix_arcs()) {
    AppendixCheck check = verify_appendix_arc(entry, pool);
    allPass = allPass && check.pass;
    out << (check.pass ? "PASS" : "FAIL") << " " << entry.key << " (" << entry.n << "," << entry.u
        << ")-arc in PHG(" << entry.k << "," << entry.ring << ")";
    if (!check.pass)
      for (const auto& d : check.diffs) out << "\n      " << d;
    out << "\n";
    json e;
    e["key"] = entry.key;
    e["pass"] = check.pass;
    e["expected_g"] = entry.g;
    e["aut_order"] = check.aut_order.to_string();
    e["code"] = code_report_json(check.report);
    e["remark"] = entry.remark;
    if (!check.diffs.empty()) e["diffs"] = check.diffs;
    entries.push_back(std::move(e));
  }
  json j = report_base("verify --appendix");
  j["entries"] = entries;
  j["pass"] = allPass;
  if (!report_path.empty()) emit_report(j, report_path, out);
  return allPass ? kOk : kMismatch;
}

int cmd_table1(const std::string& scope, int jobs, double budget_per_cell,
               const std::string& checkpoint_dir, const std::string& report_path, std::ostream& out) {
  if (scope != "small" && scope != "all") {
    std::cerr << "scope must be small or all\n";
    return kUsage;
  }
  GeometryPool pool;
  bool allMatch = true, anyBudget = false;
  json cells = json::array();
  for (const auto& cell : table1_cells()) {
    if (scope == "small" && !cell.desk) continue;
    double budget = cell.desk ? 0 : budget_per_cell;
    CellRun run = run_table1_cell(cell, pool, jobs, budget, checkpoint_dir);
    bool budgetHit = !run.result.final_result;
    anyBudget = anyBudget || budgetHit;
    allMatch = allMatch && (run.match || budgetHit);
    out << (run.match ? "PASS" : (budgetHit ? "BUDGET" : "FAIL")) << " m_" << cell.u << "(" << cell.k
        << "," << cell.ring << ")";
    if (run.result.final_result)
      out << " = " << run.result.m_u << " [" << run.result.nondegenerate_at_max << "/"
          << run.result.total_at_max << " classes]";
    if (!run.match && !budgetHit)
      for (const auto& d : run.diffs) out << "\n      " << d;
    out << "\n";
    json e;
    e["ring"] = cell.ring;
    e["k"] = cell.k;
    e["u"] = cell.u;
    e["expected_m"] = cell.m;
    e["lower_bound_only"] = cell.lower_bound_only;
    if (cell.nondegenerate >= 0) {
      e["expected_nondegenerate"] = cell.nondegenerate;
      e["expected_total"] = cell.total;
    }
    e["status"] = run.result.final_result ? "final" : "budget-exhausted";
    e["m_u"] = run.result.m_u;
    e["nondegenerate_at_max"] = run.result.nondegenerate_at_max;
    e["total_at_max"] = run.result.total_at_max;
    e["match"] = run.match;
    if (!run.diffs.empty()) e["diffs"] = run.diffs;
    cells.push_back(std::move(e));
  }
  json j = report_base("table1 --scope " + scope);
  j["cells"] = cells;
  j["pass"] = allMatch && !anyBudget;
  if (!report_path.empty()) emit_report(j, report_path, out);
  if (!allMatch) return kMismatch;
  return anyBudget ? kBudget : kOk;
}

int cmd_prop7(const std::string& report_path, std::ostream& out) {
  GeometryPool pool;
  Prop7Report rep = run_prop7(pool);
  auto line = [&](bool ok, const std::string& what) {
    out << (ok ? "PASS " : "FAIL ") << what << "\n";
  };
  line(rep.census_count == 256, "hyperoval census = " + std::to_string(rep.census_count) + " (expected 256)");
  line(rep.distinct_forms == 1,
       "equivalence classes = " + std::to_string(rep.distinct_forms) + " (expected 1)");
  line(rep.stabilizer_order.equals(168),
       "stabilizer order = " + rep.stabilizer_order.to_string() + " (expected 168)");
  line(rep.collineation_order.equals(43008),
       "collineation group order = " + rep.collineation_order.to_string() + " (expected 43008)");
  line(rep.kernel_size == 256, "kernel of quotient action = " + std::to_string(rep.kernel_size) +
                                   " elements (expected 256)");
  line(rep.kernel_normal, "kernel is normal");
  line(rep.kernel_regular, "kernel acts regularly on the hyperovals");
  json j = report_base("prop7");
  j["census_count"] = rep.census_count;
  j["distinct_forms"] = rep.distinct_forms;
  j["stabilizer_order"] = rep.stabilizer_order.to_string();
  j["collineation_order"] = rep.collineation_order.to_string();
  j["kernel_size"] = rep.kernel_size;
  j["kernel_normal"] = rep.kernel_normal;
  j["kernel_regular"] = rep.kernel_regular;
  j["pass"] = rep.pass();
  if (!report_path.empty()) emit_report(j, report_path, out);
  return rep.pass() ? kOk : kMismatch;
}

int cmd_canon_dimacs(const std::string& path, std::ostream& out) {
  std::ifstream is(path);
  if (!is) {
    std::cerr << "cannot open " << path << "\n";
    return kUsage;
  }
  std::stringstream buf;
  buf << is.rdbuf();
  ColoredGraph g = parse_dimacs(buf.str());
  CanonResult res = canonical_form(g);
  Hash128 h = hash_bytes(res.form.data(), res.form.size());
  char hex[33];
  snprintf(hex, sizeof hex, "%016llx%016llx", (unsigned long long)h.lo, (unsigned long long)h.hi);
  out << "vertices " << g.n << "\n";
  out << "canonical form hash " << hex << "\n";
  out << "aut order " << res.aut_order.to_string() << "\n";
  auto orbits = automorphism_orbits(g);
  out << "orbits " << orbits.size() << "\n";
  out << "labeling";
  for (int v = 0; v < g.n; ++v) out << " " << res.labeling[v];
  out << "\n";
  return kOk;
}

}  // namespace hjarcs

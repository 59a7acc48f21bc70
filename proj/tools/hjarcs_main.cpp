#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hjarcs/cli.hpp"
#include "hjarcs/driver.hpp"

int main(int argc, char** argv) {
  CLI::App app{"hjarcs - classification and analysis of arcs in projective Hjelmslev geometries"};
  app.set_version_flag("--version", std::string(hjarcs::kToolVersion));
  app.require_subcommand(1);

  int defaultJobs = 1;
  if (const char* env = std::getenv("HJARCS_JOBS")) defaultJobs = std::max(1, atoi(env));

  // ring list | ring show <name>
  auto* ring = app.add_subcommand("ring", "inspect the supported chain rings");
  ring->require_subcommand(1);
  auto* ringList = ring->add_subcommand("list", "list ring names and presentations");
  auto* ringShow = ring->add_subcommand("show", "dump the operation tables of one ring");
  std::string ringName;
  ringShow->add_option("name", ringName, "ring name")->required();

  // geom build
  auto* geom = app.add_subcommand("geom", "geometry utilities");
  geom->require_subcommand(1);
  auto* geomBuild = geom->add_subcommand("build", "enumerate PHG(k,R) and report counts");
  std::string geomRing, geomCache, geomReport;
  int geomDim = 2;
  geomBuild->add_option("--ring", geomRing, "ring name")->required();
  geomBuild->add_option("--dim", geomDim, "dimension k (1..4)")->required();
  geomBuild->add_option("--cache", geomCache, "write a binary cache file");
  geomBuild->add_option("--report", geomReport, "write a JSON report");

  // search
  auto* search = app.add_subcommand("search", "classify complete (n,u)-arcs up to equivalence");
  hjarcs::SearchArgs sa;
  sa.jobs = defaultJobs;
  search->add_option("--ring", sa.ring, "ring name")->required();
  search->add_option("--dim", sa.k, "dimension k")->required();
  search->add_option("--u", sa.u, "hyperplane load bound u")->required();
  search->add_flag("--sets-only", sa.sets_only, "restrict to multiplicity <= 1");
  search->add_option("--min-size", sa.min_size,
                     "prune subtrees that cannot reach this size (loses smaller complete classes)");
  search->add_option("--jobs", sa.jobs, "worker threads");
  search->add_option("--budget", sa.budget_seconds, "time budget in seconds (0 = unlimited)");
  search->add_option("--checkpoint", sa.checkpoint,
                     "checkpoint file: resumed from when present, written when the budget runs out");
  search->add_flag("--full-census", sa.full_census, "keep representatives for every complete size");
  search->add_option("--report", sa.report_path, "write a JSON report");

  // verify
  auto* verify = app.add_subcommand("verify", "re-check an arc file or the bundled reference arcs");
  std::string verifyFile, verifyReport;
  int verifyU = 0;
  bool verifyAppendix = false;
  verify->add_option("--arc-file", verifyFile, "arc file to verify");
  verify->add_option("--u", verifyU, "check (n,u)-validity for this u");
  verify->add_flag("--appendix", verifyAppendix, "verify all bundled reference arcs");
  verify->add_option("--report", verifyReport, "write a JSON report");

  // table1
  auto* table1 = app.add_subcommand("table1", "reproduce the classification table");
  std::string t1Scope = "small", t1Report, t1CheckpointDir;
  int t1Jobs = defaultJobs;
  double t1Budget = 300.0;
  table1->add_option("--scope", t1Scope, "small (desk scale) or all")->required();
  table1->add_option("--jobs", t1Jobs, "worker threads per cell");
  table1->add_option("--budget-per-cell", t1Budget, "seconds per long-running cell (scope=all)");
  table1->add_option("--checkpoint-dir", t1CheckpointDir, "directory for per-cell checkpoints");
  table1->add_option("--report", t1Report, "write a JSON report");

  // prop7
  auto* prop7 = app.add_subcommand("prop7", "hyperoval structure checks in PHG(2,Z4)");
  std::string p7Report;
  prop7->add_option("--report", p7Report, "write a JSON report");

  // canon
  auto* canon = app.add_subcommand("canon", "canonical form of a colored graph (debug)");
  std::string dimacsPath;
  canon->add_option("--dimacs", dimacsPath, "DIMACS-like colored graph file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : hjarcs::kUsage;
  }

  try {
    if (ringList->parsed()) return hjarcs::cmd_ring_list(std::cout);
    if (ringShow->parsed()) return hjarcs::cmd_ring_show(ringName, std::cout);
    if (geomBuild->parsed())
      return hjarcs::cmd_geom_build(geomRing, geomDim, geomCache, geomReport, std::cout);
    if (search->parsed()) return hjarcs::cmd_search(sa, std::cout);
    if (verify->parsed()) {
      if (verifyAppendix) return hjarcs::cmd_verify_appendix(verifyReport, std::cout);
      if (verifyFile.empty()) {
        std::cerr << "verify needs --arc-file or --appendix\n";
        return hjarcs::kUsage;
      }
      return hjarcs::cmd_verify_file(verifyFile, verifyU, verifyReport, std::cout);
    }
    if (table1->parsed())
      return hjarcs::cmd_table1(t1Scope, t1Jobs, t1Budget, t1CheckpointDir, t1Report, std::cout);
    if (prop7->parsed()) return hjarcs::cmd_prop7(p7Report, std::cout);
    if (canon->parsed()) return hjarcs::cmd_canon_dimacs(dimacsPath, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return hjarcs::kUsage;
}

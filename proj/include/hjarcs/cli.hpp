#pragma once

#include <iosfwd>
#include <string>

#include "hjarcs/arcsearch.hpp"

namespace hjarcs {

// Exit codes: 0 success, 1 mismatch, 2 budget exhausted, 3 usage error.
enum ExitCode : int { kOk = 0, kMismatch = 1, kBudget = 2, kUsage = 3 };

struct SearchArgs {
  std::string ring;
  int k = 2;
  int u = 2;
  bool sets_only = false;
  int min_size = 0;
  int jobs = 1;
  double budget_seconds = 0;
  std::string checkpoint;
  bool full_census = false;
  std::string report_path;
};

int cmd_ring_list(std::ostream& out);
int cmd_ring_show(const std::string& name, std::ostream& out);
int cmd_geom_build(const std::string& ring, int k, const std::string& cache_path,
                   const std::string& report_path, std::ostream& out);
int cmd_search(const SearchArgs& args, std::ostream& out);
int cmd_verify_file(const std::string& path, int u, const std::string& report_path, std::ostream& out);
int cmd_verify_appendix(const std::string& report_path, std::ostream& out);
int cmd_table1(const std::string& scope, int jobs, double budget_per_cell,
               const std::string& checkpoint_dir, const std::string& report_path, std::ostream& out);
int cmd_prop7(const std::string& report_path, std::ostream& out);
int cmd_canon_dimacs(const std::string& path, std::ostream& out);

}  // namespace hjarcs

#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hjarcs/arcsearch.hpp"
#include "hjarcs/codes.hpp"
#include "hjarcs/geometry.hpp"
#include "hjarcs/tables.hpp"

namespace hjarcs {

inline constexpr const char* kToolName = "hjarcs";
inline constexpr const char* kToolVersion = "1.0.0";

// Shared cache of built rings and geometries.
class GeometryPool {
 public:
  std::shared_ptr<const RingTable> ring(const std::string& name);
  std::shared_ptr<const Geometry> geometry(const std::string& ring, int k);

 private:
  std::map<std::string, std::shared_ptr<const RingTable>> rings_;
  std::map<std::pair<std::string, int>, std::shared_ptr<const Geometry>> geoms_;
};

// ---- appendix verification --------------------------------------------------

struct AppendixCheck {
  std::string key;
  bool pass = false;
  std::vector<std::string> diffs;  // per-field mismatches
  int max_load = 0;
  BigUInt aut_order;
  CodeReport report;
};

AppendixCheck verify_appendix_arc(const AppendixArc& entry, GeometryPool& pool);
std::vector<AppendixCheck> verify_appendix(GeometryPool& pool);

// ---- Table 1 ---------------------------------------------------------------

struct CellRun {
  Table1Cell cell;
  ClassificationResult result;
  bool match = false;
  std::vector<std::string> diffs;
};

CellRun run_table1_cell(const Table1Cell& cell, GeometryPool& pool, int jobs, double budget_seconds,
                        const std::string& checkpoint_dir);

// ---- Proposition 7 -----------------------------------------------------------

struct Prop7Report {
  int64_t census_count = 0;
  int64_t distinct_forms = 0;
  BigUInt stabilizer_order;
  BigUInt collineation_order;
  int64_t kernel_size = 0;
  bool kernel_normal = false;
  bool kernel_regular = false;

  bool pass() const {
    return census_count == 256 && distinct_forms == 1 && stabilizer_order.equals(168) &&
           collineation_order.equals(43008) && kernel_size == 256 && kernel_normal && kernel_regular;
  }
};

Prop7Report run_prop7(GeometryPool& pool);

}  // namespace hjarcs

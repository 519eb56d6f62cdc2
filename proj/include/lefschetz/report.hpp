#pragma once

#include <string>
#include <vector>

#include "lefschetz/checks.hpp"
#include "lefschetz/corpus_io.hpp"

namespace lefschetz {

/// Aggregated verdict table for one model. Both renderings are produced from
/// this struct, so the human and machine outputs always agree.
struct Report {
  std::string model_id;
  int n = 0;
  std::vector<int> basic_dims;
  std::vector<int> total_dims;
  bool exact = false;
  bool pd_applicable = false;
  bool pd_nonsingular = false;
  SearchPolicy policy;

  std::vector<Verdict> thl, p1, p2, hl;  // indexed by degree 0..n
  std::optional<Verdict> equivalence;    // at k = n; absent when PD fails
  Verdict parity;
  bool lefschetz = false;
};

/// Runs every per-degree check (degrees fan out across worker threads; the
/// result order is by degree regardless of completion order).
Report build_report(const FlowModel& m, const SearchPolicy& policy);

std::string render_human(const Report& r);
/// Deterministic JSON, byte-stable for golden files.
std::string render_machine(const Report& r);

/// JSON text for one verdict (shared by the report and the CLI).
std::string verdict_to_json_string(const Verdict& v);

}  // namespace lefschetz

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rcheck/choosability.hpp"
#include "rcheck/discharging.hpp"

namespace rcheck {

struct ReportItem {
  std::string suite;
  std::string item;
  std::string verdict;
  std::string value;   // exact numbers as p/q
  std::string detail;  // witness, certificate or failure reason
  bool passed = false;
  bool budget = false;  // the item stopped on a BudgetError
  double seconds = 0;   // text output only
};

struct RunReport {
  std::vector<ReportItem> items;

  bool passed() const;
  bool budget_exceeded() const;
  // 0 when every item passes, 1 on any failed verdict, else 3 when only
  // budget stops remain.
  int exit_status() const;

  // Aligned table with timings and a summary line.
  std::string render_text() const;
  // suite\titem\tverdict\tvalue\tdetail per line; no timings, so two runs
  // on the same fixtures give identical bytes.
  std::string render_records() const;
};

struct RunOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
};

// Entries whose merges the large-configuration tables cover.
const std::vector<std::string>& default_merge_entries();

// Reducibility of every config block in each file, plus the Alon-Tarsi
// certificates of `orientations_path` (if given) checked against the
// matching entries.
RunReport cmd_verify_catalog(const std::vector<std::string>& paths,
                             const std::optional<std::string>& orientations_path,
                             const RunOptions& options);

// Pair classification, list verdicts and the triple check for each named
// entry (all of default_merge_entries() when `names` is empty). InputError
// on an unknown entry or forbidden_len < 4.
RunReport cmd_verify_merges(const std::string& catalog_path, const std::vector<std::string>& names,
                            int forbidden_len, const RunOptions& options);

// Ledger suite, conservation, vertex and face bounds, charge sums over
// plane.fix and, for cc7, the LP audit. Every variant when none is given.
RunReport cmd_audit_discharging(const std::string& fixtures_dir, std::optional<Variant> variant);

// `f_spec` is one number (uniform) or a comma-separated list, one per
// vertex; empty means the list sizes of a config block.
RunReport cmd_find_at(const std::string& path, const std::string& name, const std::string& f_spec);

std::string format_lists(const ListAssignment& lists);

}  // namespace rcheck

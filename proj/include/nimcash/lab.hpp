// Theorem verification harness: (d,e) winner grids, fast-vs-oracle
// discrepancy reports, staircase step measurement and grid rendering.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nimcash/core.hpp"
#include "nimcash/fast.hpp"
#include "nimcash/verdict.hpp"

namespace nimcash {

/// Inclusive integer interval.
struct Range {
  Count lo = 0;
  Count hi = 0;

  Count size() const { return hi - lo + 1; }
  bool contains(Count x) const { return lo <= x && x <= hi; }
  friend bool operator==(const Range&, const Range&) = default;
};

enum class GridSource { Oracle, Fast };

std::string_view to_string(GridSource s);
GridSource parse_source(std::string_view text);

/// Winner for every (d,e) in d_range x e_range, stored column-major in d.
struct StaircaseGrid {
  RuleSet rules{1};
  Count n = 0;
  Range d_range;
  Range e_range;
  GridSource source = GridSource::Oracle;
  std::vector<Player> cells;
  /// Decision path per cell; filled for Fast grids only.
  std::vector<RegimeCase> details;

  std::size_t index(Count d, Count e) const {
    return static_cast<std::size_t>((d - d_range.lo) * e_range.size() + (e - e_range.lo));
  }
  Player at(Count d, Count e) const { return cells[index(d, e)]; }
};

StaircaseGrid build_grid(const RuleSet& rules, Count n, Range d_range, Range e_range,
                         GridSource source, FastOptions options = {});

/// A point where the fast evaluator and the oracle disagree. Cash values may
/// be infinite when the point comes from a sweep's infinity axis.
struct Discrepancy {
  Count n = 0;
  Cash d;
  Cash e;
  WinnerVerdict fast;
  Player oracle = Player::P1;
};

struct DiscrepancyReport {
  std::optional<RuleSet> rules;
  /// Set when the sweep was a no-op (unsupported family).
  bool skipped = false;
  std::vector<Discrepancy> entries;
  std::map<Regime, std::size_t> checked;
  std::map<Regime, std::size_t> mismatched;

  bool empty() const { return entries.empty(); }
  std::size_t total_checked() const;
};

/// Cell-by-cell comparison. Throws RangeMismatch unless rules, n and ranges
/// agree. When one grid is Fast its verdict details populate the entries.
DiscrepancyReport diff_grids(const StaircaseGrid& a, const StaircaseGrid& b);

struct StepGeometry {
  Count step_width = 0;
  Count step_height = 0;
  /// (d, e) where each run of the frontier starts: e is the least Player 2
  /// cash that wins in that column (e_range.hi + 1 if Player 1 wins the
  /// whole column).
  std::vector<std::pair<Count, Count>> frontier;
};

/// Throws NotAStaircase if any column is not P1-below/P2-above, the frontier
/// decreases, there is only one run, or the interior run lengths or the
/// jumps between runs disagree.
StepGeometry measure_steps(const StaircaseGrid& grid);

/// Largest finite cash swept at pile size n: a fixed amount, or n + slack.
struct CashBound {
  Count value = 0;
  bool relative = false;

  CashBound(Count absolute) : value(absolute) {}  // NOLINT: implicit by intent
  static CashBound n_plus(Count slack) {
    CashBound b(slack);
    b.relative = true;
    return b;
  }
  Count at(Count n) const { return relative ? n + value : value; }
};

/// Exhaustive fast-vs-oracle comparison over n <= n_max and d, e in
/// [0, cash_max.at(n)] plus infinity, entries in (n,d,e) order. No-op
/// report for unsupported families.
DiscrepancyReport sweep(const RuleSet& rules, Count n_max, CashBound cash_max,
                        FastOptions options = {});

/// One sweep per rule set, run concurrently; results in input order.
std::vector<DiscrepancyReport> sweep_all(const std::vector<RuleSet>& rule_sets, Count n_max,
                                         CashBound cash_max, FastOptions options = {});

enum class GridFormat { Csv, Json, Svg };

GridFormat parse_format(std::string_view text);

std::string render_grid(const StaircaseGrid& grid, GridFormat format);

/// Reads back a `d,e,winner` document. Ranges are the bounding box of the
/// rows; every cell in it must be present exactly once.
StaircaseGrid parse_grid_csv(std::string_view text, const RuleSet& rules, Count n,
                             GridSource source);

/// Reads back the JSON produced by render_grid.
StaircaseGrid parse_grid_json(std::string_view text);

/// CSV listing of a report's entries (`rules,n,d,e,fast,regime,case,oracle`).
std::string render_report_csv(const DiscrepancyReport& report);

}  // namespace nimcash

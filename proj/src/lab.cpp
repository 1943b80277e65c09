#include "nimcash/lab.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "nimcash/oracle.hpp"

namespace nimcash {

std::string_view to_string(GridSource s) { return s == GridSource::Oracle ? "oracle" : "fast"; }

GridSource parse_source(std::string_view text) {
  if (text == "oracle") return GridSource::Oracle;
  if (text == "fast") return GridSource::Fast;
  throw Error(ErrorCode::BadRequest, "source must be 'oracle' or 'fast'");
}

std::size_t DiscrepancyReport::total_checked() const {
  std::size_t total = 0;
  for (const auto& [regime, count] : checked) total += count;
  return total;
}

StaircaseGrid build_grid(const RuleSet& rules, Count n, Range d_range, Range e_range,
                         GridSource source, FastOptions options) {
  if (n < 0 || d_range.lo < 0 || e_range.lo < 0 || d_range.hi < d_range.lo ||
      e_range.hi < e_range.lo) {
    throw Error(ErrorCode::BadRequest, "invalid grid ranges");
  }
  StaircaseGrid grid;
  grid.rules = rules;
  grid.n = n;
  grid.d_range = d_range;
  grid.e_range = e_range;
  grid.source = source;
  grid.cells.reserve(static_cast<std::size_t>(d_range.size() * e_range.size()));

  if (source == GridSource::Oracle) {
    CashOracle oracle(rules);
    for (Count d = d_range.lo; d <= d_range.hi; ++d)
      for (Count e = e_range.lo; e <= e_range.hi; ++e) grid.cells.push_back(oracle.winner(n, d, e));
  } else {
    FastWinner fast(rules, options);
    grid.details.reserve(grid.cells.capacity());
    for (Count d = d_range.lo; d <= d_range.hi; ++d) {
      for (Count e = e_range.lo; e <= e_range.hi; ++e) {
        const WinnerVerdict v = fast(n, d, e);
        grid.cells.push_back(v.winner);
        grid.details.push_back(v.detail);
      }
    }
  }
  return grid;
}

DiscrepancyReport diff_grids(const StaircaseGrid& a, const StaircaseGrid& b) {
  if (!(a.rules == b.rules) || a.n != b.n || !(a.d_range == b.d_range) ||
      !(a.e_range == b.e_range)) {
    throw Error(ErrorCode::RangeMismatch, "grids cover different positions");
  }
  // Report from the fast side's point of view when there is one.
  const bool swap = a.source == GridSource::Oracle && b.source == GridSource::Fast;
  const StaircaseGrid& lhs = swap ? b : a;
  const StaircaseGrid& rhs = swap ? a : b;

  DiscrepancyReport report;
  report.rules = a.rules;
  for (Count d = a.d_range.lo; d <= a.d_range.hi; ++d) {
    for (Count e = a.e_range.lo; e <= a.e_range.hi; ++e) {
      const std::size_t i = a.index(d, e);
      WinnerVerdict v{lhs.cells[i], Regime::Oracle, {}};
      if (lhs.source == GridSource::Fast && i < lhs.details.size()) {
        v.detail = lhs.details[i];
        v.regime = regime_of(v.detail);
      }
      ++report.checked[v.regime];
      if (lhs.cells[i] != rhs.cells[i]) {
        ++report.mismatched[v.regime];
        report.entries.push_back({a.n, d, e, v, rhs.cells[i]});
      }
    }
  }
  return report;
}

StepGeometry measure_steps(const StaircaseGrid& grid) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::NotAStaircase, why); };

  std::vector<Count> frontier;
  for (Count d = grid.d_range.lo; d <= grid.d_range.hi; ++d) {
    Count first_p2 = grid.e_range.hi + 1;
    for (Count e = grid.e_range.lo; e <= grid.e_range.hi; ++e) {
      const Player w = grid.at(d, e);
      if (w == Player::P2 && first_p2 > e) first_p2 = e;
      if (w == Player::P1 && first_p2 <= e) {
        fail("column d=" + std::to_string(d) + " has a Player 1 cell above a Player 2 cell");
      }
    }
    if (!frontier.empty() && first_p2 < frontier.back()) {
      fail("frontier decreases at d=" + std::to_string(d));
    }
    frontier.push_back(first_p2);
  }

  struct Run {
    Count d;
    Count e;
    Count length;
  };
  std::vector<Run> runs;
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    const Count d = grid.d_range.lo + static_cast<Count>(i);
    if (!runs.empty() && runs.back().e == frontier[i]) {
      ++runs.back().length;
    } else {
      runs.push_back({d, frontier[i], 1});
    }
  }
  if (runs.size() < 2) fail("frontier is flat");

  StepGeometry g;
  for (const Run& r : runs) g.frontier.emplace_back(r.d, r.e);

  // The first and last runs may be cut off by the grid edges.
  if (runs.size() > 2) {
    g.step_width = runs[1].length;
    for (std::size_t i = 1; i + 1 < runs.size(); ++i) {
      if (runs[i].length != g.step_width) fail("step widths differ");
    }
  } else {
    g.step_width = std::max(runs[0].length, runs[1].length);
  }
  g.step_height = runs[1].e - runs[0].e;
  for (std::size_t i = 1; i < runs.size(); ++i) {
    if (runs[i].e - runs[i - 1].e != g.step_height) fail("step heights differ");
  }
  return g;
}

DiscrepancyReport sweep(const RuleSet& rules, Count n_max, CashBound cash_max,
                        FastOptions options) {
  DiscrepancyReport report;
  report.rules = rules;
  if (!classify_family(rules).supported()) {
    report.skipped = true;
    return report;
  }
  FastWinner fast(rules, options);
  CashOracle oracle(rules);

  for (Count n = 0; n <= n_max; ++n) {
    std::vector<Cash> axis;
    for (Count c = 0; c <= cash_max.at(n); ++c) axis.emplace_back(c);
    axis.push_back(Cash::infinite());
    for (const Cash& d : axis) {
      for (const Cash& e : axis) {
        const WinnerVerdict v = fast(n, d, e);
        const Player truth = oracle.winner(n, d, e);
        ++report.checked[v.regime];
        if (v.winner != truth) {
          ++report.mismatched[v.regime];
          report.entries.push_back({n, d, e, v, truth});
        }
      }
    }
  }
  return report;
}

std::vector<DiscrepancyReport> sweep_all(const std::vector<RuleSet>& rule_sets, Count n_max,
                                         CashBound cash_max, FastOptions options) {
  // Each sweep owns its oracle memo, so rule sets are independent tasks.
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 4));
  std::vector<DiscrepancyReport> out(rule_sets.size());
  for (std::size_t start = 0; start < rule_sets.size(); start += workers) {
    std::vector<std::future<DiscrepancyReport>> batch;
    const std::size_t stop = std::min(rule_sets.size(), start + workers);
    for (std::size_t i = start; i < stop; ++i) {
      batch.push_back(std::async(std::launch::async, [&, i] {
        return sweep(rule_sets[i], n_max, cash_max, options);
      }));
    }
    for (std::size_t i = start; i < stop; ++i) out[i] = batch[i - start].get();
  }
  return out;
}

}  // namespace nimcash

// Constant-time winner evaluation from the class thresholds.
//
// Dispatch: if either player is upper class the upper-regime rules decide;
// otherwise if either is lower class the lower-regime rules decide;
// otherwise both are middle class and the family's staircase decides.
// Anything the rules do not cover goes to the oracle.
#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "nimcash/classes.hpp"
#include "nimcash/core.hpp"
#include "nimcash/oracle.hpp"
#include "nimcash/verdict.hpp"

namespace nimcash {

struct FastOptions {
  /// Read the {1,L} staircase's residue case 2/4 opening bullets literally
  /// (both concluding Player 2). The default follows the plotted staircase,
  /// where the first bullet is a Player 1 region.
  bool strict_text = false;
};

/// Rule for d >= U_1(n) - d_offset. Player 1 wins outright, or iff
/// e < U_2(n) - e_offset when `conditional`.
struct TopRule {
  Count d_offset = 0;
  bool conditional = false;
  Count e_offset = 0;

  friend bool operator==(const TopRule&, const TopRule&) = default;
};

/// One residue case of a staircase theorem. Band k covers
///   M_1 + origin + stride*k <= d < M_1 + origin + stride*(k+1)
/// and Player 1 wins there iff e < M_2 + e_offset + stride*k. Bands are
/// listed from k = first_band; below the first listed band Player 2 wins.
struct StaircaseCase {
  int number = 0;
  Count origin = 0;
  Count stride = 1;
  Count e_offset = 0;
  Count first_band = 0;
  TopRule top;

  friend bool operator==(const StaircaseCase&, const StaircaseCase&) = default;
};

/// Half-open d interval [d_low, d_high); Player 1 wins iff e < e_threshold.
struct StaircaseBand {
  Count k = 0;
  Count d_low = 0;
  Count d_high = 0;
  Count e_threshold = 0;

  friend bool operator==(const StaircaseBand&, const StaircaseBand&) = default;
};

/// Theorem case for n's residue class. Throws UnsupportedFamily.
StaircaseCase staircase_case(const FamilyId& family, Count n, FastOptions options = {});

/// The listed bands for (family, n), clipped at the top-case threshold
/// U_1 - top.d_offset. Empty if the top case starts at or below the first band.
std::vector<StaircaseBand> staircase_bands(const FamilyId& family, Count n,
                                           const ClassProfile& profile,
                                           FastOptions options = {});

/// Throws RegimeMismatch unless at least one player is upper class.
WinnerVerdict winner_upper_regime(const ClassProfile& profile, const Cash& d, const Cash& e);

/// Throws RegimeMismatch unless a player is lower class and neither is upper;
/// UncoveredPoint if no rule applies.
WinnerVerdict winner_lower_regime(const ClassProfile& profile, Count d, Count e);

/// Throws RegimeMismatch unless both players are middle class.
WinnerVerdict winner_staircase(const FamilyId& family, Count n, Count d, Count e,
                               const ClassProfile& profile, FastOptions options = {});

/// Total: unsupported families and uncovered points are answered by the
/// oracle with regime Fallback.
WinnerVerdict winner_fast(const RuleSet& rules, Count n, const Cash& d, const Cash& e,
                          FastOptions options = {});

/// winner_fast bound to one rule set, reusing the recursive U table and the
/// fallback oracle across queries. Not safe for concurrent use.
class FastWinner {
 public:
  explicit FastWinner(RuleSet rules, FastOptions options = {});

  WinnerVerdict operator()(Count n, const Cash& d, const Cash& e);

  const RuleSet& rules() const { return rules_; }
  const FamilyId& family() const { return family_; }
  CashOracle& oracle() { return oracle_; }

 private:
  WinnerVerdict fallback(Count n, const Cash& d, const Cash& e);

  RuleSet rules_;
  FamilyId family_;
  FastOptions options_;
  CashOracle oracle_;
  std::optional<UpperTable> upper_;
};

}  // namespace nimcash

// Winner plus the decision path that produced it.
#pragma once

#include <string>

#include "nimcash/core.hpp"

namespace nimcash {

enum class Regime { Oracle, ClassicFormula, UpperRegime, LowerRegime, Staircase, Fallback };

std::string_view to_string(Regime r);

/// Which rule decided a verdict. Upper/Lower carry the theorem bullet number
/// in `bullet`; staircase kinds carry the residue case and band index.
struct RegimeCase {
  enum class Kind {
    Oracle,
    UpperCase,
    LowerCase,
    StaircaseBand,
    StaircaseBottom,
    StaircaseTop,
    OracleFallback,
  };

  Kind kind = Kind::Oracle;
  int bullet = 0;            // 1-3 for UpperCase, 1-5 for LowerCase
  FamilyId family;           // staircase kinds only
  int residue_case = 0;      // theorem case number (1-based) selected by n's residue
  Count band = 0;            // StaircaseBand only
  Player side = Player::P1;  // which side of the e-threshold the point fell on

  friend bool operator==(const RegimeCase&, const RegimeCase&) = default;
};

std::string describe(const RegimeCase& c);

/// The regime a decision path belongs to.
Regime regime_of(const RegimeCase& c);

struct WinnerVerdict {
  Player winner = Player::P2;
  Regime regime = Regime::Oracle;
  RegimeCase detail;

  friend bool operator==(const WinnerVerdict&, const WinnerVerdict&) = default;
};

}  // namespace nimcash

// Upper, middle and lower class thresholds.
//
// U_p(n) is the least cash letting player p keep playing the classical
// strategy; M_p(n) is the least cash letting p take min(A) every turn until
// the game ends. A player with cash c is Upper iff c >= U_p(n), otherwise
// Middle iff c >= M_p(n), otherwise Lower.
#pragma once

#include <vector>

#include "nimcash/core.hpp"

namespace nimcash {

struct UPair {
  Count u1 = 0;
  Count u2 = 0;

  Count of(Player p) const { return p == Player::P1 ? u1 : u2; }
  friend bool operator==(const UPair&, const UPair&) = default;
};

/// n = k * modulus + i, 0 <= i < modulus.
struct ResidueDecomposition {
  Count k = 0;
  Count i = 0;
  Count modulus = 1;

  static ResidueDecomposition of(Count n, Count modulus) {
    return {n / modulus, n % modulus, modulus};
  }
};

struct MiddlePair {
  Count m1 = 0;
  Count m2 = 0;

  Count of(Player p) const { return p == Player::P1 ? m1 : m2; }
  friend bool operator==(const MiddlePair&, const MiddlePair&) = default;
};

enum class ClassBand { Lower, Middle, Upper };

std::string_view to_string(ClassBand b);

struct ClassProfile {
  UPair u;
  MiddlePair m;
  ClassBand band1 = ClassBand::Lower;
  ClassBand band2 = ClassBand::Lower;
  Player classic_winner = Player::P2;
};

/// Winner-side and loser-side upper thresholds from the family closed forms.
struct UpperClosed {
  Count win = 0;
  Count lose = 0;

  friend bool operator==(const UpperClosed&, const UpperClosed&) = default;
};

/// U_1, U_2 by the recursive definition, memoized over n. The W(n)=2 branch
/// for U_1 minimizes U_2(n-a)+a over the moves with U_1(n-a) = U_2(n), taken
/// literally; DefinitionUnsatisfiable is thrown if no move qualifies.
class UpperTable {
 public:
  explicit UpperTable(RuleSet rules);

  UPair at(Count n);
  Player classic_winner(Count n);

 private:
  void extend_to(Count n);

  RuleSet rules_;
  std::vector<Player> classic_;
  std::vector<UPair> upper_;
};

UPair upper_recursive(const RuleSet& rules, Count n);

/// Throws UnsupportedFamily; NonIntegralValue if a halved term is odd.
UpperClosed upper_closed(const FamilyId& family, Count n);

/// Maps (U_win, U_lose) onto players through the classical winner.
UPair assign_upper(const UpperClosed& closed, Player classic_winner);

/// Parity formula for {1,L} and {1,L,L+1}.
MiddlePair middle_thresholds(Count n);

ClassBand band_of(const Cash& cash, Count middle, Count upper);

ClassProfile make_profile(UPair u, MiddlePair m, Player classic_winner, const Cash& d,
                          const Cash& e);

/// Closed forms for supported families, recursive U otherwise.
ClassProfile classify(const RuleSet& rules, Count n, const Cash& d, const Cash& e);

/// Closed forms only; O(1). Throws UnsupportedFamily.
ClassProfile classify(const FamilyId& family, Count n, const Cash& d, const Cash& e);

}  // namespace nimcash

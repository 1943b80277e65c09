// Classical one-pile NIM(A;n): linear DP for any move set and the residue
// characterizations for the {1,L} and {1,L,L+1} families.
#pragma once

#include <vector>

#include "nimcash/core.hpp"

namespace nimcash {

/// W(n)=P2 iff n mod modulus is one of losing_residues (ascending).
struct ResidueRule {
  Count modulus = 1;
  std::vector<Count> losing_residues;

  bool is_losing(Count n) const;
};

/// Winner table W(0..n) for classical NIM, built in O(n |A|).
std::vector<Player> classic_table(const RuleSet& rules, Count n);

Player win_classic_dp(const RuleSet& rules, Count n);

/// Throws UnsupportedFamily.
ResidueRule residue_rule(const FamilyId& family);

/// Throws UnsupportedFamily.
Player win_classic_closed(const FamilyId& family, Count n);

}  // namespace nimcash

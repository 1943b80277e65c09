#include "nimcash/classic.hpp"

#include <algorithm>

namespace nimcash {

bool ResidueRule::is_losing(Count n) const {
  return std::binary_search(losing_residues.begin(), losing_residues.end(), n % modulus);
}

std::vector<Player> classic_table(const RuleSet& rules, Count n) {
  std::vector<Player> w(static_cast<std::size_t>(n + 1), Player::P2);
  for (Count s = 0; s <= n; ++s) {
    for (Count a : rules.moves()) {
      if (a > s) break;
      if (w[static_cast<std::size_t>(s - a)] == Player::P2) {
        w[static_cast<std::size_t>(s)] = Player::P1;
        break;
      }
    }
  }
  return w;
}

Player win_classic_dp(const RuleSet& rules, Count n) { return classic_table(rules, n).back(); }

namespace {

// The losing residues are always the even numbers 0, 2, ..., last.
struct ResidueShape {
  Count modulus;
  Count last;
};

ResidueShape shape_of(const FamilyId& family) {
  const Count l = family.l;
  switch (family.kind) {
    case FamilyKind::OneTwo:
    case FamilyKind::OneLEven:
      return {l + 1, l - 2};
    case FamilyKind::OneTwoThree:
    case FamilyKind::OneLL1Even:
      return {2 * l, l - 2};
    case FamilyKind::OneLL1Odd:
      return {2 * l + 1, l - 1};
    case FamilyKind::Unsupported:
      break;
  }
  throw Error(ErrorCode::UnsupportedFamily, "no residue rule for this move set");
}

}  // namespace

ResidueRule residue_rule(const FamilyId& family) {
  const auto shape = shape_of(family);
  ResidueRule rule;
  rule.modulus = shape.modulus;
  for (Count r = 0; r <= shape.last; r += 2) rule.losing_residues.push_back(r);
  return rule;
}

Player win_classic_closed(const FamilyId& family, Count n) {
  const auto shape = shape_of(family);
  const Count r = n % shape.modulus;
  return (r % 2 == 0 && r <= shape.last) ? Player::P2 : Player::P1;
}

}  // namespace nimcash

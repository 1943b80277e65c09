#include "nimcash/classes.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "nimcash/classic.hpp"

namespace nimcash {

std::string_view to_string(ClassBand b) {
  switch (b) {
    case ClassBand::Lower: return "lower";
    case ClassBand::Middle: return "middle";
    case ClassBand::Upper: return "upper";
  }
  return "unknown";
}

UpperTable::UpperTable(RuleSet rules) : rules_(std::move(rules)) {}

void UpperTable::extend_to(Count n) {
  const auto have = static_cast<Count>(upper_.size());
  if (n < have) return;
  classic_ = classic_table(rules_, n);
  upper_.resize(static_cast<std::size_t>(n + 1));

  auto w = [&](Count s) { return classic_[static_cast<std::size_t>(s)]; };
  auto u = [&](Count s) -> UPair& { return upper_[static_cast<std::size_t>(s)]; };

  for (Count s = have; s <= n; ++s) {
    if (s < rules_.min_move()) {
      u(s) = {0, 0};
      continue;
    }
    Count max_u1 = std::numeric_limits<Count>::min();
    for (Count a : rules_.moves()) {
      if (a > s) break;
      max_u1 = std::max(max_u1, u(s - a).u1);
    }
    const Count u2 = max_u1;

    std::optional<Count> u1;
    for (Count a : rules_.moves()) {
      if (a > s) break;
      const bool eligible = w(s) == Player::P1 ? w(s - a) == Player::P2 : u(s - a).u1 == u2;
      if (!eligible) continue;
      const Count candidate = u(s - a).u2 + a;
      if (!u1 || candidate < *u1) u1 = candidate;
    }
    if (!u1) {
      upper_.resize(static_cast<std::size_t>(s));
      throw Error(ErrorCode::DefinitionUnsatisfiable,
                  "no move satisfies the U_1 side condition at n=" + std::to_string(s));
    }
    u(s) = {*u1, u2};
  }
}

UPair UpperTable::at(Count n) {
  extend_to(n);
  return upper_[static_cast<std::size_t>(n)];
}

Player UpperTable::classic_winner(Count n) {
  extend_to(n);
  return classic_[static_cast<std::size_t>(n)];
}

UPair upper_recursive(const RuleSet& rules, Count n) { return UpperTable(rules).at(n); }

namespace {

Count ceil_half(Count x) { return (x + 1) / 2; }
Count floor_half(Count x) { return x / 2; }

// Several theorem terms are written with halves (3Lk/2, L(k - 1/2), ...).
// They are evaluated doubled and halved here; an odd value means the wrong
// branch was taken.
Count halve_exact(Count doubled) {
  if (doubled % 2 != 0) {
    throw Error(ErrorCode::NonIntegralValue,
                "closed form produced a non-integral value " + std::to_string(doubled) + "/2");
  }
  return doubled / 2;
}

UpperClosed upper_one_l(Count l, Count n) {
  const auto [k, i, modulus] = ResidueDecomposition::of(n, l + 1);
  UpperClosed out;
  out.win = i < l ? l * k + ceil_half(i) : l * (k + 1);
  if (n < l) {
    out.lose = floor_half(n);
  } else if (i < l) {
    out.lose = halve_exact(l * (2 * k - 1)) + floor_half(i) + 1;
  } else {
    out.lose = halve_exact(l * (2 * k + 1));
  }
  return out;
}

// {1,L,L+1}: `doubled_base` is 2 * (base per period) and `win_split` /
// `lose_split` are where the second half-period begins.
UpperClosed upper_one_ll1(Count l, Count n, Count modulus, Count doubled_base_per_k,
                          Count win_split, Count lose_split) {
  const auto [k, i, m] = ResidueDecomposition::of(n, modulus);
  const Count base = halve_exact(doubled_base_per_k * k);
  UpperClosed out;
  out.win = i < win_split ? base + ceil_half(i) : base + l + ceil_half(i - l);
  out.lose = i < lose_split ? base + floor_half(i) : base + l + floor_half(i - l);
  return out;
}

}  // namespace

UpperClosed upper_closed(const FamilyId& family, Count n) {
  const Count l = family.l;
  switch (family.kind) {
    case FamilyKind::OneTwo:
    case FamilyKind::OneLEven:
      return upper_one_l(l, n);
    case FamilyKind::OneTwoThree:
    case FamilyKind::OneLL1Even:
      return upper_one_ll1(l, n, 2 * l, 3 * l, l, l + 1);
    case FamilyKind::OneLL1Odd:
      return upper_one_ll1(l, n, 2 * l + 1, 3 * l + 1, l + 1, l + 2);
    case FamilyKind::Unsupported:
      break;
  }
  throw Error(ErrorCode::UnsupportedFamily, "no closed-form U for this move set");
}

UPair assign_upper(const UpperClosed& closed, Player classic_winner) {
  return classic_winner == Player::P1 ? UPair{closed.win, closed.lose}
                                      : UPair{closed.lose, closed.win};
}

MiddlePair middle_thresholds(Count n) {
  if (n % 2 == 0) return {n / 2 + 1, n / 2};
  return {(n + 1) / 2, (n + 1) / 2};
}

ClassBand band_of(const Cash& cash, Count middle, Count upper) {
  if (cash >= upper) return ClassBand::Upper;
  if (cash >= middle) return ClassBand::Middle;
  return ClassBand::Lower;
}

ClassProfile make_profile(UPair u, MiddlePair m, Player classic_winner, const Cash& d,
                          const Cash& e) {
  ClassProfile p;
  p.u = u;
  p.m = m;
  p.classic_winner = classic_winner;
  p.band1 = band_of(d, m.m1, u.u1);
  p.band2 = band_of(e, m.m2, u.u2);
  return p;
}

ClassProfile classify(const FamilyId& family, Count n, const Cash& d, const Cash& e) {
  const Player w = win_classic_closed(family, n);
  return make_profile(assign_upper(upper_closed(family, n), w), middle_thresholds(n), w, d, e);
}

ClassProfile classify(const RuleSet& rules, Count n, const Cash& d, const Cash& e) {
  const FamilyId family = classify_family(rules);
  if (family.supported()) return classify(family, n, d, e);
  UpperTable table(rules);
  return make_profile(table.at(n), middle_thresholds(n), table.classic_winner(n), d, e);
}

}  // namespace nimcash

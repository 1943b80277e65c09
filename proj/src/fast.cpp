#include "nimcash/fast.hpp"

#include <algorithm>

namespace nimcash {

namespace {

constexpr TopRule p1_top(Count d_offset) { return {d_offset, false, 0}; }
constexpr TopRule split_top(Count d_offset, Count e_offset) { return {d_offset, true, e_offset}; }

StaircaseCase make_case(int number, Count origin, Count stride, Count e_offset,
                        Count first_band, TopRule top) {
  return {number, origin, stride, e_offset, first_band, top};
}

// {1,2} and {1,2,3}: unit-width steps. Shape A starts at M_1 with
// threshold M_2+1; shape B loses for d < M_1+1 and then mirrors A shifted
// one dollar right.
StaircaseCase unit_a(int number, TopRule top) { return make_case(number, 0, 1, 1, 0, top); }
StaircaseCase unit_b(int number, TopRule top) { return make_case(number, 1, 1, 1, 0, top); }

StaircaseCase case_one_two(Count n) {
  switch (n % 6) {
    case 0: return unit_a(1, split_top(1, 1));
    case 1:
    case 5: return unit_b(2, p1_top(1));
    case 2:
    case 4: return unit_a(3, p1_top(1));
    default: return unit_b(4, split_top(1, 1));
  }
}

StaircaseCase case_one_two_three(Count n) {
  switch (n % 4) {
    case 0: return unit_a(1, split_top(1, 1));
    case 2: return unit_a(3, p1_top(1));
    default: return unit_b(2, p1_top(1));
  }
}

StaircaseCase case_one_l(Count l, Count n, FastOptions options) {
  const Count h = l / 2;
  const Count r = n % (2 * l + 2);
  const bool even = r % 2 == 0;
  // Odd residues: band k=0 is [M_1, M_1+L-1) with threshold M_2+L/2-1. The
  // literal text lists that region as Player 2 throughout.
  const Count odd_first = options.strict_text ? 1 : 0;
  if (even && r <= l - 2) return make_case(1, h - 1, l - 1, l - 1, 0, split_top(l - 1, l - 1));
  if (!even && (r <= l - 1 || r == 2 * l + 1))
    return make_case(2, 0, l - 1, h - 1, odd_first, p1_top(l - 1));
  if (even) return make_case(3, h - 1, l - 1, l - 1, 0, p1_top(l - 1));
  return make_case(4, 0, l - 1, h - 1, odd_first, split_top(l - 1, l - 1));
}

StaircaseCase case_one_ll1_even(Count l, Count n) {
  const Count h = l / 2;
  const Count r = n % (2 * l);
  if (r % 2 == 1) return make_case(2, 0, h, h - 1, 0, p1_top(h));
  if (r == l) return make_case(3, -1, h, 0, 1, p1_top(h));
  return make_case(1, -1, h, 0, 1, split_top(h, h));
}

StaircaseCase case_one_ll1_odd(Count l, Count n) {
  const Count h = (l - 1) / 2;
  const Count r = n % (4 * l + 2);
  const bool even = r % 2 == 0;
  auto shifted = [&](int number, TopRule top) { return make_case(number, h, l, l, 0, top); };
  auto aligned = [&](int number, TopRule top) { return make_case(number, 0, l, h, 0, top); };
  if (even && (r <= l - 1 || r >= 3 * l + 3)) return shifted(1, p1_top(h));
  if (!even && (r <= l || r >= 3 * l + 4)) return aligned(2, split_top(l, h));
  if (r == l + 1) return shifted(3, p1_top(l));
  if (!even && r <= 3 * l) return aligned(4, p1_top(h));
  if (even) return shifted(5, split_top(l, h));
  return aligned(6, p1_top(l));  // r == 3L+2
}

bool any_upper(const ClassProfile& p) {
  return p.band1 == ClassBand::Upper || p.band2 == ClassBand::Upper;
}

bool any_lower(const ClassProfile& p) {
  return p.band1 == ClassBand::Lower || p.band2 == ClassBand::Lower;
}

WinnerVerdict regime_verdict(Player winner, Regime regime, RegimeCase::Kind kind, int bullet) {
  RegimeCase detail;
  detail.kind = kind;
  detail.bullet = bullet;
  detail.side = winner;
  return {winner, regime, detail};
}

}  // namespace

StaircaseCase staircase_case(const FamilyId& family, Count n, FastOptions options) {
  switch (family.kind) {
    case FamilyKind::OneTwo: return case_one_two(n);
    case FamilyKind::OneTwoThree: return case_one_two_three(n);
    case FamilyKind::OneLEven: return case_one_l(family.l, n, options);
    case FamilyKind::OneLL1Even: return case_one_ll1_even(family.l, n);
    case FamilyKind::OneLL1Odd: return case_one_ll1_odd(family.l, n);
    case FamilyKind::Unsupported: break;
  }
  throw Error(ErrorCode::UnsupportedFamily, "no staircase theorem for this move set");
}

std::vector<StaircaseBand> staircase_bands(const FamilyId& family, Count n,
                                           const ClassProfile& profile, FastOptions options) {
  const StaircaseCase c = staircase_case(family, n, options);
  const Count top = profile.u.u1 - c.top.d_offset;
  std::vector<StaircaseBand> bands;
  for (Count k = c.first_band;; ++k) {
    const Count low = profile.m.m1 + c.origin + c.stride * k;
    if (low >= top) break;
    bands.push_back({k, low, std::min(low + c.stride, top), profile.m.m2 + c.e_offset + c.stride * k});
  }
  return bands;
}

WinnerVerdict winner_upper_regime(const ClassProfile& profile, const Cash& d, const Cash& e) {
  const bool rich1 = d >= profile.u.u1;
  const bool rich2 = e >= profile.u.u2;
  using K = RegimeCase::Kind;
  if (rich1 && !rich2) return regime_verdict(Player::P1, Regime::UpperRegime, K::UpperCase, 1);
  if (!rich1 && rich2) return regime_verdict(Player::P2, Regime::UpperRegime, K::UpperCase, 2);
  if (rich1 && rich2)
    return regime_verdict(profile.classic_winner, Regime::UpperRegime, K::UpperCase, 3);
  throw Error(ErrorCode::RegimeMismatch, "neither player is upper class");
}

WinnerVerdict winner_lower_regime(const ClassProfile& profile, Count d, Count e) {
  if (any_upper(profile) || !any_lower(profile)) {
    throw Error(ErrorCode::RegimeMismatch, "lower-class rules need a lower-class player and no upper");
  }
  const Count m1 = profile.m.m1;
  const Count m2 = profile.m.m2;
  using K = RegimeCase::Kind;
  auto verdict = [](Player w, int bullet) {
    return regime_verdict(w, Regime::LowerRegime, K::LowerCase, bullet);
  };
  if (d >= m1 && e < m2) return verdict(Player::P1, 1);
  if (d < m1 && e >= m2) return verdict(Player::P2, 2);
  if (d == e && d < m1) return verdict(Player::P2, 3);
  if (e < d && d < m1) return verdict(Player::P1, 4);
  if (d < e && e < m2) return verdict(Player::P2, 5);
  throw Error(ErrorCode::UncoveredPoint, "no lower-class rule covers this point");
}

WinnerVerdict winner_staircase(const FamilyId& family, Count n, Count d, Count e,
                               const ClassProfile& profile, FastOptions options) {
  if (profile.band1 != ClassBand::Middle || profile.band2 != ClassBand::Middle) {
    throw Error(ErrorCode::RegimeMismatch, "staircase rules need both players middle class");
  }
  const StaircaseCase c = staircase_case(family, n, options);
  RegimeCase detail;
  detail.family = family;
  detail.residue_case = c.number;

  auto finish = [&](RegimeCase::Kind kind, Player winner) {
    detail.kind = kind;
    detail.side = winner;
    return WinnerVerdict{winner, Regime::Staircase, detail};
  };

  if (d >= profile.u.u1 - c.top.d_offset) {
    const bool p1 = !c.top.conditional || e < profile.u.u2 - c.top.e_offset;
    return finish(RegimeCase::Kind::StaircaseTop, p1 ? Player::P1 : Player::P2);
  }
  const Count start = profile.m.m1 + c.origin;
  if (d < start + c.stride * c.first_band) {
    return finish(RegimeCase::Kind::StaircaseBottom, Player::P2);
  }
  const Count k = (d - start) / c.stride;
  detail.band = k;
  const Count threshold = profile.m.m2 + c.e_offset + c.stride * k;
  return finish(RegimeCase::Kind::StaircaseBand, e < threshold ? Player::P1 : Player::P2);
}

namespace {

// Closed-form decision for a supported family; nullopt for an uncovered point.
std::optional<WinnerVerdict> decide_supported(const FamilyId& family, Count n, const Cash& d,
                                              const Cash& e, FastOptions options) {
  const ClassProfile profile = classify(family, n, d, e);
  if (any_upper(profile)) return winner_upper_regime(profile, d, e);
  try {
    if (any_lower(profile)) return winner_lower_regime(profile, d.dollars(), e.dollars());
    return winner_staircase(family, n, d.dollars(), e.dollars(), profile, options);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::UncoveredPoint) throw;
  }
  return std::nullopt;
}

}  // namespace

FastWinner::FastWinner(RuleSet rules, FastOptions options)
    : rules_(rules), family_(classify_family(rules)), options_(options), oracle_(rules) {}

WinnerVerdict FastWinner::fallback(Count n, const Cash& d, const Cash& e) {
  RegimeCase detail;
  detail.kind = RegimeCase::Kind::OracleFallback;
  const Player w = oracle_.winner(n, d, e);
  detail.side = w;
  return {w, Regime::Fallback, detail};
}

WinnerVerdict FastWinner::operator()(Count n, const Cash& d, const Cash& e) {
  if (n < 0) throw Error(ErrorCode::BadRequest, "pile size must be nonnegative");

  if (family_.supported()) {
    if (auto v = decide_supported(family_, n, d, e, options_)) return *v;
    return fallback(n, d, e);
  }

  if (!upper_) upper_.emplace(rules_);
  const ClassProfile profile =
      make_profile(upper_->at(n), middle_thresholds(n), upper_->classic_winner(n), d, e);
  if (any_upper(profile)) return winner_upper_regime(profile, d, e);
  return fallback(n, d, e);
}

WinnerVerdict winner_fast(const RuleSet& rules, Count n, const Cash& d, const Cash& e,
                          FastOptions options) {
  if (n < 0) throw Error(ErrorCode::BadRequest, "pile size must be nonnegative");
  const FamilyId family = classify_family(rules);
  if (family.supported()) {
    // No oracle or U table is built unless the closed forms decline.
    if (auto v = decide_supported(family, n, d, e, options)) return *v;
  }
  FastWinner fw(rules, options);
  return fw(n, d, e);
}

}  // namespace nimcash

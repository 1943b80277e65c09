#include <doctest.h>

#include "nimcash/classes.hpp"
#include "nimcash/fast.hpp"
#include "nimcash/oracle.hpp"
#include "support.hpp"

using namespace nimcash;

namespace {

const Cash kInf = Cash::infinite();

ClassProfile profile_of(const RuleSet& rules, Count n, Cash d, Cash e) {
  return classify(classify_family(rules), n, d, e);
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::NotFound;
}

}  // namespace

TEST_CASE("upper regime") {
  const ClassProfile p = profile_of({1, 6}, 43, 37, 21);
  const WinnerVerdict v = winner_upper_regime(p, 37, 21);
  CHECK(v.winner == Player::P1);
  CHECK(v.detail.bullet == 1);
  CHECK(solve_cash({1, 6}, 43, 37, 21).winner == Player::P1);

  const ClassProfile q = profile_of({1, 3, 4}, 42, 29, kInf);
  CHECK(winner_upper_regime(q, 29, kInf).winner == Player::P2);
  CHECK(winner_upper_regime(q, 29, kInf).detail.bullet == 2);
  CHECK(solve_cash({1, 3, 4}, 42, 29, kInf).winner == Player::P2);

  for (const RuleSet& rules : testing::supported_families()) {
    for (Count n = 0; n <= 50; ++n) {
      const WinnerVerdict both = winner_fast(rules, n, kInf, kInf);
      CHECK(both.winner == solve_classic(rules, n).winner);
      CHECK(both.detail.bullet == 3);
    }
  }
  CHECK(code_of([&] { winner_upper_regime(p, 30, 21); }) == ErrorCode::RegimeMismatch);
}

TEST_CASE("lower regime") {
  const ClassProfile base = profile_of({1, 6}, 43, 25, 10);
  CHECK(winner_lower_regime(base, 25, 10).winner == Player::P1);
  CHECK(winner_lower_regime(base, 25, 10).detail.bullet == 1);
  CHECK(solve_cash({1, 6}, 43, 25, 10).winner == Player::P1);

  CHECK(winner_lower_regime(profile_of({1, 6}, 43, 10, 10), 10, 10).winner == Player::P2);
  CHECK(winner_lower_regime(profile_of({1, 6}, 43, 10, 10), 10, 10).detail.bullet == 3);
  CHECK(solve_cash({1, 6}, 43, 10, 10).winner == Player::P2);

  CHECK(winner_lower_regime(profile_of({1, 6}, 43, 22, 10), 22, 10).winner == Player::P1);
  CHECK(solve_cash({1, 6}, 43, 22, 10).winner == Player::P1);

  CHECK(winner_lower_regime(profile_of({1, 6}, 43, 15, 10), 15, 10).detail.bullet == 4);
  CHECK(winner_lower_regime(profile_of({1, 6}, 43, 10, 15), 10, 15).detail.bullet == 5);
  CHECK(winner_lower_regime(profile_of({1, 6}, 43, 10, 30), 10, 30).detail.bullet == 2);

  const ClassProfile mid = profile_of({1, 6}, 43, 27, 28);
  CHECK(code_of([&] { winner_lower_regime(mid, 27, 28); }) == ErrorCode::RegimeMismatch);
}

TEST_CASE("staircase: plotted points") {
  auto stair = [](const RuleSet& r, Count n, Count d, Count e) {
    return winner_staircase(classify_family(r), n, d, e, profile_of(r, n, d, e));
  };
  CHECK(stair({1, 4, 5}, 48, 28, 27).winner == Player::P1);
  CHECK(stair({1, 3, 4}, 42, 23, 24).winner == Player::P2);
  CHECK(stair({1, 6}, 43, 32, 33).winner == Player::P1);
  CHECK(stair({1, 6}, 43, 22, 22).winner == Player::P1);
  CHECK(stair({1, 6}, 43, 22, 24).winner == Player::P2);
  CHECK(stair({1, 6}, 43, 27, 28).winner == Player::P1);
  CHECK(stair({1, 6}, 43, 27, 29).winner == Player::P2);

  const ClassProfile up = profile_of({1, 6}, 43, 40, 28);
  CHECK(code_of([&] { winner_staircase(classify_family({1, 6}), 43, 40, 28, up); }) ==
        ErrorCode::RegimeMismatch);
}

TEST_CASE("strict reading of the {1,L} case-2 opening bullets") {
  const FamilyId f = classify_family({1, 6});
  const ClassProfile p = profile_of({1, 6}, 43, 22, 22);
  const WinnerVerdict strict = winner_staircase(f, 43, 22, 22, p, FastOptions{true});
  CHECK(strict.winner == Player::P2);
  CHECK(strict.detail.kind == RegimeCase::Kind::StaircaseBottom);
  CHECK(solve_cash({1, 6}, 43, 22, 22).winner == Player::P1);
  CHECK(winner_staircase(f, 43, 22, 22, p).winner == Player::P1);
}

TEST_CASE("winner_fast: dispatch") {
  const WinnerVerdict v = winner_fast({1, 6}, 43, 22, 24);
  CHECK(v.winner == Player::P2);
  CHECK(v.regime == Regime::Staircase);
  CHECK(describe(v.detail).rfind("staircase", 0) == 0);

  const WinnerVerdict fb = winner_fast({2, 5}, 17, 9, 9);
  CHECK(fb.regime == Regime::Fallback);
  CHECK(fb.detail.kind == RegimeCase::Kind::OracleFallback);
  CHECK(fb.winner == solve_cash({2, 5}, 17, 9, 9).winner);

  CHECK(winner_fast({1, 2}, 0, 0, 0).winner == Player::P2);
  CHECK(winner_fast({1, 2}, 5, 0, 9).winner == Player::P2);
  CHECK(code_of([] { winner_fast({1, 2}, -1, 0, 0); }) == ErrorCode::BadRequest);
}

TEST_CASE("property: the regime is fixed by the two class bands") {
  ref::Gen gen(17);
  const auto families = testing::supported_families();
  for (int i = 0; i < 5000; ++i) {
    const RuleSet& rules = families[static_cast<std::size_t>(gen.between(0, 10))];
    const Count n = gen.between(0, 400);
    const Count d = gen.between(0, n + 3);
    const Count e = gen.between(0, n + 3);
    const ClassProfile p = profile_of(rules, n, d, e);
    const WinnerVerdict v = winner_fast(rules, n, d, e);
    const bool upper = p.band1 == ClassBand::Upper || p.band2 == ClassBand::Upper;
    const bool lower = p.band1 == ClassBand::Lower || p.band2 == ClassBand::Lower;
    if (upper) {
      CHECK(v.regime == Regime::UpperRegime);
    } else if (lower) {
      CHECK((v.regime == Regime::LowerRegime || v.regime == Regime::Fallback));
    } else {
      CHECK(v.regime == Regime::Staircase);
    }
  }
}

TEST_CASE("property: staircase bands tile the middle d-range") {
  for (const RuleSet& rules : testing::supported_families()) {
    const FamilyId family = classify_family(rules);
    CAPTURE(to_string(rules));
    for (Count n = family.l; n <= 200; ++n) {
      CAPTURE(n);
      const ClassProfile p = classify(family, n, 0, 0);
      const StaircaseCase c = staircase_case(family, n);
      const auto bands = staircase_bands(family, n, p);
      const Count top = p.u.u1 - c.top.d_offset;
      Count edge = p.m.m1 + c.origin + c.stride * c.first_band;
      for (const StaircaseBand& b : bands) {
        CHECK(b.d_low == edge);
        CHECK(b.d_high > b.d_low);
        CHECK(b.d_high - b.d_low <= c.stride);
        edge = b.d_high;
      }
      if (!bands.empty()) CHECK(edge == top);
      // Bottom, bands and top cover every middle-class d exactly once.
      for (Count d = p.m.m1; d < p.u.u1; ++d) {
        int owners = d >= top ? 1 : 0;
        if (d < p.m.m1 + c.origin + c.stride * c.first_band && d < top) ++owners;
        for (const StaircaseBand& b : bands) owners += b.d_low <= d && d < b.d_high;
        CHECK(owners == 1);
      }
    }
  }
}

TEST_CASE("fast equals oracle on every supported family, n <= 60") {
  for (const RuleSet& rules : testing::supported_families()) {
    CAPTURE(to_string(rules));
    FastWinner fast(rules);
    CashOracle oracle(rules);
    for (Count n = 0; n <= 60; ++n) {
      std::vector<Cash> cash;
      for (Count c = 0; c <= n + 2; ++c) cash.emplace_back(c);
      cash.push_back(kInf);
      for (const Cash& d : cash) {
        for (const Cash& e : cash) {
          const Player truth = oracle.winner(n, d, e);
          const WinnerVerdict v = fast(n, d, e);
          if (v.winner != truth) {
            FAIL_CHECK("n=" << n << " d=" << to_string(d) << " e=" << to_string(e) << " "
                            << describe(v.detail));
          }
          CHECK(v.regime != Regime::Fallback);
        }
      }
    }
  }
}

TEST_CASE("unsupported move sets: upper regime or oracle fallback, always correct") {
  for (const RuleSet& rules : {RuleSet{2, 3}, RuleSet{1, 3}, RuleSet{2, 5}, RuleSet{1, 3, 5},
                               RuleSet{1, 5}, RuleSet{1, 2, 4}, RuleSet{3, 4, 7}}) {
    CAPTURE(to_string(rules));
    FastWinner fast(rules);
    CashOracle oracle(rules);
    for (Count n = 0; n <= 40; ++n) {
      for (Count d = 0; d <= n + 1; d += 2) {
        for (Count e = 0; e <= n + 1; e += 3) {
          const WinnerVerdict v = fast(n, d, e);
          CHECK(v.winner == oracle.winner(n, d, e));
          CHECK((v.regime == Regime::UpperRegime || v.regime == Regime::Fallback));
        }
      }
    }
  }
}

#include <algorithm>

#include <doctest.h>

#include "nimcash/core.hpp"
#include "support.hpp"

using namespace nimcash;

namespace {

std::vector<Count> legal(Count n, Cash d, Cash e, Player p, const RuleSet& rules) {
  return legal_moves(GameState{n, d, e, p}, rules);
}

}  // namespace

TEST_CASE("cash: ordering and infinity") {
  const Cash inf = Cash::infinite();
  CHECK(inf > Cash(1'000'000));
  CHECK(Cash(3) < Cash(4));
  CHECK(Cash(3) == 3);
  CHECK(inf == Cash::infinite());
  CHECK_FALSE(inf == Cash(0));
  CHECK(inf.covers(1'000'000'000));
  CHECK_FALSE(Cash(2).covers(3));
  CHECK(inf.spend(5).is_infinite());
  CHECK(Cash(7).spend(3) == 4);
  CHECK(Cash(9).capped(5) == 5);
  CHECK(Cash(2).capped(5) == 2);
  CHECK(inf.capped(5).is_infinite());
  CHECK_THROWS_AS(inf.dollars(), Error);
  CHECK_THROWS_AS(Cash(-1), Error);
  CHECK_THROWS_AS(Cash(2).spend(3), Error);
}

TEST_CASE("cash: parse and print") {
  CHECK(parse_cash("inf").is_infinite());
  CHECK(parse_cash("12") == 12);
  CHECK(to_string(parse_cash("0")) == "0");
  CHECK(to_string(Cash::infinite()) == "inf");
  for (const char* bad : {"", "-1", "1.5", "abc", "3x"}) {
    CHECK_THROWS_AS(parse_cash(bad), Error);
  }
}

TEST_CASE("rule sets: validation") {
  CHECK(to_string(RuleSet{4, 1, 3}) == "{1,3,4}");
  CHECK(parse_rules("1,3,4") == RuleSet{1, 3, 4});
  CHECK(parse_rules(" 6, 1") == RuleSet{1, 6});
  CHECK(RuleSet{1, 3, 4}.contains(3));
  CHECK_FALSE(RuleSet{1, 3, 4}.contains(2));
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::NotFound;
  };
  CHECK(code([] { RuleSet(std::vector<Count>{}); }) == ErrorCode::InvalidRules);
  CHECK(code([] { RuleSet{0, 1}; }) == ErrorCode::InvalidRules);
  CHECK(code([] { RuleSet{2, 2}; }) == ErrorCode::InvalidRules);
  CHECK(code([] { parse_rules(""); }) == ErrorCode::InvalidRules);
  CHECK(code([] { parse_rules("1,"); }) == ErrorCode::InvalidRules);
  CHECK(code([] { parse_rules("1,x"); }) == ErrorCode::InvalidRules);
  CHECK(code([] { parse_rules("1,-2"); }) == ErrorCode::InvalidRules);
}

TEST_CASE("family classification") {
  CHECK(classify_family({1, 6}) == FamilyId{FamilyKind::OneLEven, 6});
  CHECK(classify_family({1, 3, 4}) == FamilyId{FamilyKind::OneLL1Odd, 3});
  CHECK(classify_family({1, 2}) == FamilyId{FamilyKind::OneTwo, 2});
  CHECK(classify_family({1, 2, 3}) == FamilyId{FamilyKind::OneTwoThree, 2});
  CHECK(classify_family({1, 4, 5}) == FamilyId{FamilyKind::OneLL1Even, 4});
  for (RuleSet r : {RuleSet{2, 3}, RuleSet{1, 3}, RuleSet{1}, RuleSet{1, 4, 6}, RuleSet{1, 2, 4},
                    RuleSet{2, 4, 5}, RuleSet{1, 3, 4, 5}}) {
    CHECK_FALSE(classify_family(r).supported());
  }
  CHECK(to_string(classify_family({1, 6})) == "{1,L} L=6");
}

TEST_CASE("family classification is total and partitions rule sets") {
  ref::Gen gen(11);
  for (int i = 0; i < 2000; ++i) {
    const RuleSet rules(gen.moves(12));
    const FamilyId f = classify_family(rules);
    const auto m = rules.moves();
    bool one_l = m.size() == 2 && m[0] == 1 && m[1] % 2 == 0;
    bool one_l_l1 = m.size() == 3 && m[0] == 1 && m[2] == m[1] + 1 && m[1] >= 2;
    CHECK(f.supported() == (one_l || one_l_l1));
    if (one_l) CHECK(f.l == m[1]);
    if (one_l_l1) CHECK(f.l == m[1]);
  }
}

TEST_CASE("legal moves") {
  const RuleSet a{1, 3, 4};
  CHECK(legal(9, 6, Cash::infinite(), Player::P1, a) == std::vector<Count>{1, 3, 4});
  CHECK(legal(2, Cash::infinite(), Cash::infinite(), Player::P1, a) == std::vector<Count>{1});
  CHECK(legal(9, 0, 5, Player::P1, a).empty());
  CHECK(legal(9, 0, 3, Player::P2, a) == std::vector<Count>{1, 3});
  CHECK(legal(0, 10, 10, Player::P1, a).empty());
}

TEST_CASE("apply move") {
  const RuleSet a{1, 3, 4};
  const GameState s = apply_move({9, 6, 5, Player::P1}, 4, a);
  CHECK(s == GameState{5, 2, 5, Player::P2});
  const GameState t = apply_move({9, Cash::infinite(), 5, Player::P1}, 4, a);
  CHECK(t == GameState{5, Cash::infinite(), 5, Player::P2});
  CHECK_THROWS_AS(apply_move({1, 6, 5, Player::P2}, 3, a), Error);
  CHECK_THROWS_AS(apply_move({9, 6, 5, Player::P1}, 2, a), Error);
  CHECK_THROWS_AS(apply_move({9, 2, 5, Player::P1}, 3, a), Error);
}

TEST_CASE("property: moves keep every field nonnegative") {
  ref::Gen gen(23);
  for (int i = 0; i < 3000; ++i) {
    const RuleSet rules(gen.moves(8));
    GameState s{gen.between(0, 30), gen.coin() ? Cash(gen.between(0, 20)) : Cash::infinite(),
                Cash(gen.between(0, 20)), gen.coin() ? Player::P1 : Player::P2};
    for (Count a : legal_moves(s, rules)) {
      const GameState t = apply_move(s, a, rules);
      CHECK(t.stones >= 0);
      CHECK(t.cash1 >= 0);
      CHECK(t.cash2 >= 0);
      CHECK(t.to_move == opponent(s.to_move));
    }
  }
}

TEST_CASE("property: legal moves are antitone in stones and mover cash") {
  ref::Gen gen(37);
  auto subset = [](const std::vector<Count>& small, const std::vector<Count>& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  for (int i = 0; i < 3000; ++i) {
    const RuleSet rules(gen.moves(10));
    const Count n = gen.between(0, 25);
    const Count c = gen.between(0, 25);
    const GameState s{n, c, 7, Player::P1};
    const auto base = legal_moves(s, rules);
    CHECK(std::is_sorted(base.begin(), base.end()));
    CHECK(subset(legal_moves({gen.between(0, n), c, 7, Player::P1}, rules), base));
    CHECK(subset(legal_moves({n, gen.between(0, c), 7, Player::P1}, rules), base));
    CHECK(subset(base, legal_moves({n, Cash::infinite(), 7, Player::P1}, rules)));
  }
}

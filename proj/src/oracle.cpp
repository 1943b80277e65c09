#include "nimcash/oracle.hpp"

#include <vector>

namespace nimcash {

namespace {

constexpr int kFieldBits = 21;
constexpr std::uint64_t kInfiniteCode = (std::uint64_t{1} << kFieldBits) - 1;

std::uint64_t encode(const Cash& c) {
  return c.is_infinite() ? kInfiniteCode : static_cast<std::uint64_t>(c.dollars());
}

}  // namespace

CashOracle::CashOracle(RuleSet rules) : rules_(std::move(rules)) {}

std::uint64_t CashOracle::pack(const MemoKey& key) {
  return (static_cast<std::uint64_t>(key.stones) << (2 * kFieldBits)) |
         (encode(key.mover_cash) << kFieldBits) | encode(key.other_cash);
}

bool CashOracle::mover_wins(Count stones, Cash mover, Cash other) {
  if (stones < 0 || stones > kMaxStones) {
    throw Error(ErrorCode::BadRequest, "pile size out of range for the oracle");
  }

  struct Frame {
    MemoKey key;
    std::uint64_t packed;
    std::size_t next_move;
  };

  const MemoKey root = MemoKey::make(stones, mover, other);
  const std::uint64_t root_packed = pack(root);
  if (auto it = memo_.find(root_packed); it != memo_.end()) return it->second;

  const auto moves = rules_.moves();
  std::vector<Frame> stack;
  stack.push_back({root, root_packed, 0});

  // Iterative DFS: a frame resumes scanning its moves after a child is solved.
  while (!stack.empty()) {
    Frame& top = stack.back();
    const MemoKey key = top.key;
    bool decided = false;
    bool wins = false;
    bool pushed = false;

    while (top.next_move < moves.size()) {
      const Count a = moves[top.next_move];
      if (a > key.stones || !key.mover_cash.covers(a)) break;
      const MemoKey child =
          MemoKey::make(key.stones - a, key.other_cash, key.mover_cash.spend(a));
      const std::uint64_t child_packed = pack(child);
      auto it = memo_.find(child_packed);
      if (it == memo_.end()) {
        stack.push_back({child, child_packed, 0});
        pushed = true;
        break;
      }
      if (!it->second) {
        decided = true;
        wins = true;
        break;
      }
      ++top.next_move;
    }
    if (pushed) continue;
    if (!decided) wins = false;

    memo_.emplace(stack.back().packed, wins);
    stack.pop_back();
  }
  return memo_.at(root_packed);
}

Player CashOracle::winner(Count n, Cash d, Cash e) {
  return mover_wins(n, d, e) ? Player::P1 : Player::P2;
}

Player CashOracle::winner(const GameState& state) {
  const Player mover = state.to_move;
  const bool wins = mover_wins(state.stones, state.cash_of(mover), state.cash_of(opponent(mover)));
  return wins ? mover : opponent(mover);
}

std::optional<Count> CashOracle::best_move(const GameState& state) {
  const auto moves = legal_moves(state, rules_);
  if (moves.empty()) return std::nullopt;
  for (Count a : moves) {
    const GameState next = apply_move(state, a, rules_);
    if (winner(next) == state.to_move) return a;
  }
  return moves.front();
}

std::optional<Count> CashOracle::min_winning_cash(Count n) {
  if (winner(n, Cash::infinite(), Cash::infinite()) != Player::P1) return std::nullopt;
  for (Count c = 0; c <= n; ++c) {
    if (winner(n, c, Cash::infinite()) == Player::P1) return c;
  }
  // Cash n is equivalent to infinite cash, so the scan always terminates above.
  return n;
}

WinnerVerdict solve_cash(const RuleSet& rules, Count n, Cash d, Cash e) {
  CashOracle oracle(rules);
  return {oracle.winner(n, d, e), Regime::Oracle, {}};
}

WinnerVerdict solve_classic(const RuleSet& rules, Count n) {
  return solve_cash(rules, n, Cash::infinite(), Cash::infinite());
}

std::optional<Count> best_move(const RuleSet& rules, const GameState& state) {
  CashOracle oracle(rules);
  return oracle.best_move(state);
}

std::optional<Count> min_winning_cash(const RuleSet& rules, Count n) {
  CashOracle oracle(rules);
  return oracle.min_winning_cash(n);
}

}  // namespace nimcash

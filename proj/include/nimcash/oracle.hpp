// Exhaustive memoized minimax for NIM with cash. This is the ground truth
// every closed form in the library is checked against.
#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>

#include "nimcash/core.hpp"
#include "nimcash/verdict.hpp"

namespace nimcash {

/// Memo key, mover-relative. Finite cash is capped at `stones`: a player can
/// never spend more than the stones left, so larger amounts are equivalent.
struct MemoKey {
  Count stones = 0;
  Cash mover_cash;
  Cash other_cash;

  static MemoKey make(Count stones, Cash mover, Cash other) {
    return {stones, mover.capped(stones), other.capped(stones)};
  }
  friend bool operator==(const MemoKey&, const MemoKey&) = default;
};

/// Solver bound to one rule set. The memo persists across queries, so a
/// single instance is the cheap way to evaluate many positions. Not safe for
/// concurrent use; give each thread its own instance.
class CashOracle {
 public:
  /// Largest pile the memo key encoding supports.
  static constexpr Count kMaxStones = (Count{1} << 21) - 2;

  explicit CashOracle(RuleSet rules);

  const RuleSet& rules() const { return rules_; }

  /// True iff the player to move wins with `mover` dollars against `other`.
  bool mover_wins(Count stones, Cash mover, Cash other);

  /// W(n;d,e): winner of NIM(A;n;d,e) with Player 1 to move.
  Player winner(Count n, Cash d, Cash e);

  /// Winner from an arbitrary position.
  Player winner(const GameState& state);

  /// Smallest winning move, else the smallest legal move; absent iff the
  /// mover has no legal move.
  std::optional<Count> best_move(const GameState& state);

  /// Least c with W(n;c,inf)=P1 when W(n)=P1; absent when W(n)=P2.
  std::optional<Count> min_winning_cash(Count n);

  std::size_t memo_size() const { return memo_.size(); }

 private:
  static std::uint64_t pack(const MemoKey& key);

  RuleSet rules_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

WinnerVerdict solve_cash(const RuleSet& rules, Count n, Cash d, Cash e);

/// Classic NIM(A;n), i.e. solve_cash with both players infinitely rich.
WinnerVerdict solve_classic(const RuleSet& rules, Count n);

std::optional<Count> best_move(const RuleSet& rules, const GameState& state);

std::optional<Count> min_winning_cash(const RuleSet& rules, Count n);

}  // namespace nimcash

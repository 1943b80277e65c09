// Domain types for single-pile NIM with cash: move sets, cash amounts,
// positions, and the move rules shared by every solver in the library.
#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nimcash {

using Count = std::int64_t;

enum class ErrorCode {
  InvalidRules,
  IllegalMove,
  UnsupportedFamily,
  NonIntegralValue,
  DefinitionUnsatisfiable,
  RegimeMismatch,
  UncoveredPoint,
  RangeMismatch,
  NotAStaircase,
  NotYourTurn,
  GameOver,
  NotFound,
  BadRequest,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

enum class Player : std::uint8_t { P1 = 1, P2 = 2 };

constexpr Player opponent(Player p) {
  return p == Player::P1 ? Player::P2 : Player::P1;
}

constexpr int index_of(Player p) { return static_cast<int>(p); }

std::string_view to_string(Player p);

/// A natural number of dollars, or unlimited cash. Infinite compares greater
/// than every finite amount.
class Cash {
 public:
  constexpr Cash() = default;
  constexpr Cash(Count dollars) : dollars_(dollars) {  // NOLINT: implicit by intent
    if (dollars < 0) throw Error(ErrorCode::BadRequest, "cash must be nonnegative");
  }

  static constexpr Cash infinite() {
    Cash c;
    c.infinite_ = true;
    return c;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  /// Finite amount; throws for infinite cash.
  constexpr Count dollars() const {
    if (infinite_) throw Error(ErrorCode::BadRequest, "infinite cash has no dollar amount");
    return dollars_;
  }

  constexpr bool covers(Count amount) const { return infinite_ || dollars_ >= amount; }

  /// Cash after paying `amount`; infinite cash is unchanged.
  constexpr Cash spend(Count amount) const {
    if (infinite_) return *this;
    return Cash(dollars_ - amount);
  }

  /// min(cash, cap), keeping infinity symbolic.
  constexpr Cash capped(Count cap) const {
    if (infinite_ || dollars_ <= cap) return *this;
    return Cash(cap);
  }

  friend constexpr bool operator==(const Cash& a, const Cash& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.dollars_ == b.dollars_);
  }
  friend constexpr std::strong_ordering operator<=>(const Cash& a, const Cash& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.dollars_ <=> b.dollars_;
  }
  friend constexpr bool operator==(const Cash& a, Count b) { return a == Cash(b); }
  friend constexpr std::strong_ordering operator<=>(const Cash& a, Count b) {
    if (a.infinite_) return std::strong_ordering::greater;
    return a.dollars_ <=> b;
  }

 private:
  Count dollars_ = 0;
  bool infinite_ = false;
};

/// Parses a decimal amount or "inf".
Cash parse_cash(std::string_view text);
std::string to_string(Cash c);

/// The move set A: non-empty, strictly increasing, every element >= 1.
class RuleSet {
 public:
  /// Sorts the input; throws InvalidRules on empty, non-positive or duplicate
  /// entries.
  explicit RuleSet(std::vector<Count> moves);
  RuleSet(std::initializer_list<Count> moves) : RuleSet(std::vector<Count>(moves)) {}

  std::span<const Count> moves() const { return moves_; }
  Count min_move() const { return moves_.front(); }
  Count max_move() const { return moves_.back(); }
  std::size_t size() const { return moves_.size(); }
  bool contains(Count a) const;

  friend bool operator==(const RuleSet&, const RuleSet&) = default;

 private:
  std::vector<Count> moves_;
};

/// Parses "1,3,4".
RuleSet parse_rules(std::string_view text);
std::string to_string(const RuleSet& rules);

enum class FamilyKind { OneTwo, OneLEven, OneTwoThree, OneLL1Even, OneLL1Odd, Unsupported };

/// Dispatch key for the per-family closed forms. `l` is the family
/// parameter L (2 for OneTwo and OneTwoThree, 0 for Unsupported).
struct FamilyId {
  FamilyKind kind = FamilyKind::Unsupported;
  Count l = 0;

  bool supported() const { return kind != FamilyKind::Unsupported; }
  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

FamilyId classify_family(const RuleSet& rules);
std::string to_string(const FamilyId& family);

struct GameState {
  Count stones = 0;
  Cash cash1;
  Cash cash2;
  Player to_move = Player::P1;

  const Cash& cash_of(Player p) const { return p == Player::P1 ? cash1 : cash2; }
  Cash& cash_of(Player p) { return p == Player::P1 ? cash1 : cash2; }

  friend bool operator==(const GameState&, const GameState&) = default;
};

/// Moves a ∈ A with a <= stones and a affordable by the mover, ascending.
std::vector<Count> legal_moves(const GameState& state, const RuleSet& rules);

bool is_legal(const GameState& state, Count a, const RuleSet& rules);

/// Throws IllegalMove unless `a` is in legal_moves(state, rules).
GameState apply_move(const GameState& state, Count a, const RuleSet& rules);

}  // namespace nimcash

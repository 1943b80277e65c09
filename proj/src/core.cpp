#include "nimcash/core.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace nimcash {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidRules: return "InvalidRules";
    case ErrorCode::IllegalMove: return "IllegalMove";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::NonIntegralValue: return "NonIntegralValue";
    case ErrorCode::DefinitionUnsatisfiable: return "DefinitionUnsatisfiable";
    case ErrorCode::RegimeMismatch: return "RegimeMismatch";
    case ErrorCode::UncoveredPoint: return "UncoveredPoint";
    case ErrorCode::RangeMismatch: return "RangeMismatch";
    case ErrorCode::NotAStaircase: return "NotAStaircase";
    case ErrorCode::NotYourTurn: return "NotYourTurn";
    case ErrorCode::GameOver: return "GameOver";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::BadRequest: return "BadRequest";
  }
  return "Unknown";
}

std::string_view to_string(Player p) { return p == Player::P1 ? "P1" : "P2"; }

namespace {

Count parse_natural(std::string_view text, ErrorCode code, std::string_view what) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  Count value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(code, "invalid " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Cash parse_cash(std::string_view text) {
  if (text == "inf" || text == "INF" || text == "infinity" || text == "∞") return Cash::infinite();
  Count v = parse_natural(text, ErrorCode::BadRequest, "cash amount");
  if (v < 0) throw Error(ErrorCode::BadRequest, "cash must be nonnegative");
  return Cash(v);
}

std::string to_string(Cash c) {
  return c.is_infinite() ? std::string("inf") : std::to_string(c.dollars());
}

RuleSet::RuleSet(std::vector<Count> moves) : moves_(std::move(moves)) {
  if (moves_.empty()) throw Error(ErrorCode::InvalidRules, "move set must be non-empty");
  std::sort(moves_.begin(), moves_.end());
  if (moves_.front() < 1) throw Error(ErrorCode::InvalidRules, "moves must be positive");
  if (std::adjacent_find(moves_.begin(), moves_.end()) != moves_.end()) {
    throw Error(ErrorCode::InvalidRules, "moves must be distinct");
  }
}

bool RuleSet::contains(Count a) const {
  return std::binary_search(moves_.begin(), moves_.end(), a);
}

RuleSet parse_rules(std::string_view text) {
  std::vector<Count> moves;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = text.substr(0, comma);
    moves.push_back(parse_natural(item, ErrorCode::InvalidRules, "move"));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw Error(ErrorCode::InvalidRules, "trailing comma in move set");
  }
  return RuleSet(std::move(moves));
}

std::string to_string(const RuleSet& rules) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (i) os << ',';
    os << rules.moves()[i];
  }
  os << '}';
  return os.str();
}

FamilyId classify_family(const RuleSet& rules) {
  auto m = rules.moves();
  if (m[0] != 1) return {};
  if (m.size() == 2) {
    Count l = m[1];
    if (l == 2) return {FamilyKind::OneTwo, 2};
    if (l >= 4 && l % 2 == 0) return {FamilyKind::OneLEven, l};
    return {};
  }
  if (m.size() == 3 && m[2] == m[1] + 1) {
    Count l = m[1];
    if (l == 2) return {FamilyKind::OneTwoThree, 2};
    if (l >= 4 && l % 2 == 0) return {FamilyKind::OneLL1Even, l};
    if (l >= 3 && l % 2 == 1) return {FamilyKind::OneLL1Odd, l};
  }
  return {};
}

std::string to_string(const FamilyId& family) {
  auto l = std::to_string(family.l);
  switch (family.kind) {
    case FamilyKind::OneTwo: return "{1,2}";
    case FamilyKind::OneLEven: return "{1,L} L=" + l;
    case FamilyKind::OneTwoThree: return "{1,2,3}";
    case FamilyKind::OneLL1Even: return "{1,L,L+1} L=" + l + " even";
    case FamilyKind::OneLL1Odd: return "{1,L,L+1} L=" + l + " odd";
    case FamilyKind::Unsupported: return "unsupported";
  }
  return "unsupported";
}

bool is_legal(const GameState& state, Count a, const RuleSet& rules) {
  return rules.contains(a) && a <= state.stones && state.cash_of(state.to_move).covers(a);
}

std::vector<Count> legal_moves(const GameState& state, const RuleSet& rules) {
  std::vector<Count> out;
  const Cash& purse = state.cash_of(state.to_move);
  for (Count a : rules.moves()) {
    if (a > state.stones || !purse.covers(a)) break;
    out.push_back(a);
  }
  return out;
}

GameState apply_move(const GameState& state, Count a, const RuleSet& rules) {
  if (!is_legal(state, a, rules)) {
    throw Error(ErrorCode::IllegalMove, "move " + std::to_string(a) + " is not legal with " +
                                            std::to_string(state.stones) + " stones");
  }
  GameState next = state;
  next.stones -= a;
  next.cash_of(state.to_move) = state.cash_of(state.to_move).spend(a);
  next.to_move = opponent(state.to_move);
  return next;
}

}  // namespace nimcash

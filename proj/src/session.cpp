#include <algorithm>
#include <cstdio>

#include "nimcash/service.hpp"

namespace nimcash {

namespace {

using json = Json;

json cash_json(const Cash& c) {
  if (c.is_infinite()) return "inf";
  return c.dollars();
}

Cash cash_from_json(const json& j) {
  if (j.is_string()) return parse_cash(j.get<std::string>());
  if (j.is_number_integer()) return Cash(j.get<Count>());
  throw Error(ErrorCode::BadRequest, "cash must be an integer or \"inf\"");
}

json state_json(const GameState& s) {
  return {{"stones", s.stones},
          {"cash1", cash_json(s.cash1)},
          {"cash2", cash_json(s.cash2)},
          {"to_move", index_of(s.to_move)}};
}

Player player_from_int(int p) {
  if (p == 1) return Player::P1;
  if (p == 2) return Player::P2;
  throw Error(ErrorCode::BadRequest, "player must be 1 or 2");
}

GameState state_from_json(const json& j) {
  return {j.at("stones").get<Count>(), cash_from_json(j.at("cash1")),
          cash_from_json(j.at("cash2")), player_from_int(j.at("to_move").get<int>())};
}

std::string_view kind_name(RegimeCase::Kind k) {
  using K = RegimeCase::Kind;
  switch (k) {
    case K::Oracle: return "Oracle";
    case K::UpperCase: return "UpperCase";
    case K::LowerCase: return "LowerCase";
    case K::StaircaseBand: return "StaircaseBand";
    case K::StaircaseBottom: return "StaircaseBottom";
    case K::StaircaseTop: return "StaircaseTop";
    case K::OracleFallback: return "OracleFallback";
  }
  return "Oracle";
}

}  // namespace

struct SessionStore::Entry {
  explicit Entry(GameSession s) : session(std::move(s)), engine(session.rules) {}

  mutable std::shared_mutex mutex;
  GameSession session;
  FastWinner engine;

  // Caller holds the unique lock.
  void settle() {
    if (legal_moves(session.state, session.rules).empty()) {
      session.status = GameStatus::Won;
      session.winner = opponent(session.state.to_move);
    }
  }

  void play(Count a) {
    const Player mover = session.state.to_move;
    session.state = apply_move(session.state, a, session.rules);
    session.history.push_back({mover, a});
    settle();
  }

  void engine_reply() {
    if (session.status != GameStatus::InProgress || session.state.to_move == session.human) return;
    const auto a = engine.oracle().best_move(session.state);
    if (a) play(*a);
  }
};

GameState replay(const GameSession& session) {
  GameState s = session.initial;
  for (const Ply& p : session.history) {
    if (p.player != s.to_move) throw Error(ErrorCode::IllegalMove, "history is out of turn");
    s = apply_move(s, p.move, session.rules);
  }
  return s;
}

SessionStore::SessionStore() : rng_(std::random_device{}()) {}
SessionStore::~SessionStore() = default;

std::string SessionStore::fresh_id() {
  std::lock_guard lock(rng_mutex_);
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(rng_()),
                static_cast<unsigned long long>(rng_()));
  return buf;
}

std::shared_ptr<SessionStore::Entry> SessionStore::find(const std::string& id) const {
  std::shared_lock lock(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw Error(ErrorCode::NotFound, "no game with id '" + id + "'");
  return it->second;
}

GameSession SessionStore::create(const RuleSet& rules, Count n, Cash d, Cash e, Player human) {
  if (n < 0) throw Error(ErrorCode::BadRequest, "pile size must be nonnegative");
  if (n > CashOracle::kMaxStones) throw Error(ErrorCode::BadRequest, "pile too large");
  GameSession s;
  s.id = fresh_id();
  s.rules = rules;
  s.initial = {n, d, e, Player::P1};
  s.state = s.initial;
  s.human = human;
  auto entry = std::make_shared<Entry>(std::move(s));
  entry->settle();
  entry->engine_reply();
  GameSession out = entry->session;
  std::unique_lock lock(mutex_);
  sessions_.emplace(out.id, std::move(entry));
  return out;
}

GameSession SessionStore::get(const std::string& id) const {
  auto entry = find(id);
  std::shared_lock lock(entry->mutex);
  return entry->session;
}

GameSession SessionStore::play(const std::string& id, Count a) {
  auto entry = find(id);
  std::unique_lock lock(entry->mutex);
  GameSession& s = entry->session;
  if (s.status != GameStatus::InProgress) throw Error(ErrorCode::GameOver, "the game is over");
  if (s.state.to_move != s.human) throw Error(ErrorCode::NotYourTurn, "it is the engine's turn");
  entry->play(a);
  entry->engine_reply();
  return s;
}

Hint SessionStore::hint(const std::string& id) {
  auto entry = find(id);
  std::unique_lock lock(entry->mutex);
  const GameSession& s = entry->session;
  const Player mover = s.state.to_move;
  const WinnerVerdict v =
      entry->engine(s.state.stones, s.state.cash_of(mover), s.state.cash_of(opponent(mover)));
  Hint h;
  h.winner = v.winner == Player::P1 ? mover : opponent(mover);
  h.regime = v.detail;
  h.regime_family = v.regime;
  if (s.status == GameStatus::Won) {
    h.winner = *s.winner;
  } else {
    h.best = entry->engine.oracle().best_move(s.state);
  }
  return h;
}

std::vector<std::string> SessionStore::ids() const {
  std::shared_lock lock(mutex_);
  std::vector<std::string> out;
  for (const auto& [id, entry] : sessions_) out.push_back(id);
  return out;
}

json SessionStore::snapshot() const {
  json games = json::array();
  std::shared_lock lock(mutex_);
  for (const auto& [id, entry] : sessions_) {
    std::shared_lock entry_lock(entry->mutex);
    games.push_back(to_json(entry->session));
  }
  return {{"games", games}};
}

void SessionStore::restore(const json& snapshot) {
  try {
    for (const json& g : snapshot.at("games")) {
      GameSession s;
      s.id = g.at("id").get<std::string>();
      s.rules = RuleSet(g.at("rules").get<std::vector<Count>>());
      s.initial = state_from_json(g.at("initial"));
      s.state = state_from_json(g.at("state"));
      s.human = player_from_int(g.at("human").get<int>());
      for (const json& p : g.at("history")) {
        s.history.push_back({player_from_int(p.at("player").get<int>()), p.at("a").get<Count>()});
      }
      if (!(replay(s) == s.state)) {
        throw Error(ErrorCode::BadRequest, "game " + s.id + " does not replay to its state");
      }
      auto entry = std::make_shared<Entry>(std::move(s));
      entry->settle();
      std::unique_lock lock(mutex_);
      sessions_[entry->session.id] = std::move(entry);
    }
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::BadRequest, std::string("malformed snapshot: ") + ex.what());
  }
}

json to_json(const GameSession& s) {
  json history = json::array();
  for (const Ply& p : s.history) history.push_back({{"player", index_of(p.player)}, {"a", p.move}});
  return {{"id", s.id},
          {"rules", std::vector<Count>(s.rules.moves().begin(), s.rules.moves().end())},
          {"initial", state_json(s.initial)},
          {"state", state_json(s.state)},
          {"human", index_of(s.human)},
          {"history", history},
          {"legal_moves", legal_moves(s.state, s.rules)},
          {"status", s.status == GameStatus::InProgress ? "in_progress" : "won"},
          {"winner", s.winner ? json(index_of(*s.winner)) : json(nullptr)}};
}

json to_json(const Hint& h) {
  return {{"winner", index_of(h.winner)},
          {"regime", std::string(to_string(h.regime_family))},
          {"case", std::string(kind_name(h.regime.kind))},
          {"detail", describe(h.regime)},
          {"best", h.best ? json(*h.best) : json(nullptr)}};
}

}  // namespace nimcash

// Game sessions against the optimal engine, and the HTTP/JSON layer that
// exposes them together with the solver queries.
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "nimcash/core.hpp"
#include "nimcash/fast.hpp"
#include "nimcash/verdict.hpp"

namespace nimcash {

/// Keys keep insertion order so responses read like the documents they wrap.
using Json = nlohmann::ordered_json;

struct Ply {
  Player player = Player::P1;
  Count move = 0;

  friend bool operator==(const Ply&, const Ply&) = default;
};

enum class GameStatus { InProgress, Won };

struct GameSession {
  std::string id;
  RuleSet rules{1};
  GameState initial;
  GameState state;
  Player human = Player::P1;
  std::vector<Ply> history;
  GameStatus status = GameStatus::InProgress;
  /// Set once status is Won.
  std::optional<Player> winner;
};

/// Replays history from the initial position. Throws IllegalMove if some
/// recorded move was not legal when it was played.
GameState replay(const GameSession& session);

struct Hint {
  Player winner = Player::P1;
  /// Decision path for the position seen from the mover's side (the mover
  /// plays the role of Player 1 in the verdict).
  RegimeCase regime;
  Regime regime_family = Regime::Oracle;
  std::optional<Count> best;
};

/// In-memory session table. Moves on one session are serialized; lookups of
/// different sessions, and reads of the same session, run concurrently.
class SessionStore {
 public:
  SessionStore();
  ~SessionStore();

  /// The engine replies at once if it moves first. Throws InvalidRules or
  /// BadRequest (negative pile).
  GameSession create(const RuleSet& rules, Count n, Cash d, Cash e, Player human);
  /// Throws NotFound.
  GameSession get(const std::string& id) const;
  /// Human move followed by at most one engine reply. Throws NotFound,
  /// GameOver, NotYourTurn or IllegalMove.
  GameSession play(const std::string& id, Count a);
  /// Throws NotFound.
  Hint hint(const std::string& id);
  std::vector<std::string> ids() const;

  Json snapshot() const;
  /// Adds the sessions in a snapshot; each history must replay to its state.
  void restore(const Json& snapshot);

 private:
  struct Entry;
  std::shared_ptr<Entry> find(const std::string& id) const;
  std::string fresh_id();

  mutable std::shared_mutex mutex_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::mutex rng_mutex_;
  std::mt19937_64 rng_;
};

Json to_json(const GameSession& session);
Json to_json(const Hint& hint);

struct HttpReply {
  int status = 200;
  Json body;
};

/// Transport-independent request handling. `query` holds URL parameters and
/// `body` the raw request body.
class GameService {
 public:
  HttpReply handle(const std::string& method, const std::string& path,
                   const std::map<std::string, std::string>& query, const std::string& body);

  SessionStore& store() { return store_; }

  /// Grids larger than this many cells are refused.
  static constexpr Count kMaxGridCells = 250'000;

 private:
  Json route(const std::string& method, const std::string& path,
                       const std::map<std::string, std::string>& query, const std::string& body,
                       int& status);

  SessionStore store_;
};

/// HTTP status for a library error code.
int http_status(ErrorCode code);

struct ServeOptions {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string state_file;
};

/// Thin httplib adapter over GameService.
class HttpServer {
 public:
  explicit HttpServer(GameService& service);
  ~HttpServer();

  /// Port 0 picks a free port. Returns the bound port, or -1.
  int bind(const std::string& host, int port);
  /// Serves until stop() is called.
  void run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Blocks until the server stops (SIGINT/SIGTERM). Loads and saves the
/// state file when one is given.
int serve(const ServeOptions& options);

}  // namespace nimcash

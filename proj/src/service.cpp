#include <atomic>
#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>

#include <httplib.h>

#include "nimcash/classes.hpp"
#include "nimcash/lab.hpp"
#include "nimcash/oracle.hpp"
#include "nimcash/service.hpp"

namespace nimcash {

namespace {

using json = Json;
using Query = std::map<std::string, std::string>;

const std::string& require(const Query& q, const std::string& key) {
  auto it = q.find(key);
  if (it == q.end()) throw Error(ErrorCode::BadRequest, "missing parameter '" + key + "'");
  return it->second;
}

Count parse_int(const std::string& text, const std::string& key) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::BadRequest, "parameter '" + key + "' must be an integer");
  }
}

Count query_int(const Query& q, const std::string& key) { return parse_int(require(q, key), key); }

Cash query_cash(const Query& q, const std::string& key) { return parse_cash(require(q, key)); }

Count query_stones(const Query& q) {
  const Count n = query_int(q, "n");
  if (n < 0) throw Error(ErrorCode::BadRequest, "n must be nonnegative");
  if (n > CashOracle::kMaxStones) throw Error(ErrorCode::BadRequest, "n is too large");
  return n;
}

json cash_json(const Cash& c) {
  if (c.is_infinite()) return "inf";
  return c.dollars();
}

Cash body_cash(const json& j, const char* key) {
  const json& v = j.at(key);
  if (v.is_string()) return parse_cash(v.get<std::string>());
  if (v.is_number_integer()) return Cash(v.get<Count>());
  throw Error(ErrorCode::BadRequest, std::string(key) + " must be an integer or \"inf\"");
}

RuleSet body_rules(const json& j) {
  const json& v = j.at("moves");
  if (v.is_string()) return parse_rules(v.get<std::string>());
  return RuleSet(v.get<std::vector<Count>>());
}

json parse_body(const std::string& body) {
  try {
    return json::parse(body.empty() ? "{}" : body);
  } catch (const json::exception&) {
    throw Error(ErrorCode::BadRequest, "request body is not valid JSON");
  }
}

std::vector<std::string> segments(const std::string& path) {
  std::vector<std::string> out;
  std::stringstream ss(path);
  std::string part;
  while (std::getline(ss, part, '/')) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

json solve_reply(const Query& q) {
  const RuleSet rules = parse_rules(require(q, "A"));
  const Count n = query_stones(q);
  const Cash d = query_cash(q, "d");
  const Cash e = query_cash(q, "e");
  auto it = q.find("oracle");
  const bool oracle = it != q.end() && (it->second == "1" || it->second == "true");
  const WinnerVerdict v = oracle ? solve_cash(rules, n, d, e) : winner_fast(rules, n, d, e);
  return {{"rules", std::vector<Count>(rules.moves().begin(), rules.moves().end())},
          {"n", n},
          {"d", cash_json(d)},
          {"e", cash_json(e)},
          {"winner", index_of(v.winner)},
          {"regime", std::string(to_string(v.regime))},
          {"detail", describe(v.detail)}};
}

json classes_reply(const Query& q) {
  const RuleSet rules = parse_rules(require(q, "A"));
  const Count n = query_stones(q);
  const Cash d = query_cash(q, "d");
  const Cash e = query_cash(q, "e");
  const ClassProfile p = classify(rules, n, d, e);
  return {{"rules", std::vector<Count>(rules.moves().begin(), rules.moves().end())},
          {"n", n},
          {"d", cash_json(d)},
          {"e", cash_json(e)},
          {"u1", p.u.u1},
          {"u2", p.u.u2},
          {"m1", p.m.m1},
          {"m2", p.m.m2},
          {"band1", std::string(to_string(p.band1))},
          {"band2", std::string(to_string(p.band2))},
          {"classic_winner", index_of(p.classic_winner)}};
}

json staircase_reply(const Query& q) {
  const RuleSet rules = parse_rules(require(q, "A"));
  const Count n = query_stones(q);
  const Range d{query_int(q, "dlo"), query_int(q, "dhi")};
  const Range e{query_int(q, "elo"), query_int(q, "ehi")};
  auto it = q.find("source");
  const GridSource source = it == q.end() ? GridSource::Fast : parse_source(it->second);
  if (d.lo < 0 || e.lo < 0 || d.hi < d.lo || e.hi < e.lo) {
    throw Error(ErrorCode::BadRequest, "invalid grid ranges");
  }
  if (d.size() > GameService::kMaxGridCells / e.size()) {
    throw Error(ErrorCode::BadRequest, "grid too large");
  }
  return json::parse(render_grid(build_grid(rules, n, d, e, source), GridFormat::Json));
}

}  // namespace

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotFound: return 404;
    case ErrorCode::NotYourTurn:
    case ErrorCode::GameOver: return 409;
    case ErrorCode::UnsupportedFamily:
    case ErrorCode::DefinitionUnsatisfiable: return 422;
    case ErrorCode::InvalidRules:
    case ErrorCode::IllegalMove:
    case ErrorCode::BadRequest:
    case ErrorCode::RangeMismatch: return 400;
    default: return 500;
  }
}

json GameService::route(const std::string& method, const std::string& path, const Query& query,
                        const std::string& body, int& status) {
  const auto parts = segments(path);
  if (method == "GET" && parts.size() == 1) {
    if (parts[0] == "solve") return solve_reply(query);
    if (parts[0] == "classes") return classes_reply(query);
    if (parts[0] == "staircase") return staircase_reply(query);
  }
  if (!parts.empty() && parts[0] == "games") {
    if (parts.size() == 1 && method == "POST") {
      const json j = parse_body(body);
      try {
        const RuleSet rules = body_rules(j);
        const int human = j.contains("human") ? j.at("human").get<int>() : 1;
        if (human != 1 && human != 2) throw Error(ErrorCode::BadRequest, "human must be 1 or 2");
        status = 201;
        return to_json(store_.create(rules, j.at("n").get<Count>(), body_cash(j, "d"),
                                     body_cash(j, "e"), static_cast<Player>(human)));
      } catch (const json::exception& ex) {
        throw Error(ErrorCode::BadRequest, std::string("bad game request: ") + ex.what());
      }
    }
    if (parts.size() == 2 && method == "GET") return to_json(store_.get(parts[1]));
    if (parts.size() == 3 && parts[2] == "move" && method == "POST") {
      const json j = parse_body(body);
      if (!j.contains("a") || !j.at("a").is_number_integer()) {
        throw Error(ErrorCode::BadRequest, "move needs an integer 'a'");
      }
      return to_json(store_.play(parts[1], j.at("a").get<Count>()));
    }
    if (parts.size() == 3 && parts[2] == "hint" && method == "GET") {
      return to_json(store_.hint(parts[1]));
    }
  }
  throw Error(ErrorCode::NotFound, "no route for " + method + " " + path);
}

HttpReply GameService::handle(const std::string& method, const std::string& path,
                              const Query& query, const std::string& body) {
  HttpReply reply;
  try {
    reply.body = route(method, path, query, body, reply.status);
  } catch (const Error& err) {
    reply.status = http_status(err.code());
    reply.body = {{"error", std::string(to_string(err.code()))}, {"message", err.what()}};
  } catch (const std::exception& ex) {
    reply.status = 500;
    reply.body = {{"error", "Internal"}, {"message", ex.what()}};
  }
  return reply;
}

struct HttpServer::Impl {
  httplib::Server server;
};

HttpServer::HttpServer(GameService& service) : impl_(std::make_unique<Impl>()) {
  auto adapt = [&service](const httplib::Request& req, httplib::Response& res) {
    Query query;
    for (const auto& [k, v] : req.params) query[k] = v;
    const HttpReply reply = service.handle(req.method, req.path, query, req.body);
    res.status = reply.status;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_content(reply.body.dump(), "application/json");
  };
  impl_->server.Get(".*", adapt);
  impl_->server.Post(".*", adapt);
  impl_->server.Options(".*", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.status = 204;
  });
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

void HttpServer::run() { impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

namespace {

std::atomic<HttpServer*> g_running{nullptr};

extern "C" void on_signal(int) {
  if (HttpServer* s = g_running.load()) s->stop();
}

}  // namespace

int serve(const ServeOptions& options) {
  GameService service;
  if (!options.state_file.empty()) {
    std::ifstream in(options.state_file);
    if (in) {
      service.store().restore(json::parse(in));
      std::cerr << "restored " << service.store().ids().size() << " games from "
                << options.state_file << "\n";
    }
  }
  HttpServer server(service);
  const int port = server.bind(options.host, options.port);
  if (port < 0) {
    std::cerr << "cannot bind " << options.host << ":" << options.port << "\n";
    return 1;
  }
  std::cerr << "listening on http://" << options.host << ":" << port << "\n";
  g_running = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  server.run();
  g_running = nullptr;
  if (!options.state_file.empty()) {
    std::ofstream out(options.state_file);
    out << service.store().snapshot().dump(2) << "\n";
    std::cerr << "saved state to " << options.state_file << "\n";
  }
  return 0;
}

}  // namespace nimcash

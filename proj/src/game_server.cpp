#include "game_server.hpp"

#include <cctype>
#include <cstdio>
#include <random>
#include <regex>

#include <httplib.h>

#include "errors.hpp"

namespace server {

namespace {

Response error(int status, const std::string& code, const std::string& reason, const std::string& message = "") {
  jio::Json e = {{"code", code}, {"reason", reason}};
  if (!message.empty()) e["message"] = message;
  return {status, {{"error", e}}};
}

Response not_found(const std::string& id) { return error(404, "not-found", "unknown-session", "no game '" + id + "'"); }

Response game_over() { return error(410, "game-over", "game-over", "every ball has come to rest"); }

// Kind names like "UnknownId" become "unknown-id".
std::string kebab(const std::string& kind) {
  std::string out;
  for (char c : kind) {
    if (std::isupper(static_cast<unsigned char>(c))) {
      if (!out.empty()) out += '-';
      out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else {
      out += c;
    }
  }
  return out;
}

jio::Json snapshot(const Session& s) {
  jio::Json out = {{"id", s.id}};
  out.update(jio::state_json(s.state));
  return out;
}

}  // namespace

std::string GameStore::fresh_id() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  char buf[32];
  std::snprintf(buf, sizeof buf, "g%llu-%08llx", static_cast<unsigned long long>(++counter_),
                static_cast<unsigned long long>(rng() & 0xffffffffULL));
  return buf;
}

std::shared_ptr<Session> GameStore::find(const std::string& id) const {
  std::shared_lock lock(mu_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

size_t GameStore::size() const {
  std::shared_lock lock(mu_);
  return sessions_.size();
}

Response GameStore::create(const std::string& body) {
  std::shared_ptr<Session> s;
  try {
    auto cfg = jio::load_config(jio::parse_text(body));
    {
      std::unique_lock lock(mu_);
      s = std::make_shared<Session>(fresh_id(), std::move(cfg));
      sessions_[s->id] = s;
    }
  } catch (const pp::Error& e) {
    return error(400, "invalid-config", kebab(e.kind()), e.what());
  }
  std::lock_guard<std::mutex> lock(s->mu);
  s->created = s->updated = std::chrono::system_clock::now();
  jio::auto_finalize(s->config, s->state);
  return {201, snapshot(*s)};
}

Response GameStore::state(const std::string& id) {
  auto s = find(id);
  if (!s) return not_found(id);
  std::lock_guard<std::mutex> lock(s->mu);
  return {200, snapshot(*s)};
}

Response GameStore::moves(const std::string& id) {
  auto s = find(id);
  if (!s) return not_found(id);
  std::lock_guard<std::mutex> lock(s->mu);
  const auto& st = s->state;
  jio::Json out;
  out["ball"] = st.ball() ? jio::Json(st.board().id(*st.ball())) : jio::Json(nullptr);
  out["game_over"] = st.game_over();
  out["moves"] = jio::moves_json(st);
  return {200, out};
}

Response GameStore::move(const std::string& id, const std::string& body) {
  auto s = find(id);
  if (!s) return not_found(id);
  std::lock_guard<std::mutex> lock(s->mu);
  if (s->state.game_over()) return game_over();
  pinball::Edge e{};
  try {
    auto doc = jio::parse_text(body);
    if (!doc.is_object() || !doc.contains("edge") || !doc["edge"].is_array() || doc["edge"].size() != 2 ||
        !doc["edge"][0].is_string() || !doc["edge"][1].is_string())
      return error(400, "bad-request", "invalid-edge", "body must be {\"edge\": [upper, lower]}");
    e = {s->config.resolve(doc["edge"][0].get<std::string>()), s->config.resolve(doc["edge"][1].get<std::string>())};
  } catch (const pp::Error& err) {
    return error(400, "bad-request", kebab(err.kind()), err.what());
  }
  std::string why = s->state.check_move(e);
  if (!why.empty()) return error(409, "illegal-move", why);
  s->state.apply_move(e);
  jio::auto_finalize(s->config, s->state);
  s->updated = std::chrono::system_clock::now();
  return {200, snapshot(*s)};
}

Response GameStore::finalize(const std::string& id) {
  auto s = find(id);
  if (!s) return not_found(id);
  std::lock_guard<std::mutex> lock(s->mu);
  if (s->state.game_over()) return game_over();
  if (!s->state.legal_moves().empty()) return error(409, "moves-remain", "moves-remain", "the ball can still roll");
  s->state.finalize_current();
  jio::auto_finalize(s->config, s->state);
  s->updated = std::chrono::system_clock::now();
  return {200, snapshot(*s)};
}

Response GameStore::transcript(const std::string& id) {
  auto s = find(id);
  if (!s) return not_found(id);
  std::lock_guard<std::mutex> lock(s->mu);
  return {200, jio::transcript_json(s->config, s->state)};
}

Response GameStore::handle(const std::string& method, const std::string& path, const std::string& body) {
  static const std::regex game_re(R"(^/games/([A-Za-z0-9_-]+)(/moves|/finalize|/transcript)?/?$)");
  try {
    if (path == "/games" || path == "/games/") {
      if (method == "POST") return create(body);
      return error(405, "method-not-allowed", method);
    }
    std::smatch m;
    if (!std::regex_match(path, m, game_re)) return error(404, "not-found", "unknown-route", path);
    const std::string id = m[1];
    const std::string tail = m[2];
    if (tail.empty() && method == "GET") return state(id);
    if (tail == "/moves" && method == "GET") return moves(id);
    if (tail == "/moves" && method == "POST") return move(id, body);
    if (tail == "/finalize" && method == "POST") return finalize(id);
    if (tail == "/transcript" && method == "GET") return transcript(id);
    return error(405, "method-not-allowed", method);
  } catch (const pp::Error& e) {
    return error(400, "bad-request", kebab(e.kind()), e.what());
  } catch (const std::exception& e) {
    return error(500, "internal", "internal", e.what());
  }
}

struct HttpServer::Impl {
  GameStore store;
  httplib::Server http;
};

HttpServer::HttpServer() : impl_(std::make_unique<Impl>()) {
  auto& http = impl_->http;
  auto route = [this](const httplib::Request& req, httplib::Response& res) {
    Response r = impl_->store.handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_content(r.body.dump(), "application/json");
  };
  http.Get(R"(/games.*)", route);
  http.Post(R"(/games.*)", route);
  http.Options(R"(/games.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) {
    int p = impl_->http.bind_to_any_port(host);
    if (p < 0) pp::fail("BindFailed", "cannot bind " + host);
    return p;
  }
  if (!impl_->http.bind_to_port(host, port)) pp::fail("BindFailed", "cannot bind " + host + ":" + std::to_string(port));
  return port;
}

void HttpServer::listen() { impl_->http.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_) impl_->http.stop();
}

GameStore& HttpServer::store() { return impl_->store; }

}  // namespace server

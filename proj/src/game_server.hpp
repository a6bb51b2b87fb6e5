#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "json_io.hpp"
#include "pinball.hpp"

namespace server {

struct Response {
  int status = 200;
  jio::Json body;
};

struct Session {
  Session(std::string sid, jio::LoadedConfig cfg)
      : id(std::move(sid)), config(std::move(cfg)), state(config.game) {}

  std::string id;
  jio::LoadedConfig config;
  pinball::PinballState state;
  std::chrono::system_clock::time_point created, updated;
  std::mutex mu;
};

// Session store plus request dispatch; no sockets involved, so it can be
// driven directly.
class GameStore {
 public:
  Response handle(const std::string& method, const std::string& path, const std::string& body);

  Response create(const std::string& body);
  Response state(const std::string& id);
  Response moves(const std::string& id);
  Response move(const std::string& id, const std::string& body);
  Response finalize(const std::string& id);
  Response transcript(const std::string& id);

  size_t size() const;

 private:
  std::shared_ptr<Session> find(const std::string& id) const;
  std::string fresh_id();

  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, std::shared_ptr<Session>> sessions_;
  uint64_t counter_ = 0;
};

// HTTP front end over a GameStore.
class HttpServer {
 public:
  HttpServer();
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // port 0 picks a free port. Returns the bound port.
  int bind(const std::string& host, int port);
  void listen();  // blocks until stop()
  void stop();
  GameStore& store();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace server

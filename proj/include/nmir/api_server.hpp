#pragma once

#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "nmir/session.hpp"

namespace httplib {
class Server;
}

namespace nmir {

/// Single-session HTTP JSON API. Mutations are serialized and checked
/// against `expected_version` (409 on mismatch); reads work on a snapshot.
/// When a persistence path is set, every mutation rewrites the session file.
class ApiServer {
 public:
  explicit ApiServer(Session session, std::optional<std::filesystem::path> persist_to = std::nullopt);
  ~ApiServer();

  ApiServer(const ApiServer&) = delete;
  ApiServer& operator=(const ApiServer&) = delete;

  /// Blocks until stop().
  bool listen(const std::string& host, int port);
  /// Binds to a free port and returns it; serve with listen_after_bind().
  int bind_to_any_port(const std::string& host);
  bool listen_after_bind();
  void wait_until_ready() const;
  void stop();

  Session snapshot() const;

 private:
  void install_routes();
  void commit(Session next);

  mutable std::mutex mutex_;
  Session session_;
  std::optional<std::filesystem::path> persist_to_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace nmir

#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "gemforge/server/service.hpp"

namespace gemforge::server {

/// Serves a LinkedDataService over HTTP/1.1 with a worker pool. Static
/// files under `/explorer/` come from `explorer_dir` when it is set.
class HttpServer {
 public:
  HttpServer(const LinkedDataService& service, std::optional<std::filesystem::path> explorer_dir = {});
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds the listening socket; port 0 picks a free one. Returns the bound
  /// port. Throws std::runtime_error when binding fails.
  int bind(const std::string& host, int port);
  /// Accepts connections until stop() is called.
  void run();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace gemforge::server

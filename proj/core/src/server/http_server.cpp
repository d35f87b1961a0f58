#include "gemforge/server/http_server.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "httplib.h"

namespace gemforge::server {

struct HttpServer::Impl {
  const LinkedDataService& service;
  httplib::Server http;

  explicit Impl(const LinkedDataService& s) : service(s) {}

  void serve(const httplib::Request& req, httplib::Response& res) const {
    HttpRequest request;
    request.method = req.method;
    request.path = req.path;
    request.body = req.body;
    request.remote_addr = req.remote_addr;
    for (const auto& [name, value] : req.params) request.params.emplace(name, value);
    for (const auto& [name, value] : req.headers) {
      std::string key = name;
      std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });
      request.headers.emplace(std::move(key), value);
    }

    HttpResponse response = service.handle(request);
    res.status = response.status;
    for (const auto& [name, value] : response.headers) res.set_header(name, value);
    if (!response.content_type.empty()) {
      res.set_content(std::move(response.body), response.content_type);
    }
  }
};

HttpServer::HttpServer(const LinkedDataService& service, std::optional<std::filesystem::path> explorer_dir)
    : impl_(std::make_unique<Impl>(service)) {
  if (explorer_dir && !impl_->http.set_mount_point("/explorer", explorer_dir->string())) {
    throw std::runtime_error("explorer directory not found: " + explorer_dir->string());
  }
  auto handler = [this](const httplib::Request& req, httplib::Response& res) { impl_->serve(req, res); };
  impl_->http.Get(".*", handler);
  impl_->http.Post(".*", handler);
  impl_->http.Options(".*", handler);
  impl_->http.Put(".*", handler);
  impl_->http.Delete(".*", handler);
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) {
    int bound = impl_->http.bind_to_any_port(host);
    if (bound <= 0) throw std::runtime_error("cannot bind " + host);
    return bound;
  }
  if (!impl_->http.bind_to_port(host, port)) {
    throw std::runtime_error("cannot bind " + host + ":" + std::to_string(port));
  }
  return port;
}

void HttpServer::run() { impl_->http.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_->http.is_running()) impl_->http.stop();
}

void HttpServer::wait_until_ready() const { impl_->http.wait_until_ready(); }

}  // namespace gemforge::server

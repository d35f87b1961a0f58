#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gemforge/rdf/snapshot.hpp"
#include "gemforge/server/config.hpp"
#include "gemforge/server/dataset.hpp"

namespace gemforge::server {

/// Transport-neutral request. Header names are lower case; `params` holds
/// the first value of every query-string (or form) parameter.
struct HttpRequest {
  std::string method = "GET";
  std::string path;
  std::map<std::string, std::string> params;
  std::map<std::string, std::string> headers;
  std::string body;
  std::string remote_addr = "127.0.0.1";

  std::string header(const std::string& name) const;
  std::optional<std::string> param(const std::string& name) const;
};

struct HttpResponse {
  int status = 200;
  std::string content_type;
  std::string body;
  std::vector<std::pair<std::string, std::string>> headers;

  std::optional<std::string> header(const std::string& name) const;
};

/// Arcs per direction returned by /api/node before `truncated` is set.
inline constexpr std::size_t kNodeArcCap = 200;

enum class Direction { Out, In, Both };

/// The linked-data routes over an atomically swappable Dataset snapshot.
/// Handlers only read; each request pins one snapshot for its lifetime.
class LinkedDataService {
 public:
  using Reloader = std::function<Dataset()>;

  LinkedDataService(ServerConfig config, Dataset dataset, Reloader reloader = {});

  HttpResponse handle(const HttpRequest& request) const;

  HttpResponse resource(const std::string& path, const std::string& accept) const;
  HttpResponse sparql(const std::optional<std::string>& query, const std::optional<std::string>& output,
                      const std::string& accept) const;
  HttpResponse ontology(const std::string& path, const std::string& accept) const;
  HttpResponse node(const std::optional<std::string>& iri, const std::string& dir) const;
  HttpResponse healthz() const;
  /// Rebuilds the dataset with the reloader and publishes it; only requests
  /// from a loopback address are allowed.
  HttpResponse reload(const std::string& remote_addr) const;

  std::shared_ptr<const Dataset> snapshot() const { return dataset_.get(); }
  const ServerConfig& config() const noexcept { return config_; }

 private:
  HttpResponse dispatch(const HttpRequest& request) const;

  ServerConfig config_;
  std::string ontology_base_;  // ontology_ns without its last path segment
  mutable rdf::Snapshot<Dataset> dataset_;  // internally synchronised
  Reloader reloader_;
};

/// The /api/node document for `iri`, or std::nullopt when the IRI appears
/// in no triple.
std::optional<nlohmann::ordered_json> node_json(const rdf::Graph& graph, const rdf::Iri& iri, Direction direction,
                                        std::size_t cap = kNodeArcCap);

}  // namespace gemforge::server

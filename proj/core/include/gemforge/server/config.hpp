#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace gemforge::server {

struct ServerConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::filesystem::path ontology_file;
  std::vector<std::filesystem::path> data_files;  // data and link files, .nt or .ttl
  std::string resource_ns;                        // defaults to the CG resource namespace
  std::string ontology_ns;                        // defaults to the CG ontology namespace
  std::vector<std::string> cors_allowed_origins;
  std::optional<std::filesystem::path> explorer_dir;

  ServerConfig();

  /// Throws std::invalid_argument when a namespace lacks its trailing '/',
  /// the port is out of range, or no ontology file is set.
  void check() const;
};

/// Keys: bind ("host:port"), host, port, ontology, data (string or array),
/// resource_ns, ontology_ns, cors_allowed_origins, explorer_dir. Relative
/// paths are resolved against `base_dir`.
void apply_config(ServerConfig& config, const nlohmann::json& json, const std::filesystem::path& base_dir = {});

using EnvLookup = std::function<std::optional<std::string>(const char*)>;

/// GEMFORGE_BIND (host:port), GEMFORGE_DATA (':'-separated paths) and
/// GEMFORGE_ONTOLOGY (path).
void apply_environment(ServerConfig& config, const EnvLookup& env);

/// Parses "host:port", ":port" or "port".
void parse_bind(ServerConfig& config, const std::string& bind);

}  // namespace gemforge::server

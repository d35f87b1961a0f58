#include "gemforge/server/config.hpp"

#include <charconv>
#include <stdexcept>

#include "gemforge/ontology/vocab.hpp"

namespace gemforge::server {

ServerConfig::ServerConfig()
    : resource_ns(ontology::vocab::kResourceNs), ontology_ns(ontology::vocab::kOntologyNs) {}

void ServerConfig::check() const {
  if (resource_ns.empty() || resource_ns.back() != '/') throw std::invalid_argument("resource_ns must end with '/'");
  if (ontology_ns.empty() || ontology_ns.back() != '/') throw std::invalid_argument("ontology_ns must end with '/'");
  if (port < 0 || port > 65535) throw std::invalid_argument("port out of range");
  if (ontology_file.empty()) throw std::invalid_argument("no ontology file configured");
}

void parse_bind(ServerConfig& config, const std::string& bind) {
  std::string host = config.host;
  std::string port_text = bind;
  if (auto colon = bind.rfind(':'); colon != std::string::npos) {
    if (colon > 0) host = bind.substr(0, colon);
    port_text = bind.substr(colon + 1);
  }
  int port = 0;
  auto [p, ec] = std::from_chars(port_text.data(), port_text.data() + port_text.size(), port);
  if (port_text.empty() || ec != std::errc() || p != port_text.data() + port_text.size() || port < 0 || port > 65535) {
    throw std::invalid_argument("invalid bind address '" + bind + "'");
  }
  config.host = host;
  config.port = port;
}

namespace {

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path path(p);
  return path.is_absolute() || base.empty() ? path : base / path;
}

const std::string& str(const nlohmann::json& j, const char* key) {
  if (!j.is_string()) throw std::invalid_argument(std::string(key) + " must be a string");
  return j.get_ref<const std::string&>();
}

}  // namespace

void apply_config(ServerConfig& config, const nlohmann::json& json, const std::filesystem::path& base_dir) {
  if (!json.is_object()) throw std::invalid_argument("server config must be an object");
  const nlohmann::json& section = json.contains("server") ? json["server"] : json;
  for (const auto& [key, value] : section.items()) {
    if (key == "bind") {
      parse_bind(config, str(value, "bind"));
    } else if (key == "host") {
      config.host = str(value, "host");
    } else if (key == "port") {
      if (!value.is_number_integer()) throw std::invalid_argument("port must be an integer");
      config.port = value.get<int>();
    } else if (key == "ontology") {
      config.ontology_file = resolve(base_dir, str(value, "ontology"));
    } else if (key == "data") {
      config.data_files.clear();
      if (value.is_string()) {
        config.data_files.push_back(resolve(base_dir, value.get<std::string>()));
      } else if (value.is_array()) {
        for (const auto& v : value) config.data_files.push_back(resolve(base_dir, str(v, "data")));
      } else {
        throw std::invalid_argument("data must be a path or a list of paths");
      }
    } else if (key == "resource_ns") {
      config.resource_ns = str(value, "resource_ns");
    } else if (key == "ontology_ns") {
      config.ontology_ns = str(value, "ontology_ns");
    } else if (key == "cors_allowed_origins") {
      if (!value.is_array()) throw std::invalid_argument("cors_allowed_origins must be a list");
      config.cors_allowed_origins.clear();
      for (const auto& v : value) config.cors_allowed_origins.push_back(str(v, "cors_allowed_origins"));
    } else if (key == "explorer_dir") {
      config.explorer_dir = resolve(base_dir, str(value, "explorer_dir"));
    } else {
      throw std::invalid_argument("unknown server config key '" + key + "'");
    }
  }
}

void apply_environment(ServerConfig& config, const EnvLookup& env) {
  if (auto bind = env("GEMFORGE_BIND"); bind && !bind->empty()) parse_bind(config, *bind);
  if (auto onto = env("GEMFORGE_ONTOLOGY"); onto && !onto->empty()) config.ontology_file = *onto;
  if (auto data = env("GEMFORGE_DATA"); data && !data->empty()) {
    config.data_files.clear();
    std::size_t start = 0;
    for (;;) {
      auto end = data->find(':', start);
      std::string item = data->substr(start, end == std::string::npos ? std::string::npos : end - start);
      if (!item.empty()) config.data_files.emplace_back(item);
      if (end == std::string::npos) break;
      start = end + 1;
    }
  }
}

}  // namespace gemforge::server

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace gemforge::util {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses a TOML document restricted to what gemforge configs use: tables
/// (`[a.b]`), bare or quoted keys, strings, integers, floats, booleans and
/// single-line arrays of those. Anything else is a ConfigError.
nlohmann::json parse_toml(std::string_view text);

/// JSON when the first significant character is `{`, TOML otherwise.
nlohmann::json parse_config(std::string_view text);

nlohmann::json load_config_file(const std::filesystem::path& path);

}  // namespace gemforge::util

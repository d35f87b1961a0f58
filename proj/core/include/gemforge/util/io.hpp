#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gemforge::util {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace gemforge::util

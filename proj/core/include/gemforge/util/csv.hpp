#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gemforge::util {

class CsvError : public std::runtime_error {
 public:
  CsvError(const std::string& message, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct CsvRow {
  std::size_t line = 0;  // 1-based line where the row starts
  std::vector<std::string> fields;
};

/// RFC 4180 reader: quoted fields may contain commas, doubled quotes and
/// newlines. CRLF and LF line endings are accepted; blank lines are skipped.
std::vector<CsvRow> parse_csv(std::string_view text);

/// Quotes `field` only when it needs quoting.
std::string csv_field(std::string_view field);

}  // namespace gemforge::util

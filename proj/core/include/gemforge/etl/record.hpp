#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gemforge/etl/category.hpp"

namespace gemforge::etl {

struct GemRecord {
  std::uint64_t id = 0;
  std::string name;
  std::optional<std::string> name_lang;
  std::vector<std::string> categories;
  std::uint64_t city_id = 0;
  std::string city_name;
  double lat = 0.0;
  double lon = 0.0;
  std::map<std::string, std::string> descriptions;  // language tag -> text
  std::vector<std::string> links;
  std::optional<std::string> valid_from;  // xsd:date lexical form
  std::optional<std::string> valid_to;
  OsmTags osm_tags;
};

struct Rejection {
  std::string id;  // as written in the input; may be empty or malformed
  std::string reason;
};

/// Records that parsed, plus rows that could not even be read as records.
struct RecordBatch {
  std::vector<GemRecord> records;
  std::vector<Rejection> rejected;
};

enum class InputFormat { Csv, JsonLines };

/// CSV columns (header row required, any order):
///   id,name,name_lang,categories,city_id,city_name,lat,lon,
///   descriptions,links,valid_from,valid_to,osm_tags
/// Multi-valued cells use '|' between items; descriptions are `lang=text`,
/// osm_tags are `key=value`. Only id, name, categories, city_id, city_name,
/// lat and lon are mandatory columns.
RecordBatch read_records(std::string_view text, InputFormat format);

/// Format from the extension: .csv, otherwise JSON lines (.jsonl, .ndjson, .json).
/// Throws util::IoError when the file cannot be read.
RecordBatch read_records_file(const std::filesystem::path& path);

std::string write_records_csv(const std::vector<GemRecord>& records);

}  // namespace gemforge::etl

#include "gemforge/etl/record.hpp"

#include <charconv>
#include <cmath>

#include <nlohmann/json.hpp>

#include "gemforge/util/csv.hpp"
#include "gemforge/util/io.hpp"

namespace gemforge::etl {

namespace {

struct FieldError {
  std::string reason;
};

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  if (trim(s).empty()) return out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    std::string item = trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (!item.empty()) out.push_back(std::move(item));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::uint64_t parse_id(std::string_view text, const char* field) {
  std::string t = trim(text);
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || p != t.data() + t.size()) {
    throw FieldError{std::string(field) + " is not a positive integer: '" + t + "'"};
  }
  return v;
}

double parse_degrees(std::string_view text, const char* field) {
  std::string t = trim(text);
  double v = 0;
  const char* b = t.data() + (!t.empty() && t[0] == '+' ? 1 : 0);
  auto [p, ec] = std::from_chars(b, t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || p != t.data() + t.size() || !std::isfinite(v)) {
    throw FieldError{std::string(field) + " is not a number: '" + t + "'"};
  }
  return v;
}

std::map<std::string, std::string> parse_pairs(std::string_view cell, const char* field) {
  std::map<std::string, std::string> out;
  for (const auto& item : split(cell, '|')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw FieldError{std::string(field) + " item lacks key=value: '" + item + "'"};
    out[trim(std::string_view(item).substr(0, eq))] = trim(std::string_view(item).substr(eq + 1));
  }
  return out;
}

std::optional<std::string> optional_text(std::string_view s) {
  std::string t = trim(s);
  if (t.empty()) return std::nullopt;
  return t;
}

RecordBatch read_csv(std::string_view text) {
  RecordBatch batch;
  std::vector<util::CsvRow> rows = util::parse_csv(text);
  if (rows.empty()) return batch;

  std::map<std::string, std::size_t> column;
  for (std::size_t i = 0; i < rows[0].fields.size(); ++i) column[trim(rows[0].fields[i])] = i;
  for (const char* required : {"id", "name", "categories", "city_id", "city_name", "lat", "lon"}) {
    if (!column.count(required)) throw util::IoError(std::string("CSV header lacks column '") + required + "'");
  }

  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& fields = rows[r].fields;
    auto cell = [&](const char* name) -> std::string_view {
      auto it = column.find(name);
      if (it == column.end() || it->second >= fields.size()) return {};
      return fields[it->second];
    };
    std::string raw_id = trim(cell("id"));
    try {
      if (fields.size() != rows[0].fields.size()) {
        throw FieldError{"row has " + std::to_string(fields.size()) + " fields, header has " +
                         std::to_string(rows[0].fields.size())};
      }
      GemRecord rec;
      rec.id = parse_id(raw_id, "id");
      rec.name = trim(cell("name"));
      rec.name_lang = optional_text(cell("name_lang"));
      rec.categories = split(cell("categories"), '|');
      rec.city_id = parse_id(cell("city_id"), "city_id");
      rec.city_name = trim(cell("city_name"));
      rec.lat = parse_degrees(cell("lat"), "lat");
      rec.lon = parse_degrees(cell("lon"), "lon");
      rec.descriptions = parse_pairs(cell("descriptions"), "descriptions");
      rec.links = split(cell("links"), '|');
      rec.valid_from = optional_text(cell("valid_from"));
      rec.valid_to = optional_text(cell("valid_to"));
      rec.osm_tags = parse_pairs(cell("osm_tags"), "osm_tags");
      batch.records.push_back(std::move(rec));
    } catch (const FieldError& e) {
      batch.rejected.push_back({raw_id, "line " + std::to_string(rows[r].line) + ": " + e.reason});
    }
  }
  return batch;
}

std::string json_scalar(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_unsigned() || v.is_number_integer() || v.is_number_float()) return v.dump();
  throw FieldError{"expected a string or number, got " + std::string(v.type_name())};
}

std::vector<std::string> json_strings(const nlohmann::json& v, const char* field) {
  if (v.is_string()) return split(v.get<std::string>(), '|');
  if (!v.is_array()) throw FieldError{std::string(field) + " must be an array of strings"};
  std::vector<std::string> out;
  for (const auto& item : v) {
    if (!item.is_string()) throw FieldError{std::string(field) + " must be an array of strings"};
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::map<std::string, std::string> json_pairs(const nlohmann::json& v, const char* field) {
  if (v.is_string()) return parse_pairs(v.get<std::string>(), field);
  if (!v.is_object()) throw FieldError{std::string(field) + " must be an object"};
  std::map<std::string, std::string> out;
  for (const auto& [k, val] : v.items()) {
    if (!val.is_string()) throw FieldError{std::string(field) + "." + k + " must be a string"};
    out[k] = val.get<std::string>();
  }
  return out;
}

RecordBatch read_json_lines(std::string_view text) {
  RecordBatch batch;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;

    std::string raw_id;
    try {
      nlohmann::json obj;
      try {
        obj = nlohmann::json::parse(line);
      } catch (const nlohmann::json::parse_error& e) {
        throw FieldError{std::string("invalid JSON: ") + e.what()};
      }
      if (!obj.is_object()) throw FieldError{"expected a JSON object"};
      if (obj.contains("id")) raw_id = json_scalar(obj["id"]);
      auto get = [&](const char* key) -> const nlohmann::json* {
        auto it = obj.find(key);
        return it == obj.end() || it->is_null() ? nullptr : &*it;
      };
      auto need = [&](const char* key) -> const nlohmann::json& {
        if (const auto* v = get(key)) return *v;
        throw FieldError{std::string("missing field '") + key + "'"};
      };

      GemRecord rec;
      rec.id = parse_id(json_scalar(need("id")), "id");
      rec.name = trim(json_scalar(need("name")));
      if (const auto* v = get("name_lang")) rec.name_lang = optional_text(json_scalar(*v));
      rec.categories = json_strings(need("categories"), "categories");
      rec.city_id = parse_id(json_scalar(need("city_id")), "city_id");
      rec.city_name = trim(json_scalar(need("city_name")));
      rec.lat = parse_degrees(json_scalar(need("lat")), "lat");
      rec.lon = parse_degrees(json_scalar(need("lon")), "lon");
      if (const auto* v = get("descriptions")) rec.descriptions = json_pairs(*v, "descriptions");
      if (const auto* v = get("links")) rec.links = json_strings(*v, "links");
      if (const auto* v = get("valid_from")) rec.valid_from = optional_text(json_scalar(*v));
      if (const auto* v = get("valid_to")) rec.valid_to = optional_text(json_scalar(*v));
      if (const auto* v = get("osm_tags")) rec.osm_tags = json_pairs(*v, "osm_tags");
      batch.records.push_back(std::move(rec));
    } catch (const FieldError& e) {
      batch.rejected.push_back({raw_id, "line " + std::to_string(line_no) + ": " + e.reason});
    }
  }
  return batch;
}

std::string format_degrees(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& i : items) out += (out.empty() ? "" : "|") + i;
  return out;
}

std::string join_pairs(const std::map<std::string, std::string>& pairs) {
  std::string out;
  for (const auto& [k, v] : pairs) out += (out.empty() ? "" : "|") + k + "=" + v;
  return out;
}

}  // namespace

RecordBatch read_records(std::string_view text, InputFormat format) {
  return format == InputFormat::Csv ? read_csv(text) : read_json_lines(text);
}

RecordBatch read_records_file(const std::filesystem::path& path) {
  std::string text = util::read_file(path);
  return read_records(text, path.extension() == ".csv" ? InputFormat::Csv : InputFormat::JsonLines);
}

std::string write_records_csv(const std::vector<GemRecord>& records) {
  using util::csv_field;
  std::string out = "id,name,name_lang,categories,city_id,city_name,lat,lon,descriptions,links,valid_from,valid_to,osm_tags\n";
  for (const auto& r : records) {
    out += std::to_string(r.id) + ',' + csv_field(r.name) + ',' + csv_field(r.name_lang.value_or("")) + ',' +
           csv_field(join(r.categories)) + ',' + std::to_string(r.city_id) + ',' + csv_field(r.city_name) + ',' +
           format_degrees(r.lat) + ',' + format_degrees(r.lon) + ',' + csv_field(join_pairs(r.descriptions)) + ',' +
           csv_field(join(r.links)) + ',' + csv_field(r.valid_from.value_or("")) + ',' +
           csv_field(r.valid_to.value_or("")) + ',' + csv_field(join_pairs(r.osm_tags)) + '\n';
  }
  return out;
}

}  // namespace gemforge::etl

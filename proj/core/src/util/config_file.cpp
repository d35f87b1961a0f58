#include "gemforge/util/config_file.hpp"

#include <cctype>
#include <charconv>

#include "gemforge/util/io.hpp"

namespace gemforge::util {

namespace {

class TomlLine {
 public:
  TomlLine(std::string_view text, std::size_t line) : s_(text), line_(line) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw ConfigError("line " + std::to_string(line_) + ": " + msg);
  }

  void skip_ws() {
    while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t')) ++i_;
  }
  bool at_end_or_comment() {
    skip_ws();
    return i_ >= s_.size() || s_[i_] == '#';
  }
  bool eat(char c) {
    skip_ws();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  std::string key() {
    skip_ws();
    if (i_ < s_.size() && s_[i_] == '"') return basic_string();
    std::size_t start = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' || s_[i_] == '-')) ++i_;
    if (start == i_) fail("expected a key");
    return std::string(s_.substr(start, i_ - start));
  }

  std::vector<std::string> dotted_key() {
    std::vector<std::string> parts{key()};
    while (eat('.')) parts.push_back(key());
    return parts;
  }

  nlohmann::json value() {
    skip_ws();
    if (i_ >= s_.size()) fail("expected a value");
    char c = s_[i_];
    if (c == '"') return basic_string();
    if (c == '\'') {
      std::size_t end = s_.find('\'', i_ + 1);
      if (end == std::string_view::npos) fail("unterminated literal string");
      std::string out(s_.substr(i_ + 1, end - i_ - 1));
      i_ = end + 1;
      return out;
    }
    if (c == '[') {
      ++i_;
      nlohmann::json arr = nlohmann::json::array();
      if (eat(']')) return arr;
      for (;;) {
        arr.push_back(value());
        if (eat(']')) return arr;
        expect(',');
        if (eat(']')) return arr;
      }
    }
    std::size_t start = i_;
    while (i_ < s_.size() && s_[i_] != ',' && s_[i_] != ']' && s_[i_] != '#' && s_[i_] != ' ' && s_[i_] != '\t') ++i_;
    std::string tok(s_.substr(start, i_ - start));
    if (tok == "true") return true;
    if (tok == "false") return false;
    std::string digits;
    for (char d : tok) {
      if (d != '_') digits += d;
    }
    const char* b = digits.data() + (!digits.empty() && digits[0] == '+' ? 1 : 0);
    const char* e = digits.data() + digits.size();
    if (digits.find_first_of(".eE") == std::string::npos) {
      long long v = 0;
      auto [p, ec] = std::from_chars(b, e, v);
      if (ec == std::errc() && p == e && b != e) return v;
    } else {
      double v = 0;
      auto [p, ec] = std::from_chars(b, e, v);
      if (ec == std::errc() && p == e && b != e) return v;
    }
    fail("unsupported value '" + tok + "'");
  }

 private:
  std::string basic_string() {
    ++i_;
    std::string out;
    while (i_ < s_.size() && s_[i_] != '"') {
      char c = s_[i_++];
      if (c != '\\') {
        out += c;
        continue;
      }
      if (i_ >= s_.size()) break;
      char esc = s_[i_++];
      switch (esc) {
        case 'n': out += '\n'; break;
        case 't': out += '\t'; break;
        case 'r': out += '\r'; break;
        case '"': out += '"'; break;
        case '\\': out += '\\'; break;
        default: fail(std::string("unsupported escape \\") + esc);
      }
    }
    if (i_ >= s_.size()) fail("unterminated string");
    ++i_;
    return out;
  }

  std::string_view s_;
  std::size_t line_;
  std::size_t i_ = 0;
};

nlohmann::json& descend(nlohmann::json& root, const std::vector<std::string>& path, const TomlLine& at) {
  nlohmann::json* node = &root;
  for (const auto& part : path) {
    nlohmann::json& next = (*node)[part];
    if (next.is_null()) next = nlohmann::json::object();
    if (!next.is_object()) at.fail("key '" + part + "' is not a table");
    node = &next;
  }
  return *node;
}

}  // namespace

nlohmann::json parse_toml(std::string_view text) {
  nlohmann::json root = nlohmann::json::object();
  nlohmann::json* table = &root;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    pos = end + 1;
    ++line_no;

    TomlLine line(raw, line_no);
    if (line.at_end_or_comment()) continue;
    if (line.eat('[')) {
      if (line.eat('[')) line.fail("arrays of tables are not supported");
      auto path = line.dotted_key();
      line.expect(']');
      if (!line.at_end_or_comment()) line.fail("trailing characters after table header");
      table = &descend(root, path, line);
      continue;
    }
    auto path = line.dotted_key();
    line.expect('=');
    nlohmann::json value = line.value();
    if (!line.at_end_or_comment()) line.fail("trailing characters after value");
    std::string leaf = path.back();
    path.pop_back();
    nlohmann::json& target = descend(*table, path, line);
    if (target.contains(leaf)) line.fail("duplicate key '" + leaf + "'");
    target[leaf] = std::move(value);
  }
  return root;
}

nlohmann::json parse_config(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') {
      try {
        return nlohmann::json::parse(text);
      } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(e.what());
      }
    }
    break;
  }
  return parse_toml(text);
}

nlohmann::json load_config_file(const std::filesystem::path& path) {
  return parse_config(read_file(path));
}

}  // namespace gemforge::util

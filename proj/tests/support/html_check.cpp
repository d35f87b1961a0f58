#include "html_check.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <vector>

namespace gemforge::testing {

namespace {

constexpr std::array<std::string_view, 8> kVoid = {"meta", "br", "link", "img", "hr", "input", "col", "wbr"};

bool is_void(std::string_view name) { return std::find(kVoid.begin(), kVoid.end(), name) != kVoid.end(); }

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::optional<std::string> check_html(std::string_view html) {
  std::size_t start = html.find_first_not_of(" \t\r\n");
  if (start == std::string_view::npos || lower(html.substr(start, 15)) != "<!doctype html>") return "missing doctype";

  std::vector<std::string> stack;
  bool saw_root = false;
  std::size_t i = start + 15;
  while ((i = html.find('<', i)) != std::string_view::npos) {
    std::size_t end = html.find('>', i);
    if (end == std::string_view::npos) return "unterminated tag at offset " + std::to_string(i);
    std::string_view tag = html.substr(i + 1, end - i - 1);
    i = end + 1;
    if (tag.rfind("!--", 0) == 0) continue;
    bool closing = !tag.empty() && tag[0] == '/';
    if (closing) tag.remove_prefix(1);
    std::size_t name_end = 0;
    while (name_end < tag.size() && (std::isalnum(static_cast<unsigned char>(tag[name_end])) || tag[name_end] == '-')) {
      ++name_end;
    }
    std::string name = lower(tag.substr(0, name_end));
    if (name.empty()) return "bad tag <" + std::string(tag) + ">";
    if (closing) {
      if (stack.empty() || stack.back() != name) {
        return "unexpected </" + name + ">" + (stack.empty() ? "" : " while <" + stack.back() + "> is open");
      }
      stack.pop_back();
      continue;
    }
    if (is_void(name) || (!tag.empty() && tag.back() == '/')) continue;
    if (stack.empty()) {
      if (name != "html" || saw_root) return "content outside the <html> root";
      saw_root = true;
    }
    stack.push_back(name);
    if (name == "style" || name == "script") {
      std::size_t close = lower(html.substr(i)).find("</" + name);
      if (close == std::string::npos) return "unterminated <" + name + ">";
      i += close;
    }
  }
  if (!stack.empty()) return "<" + stack.back() + "> never closed";
  if (!saw_root) return "no <html> element";
  return std::nullopt;
}

}  // namespace gemforge::testing

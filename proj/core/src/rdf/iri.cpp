#include "gemforge/rdf/iri.hpp"

#include <cctype>

namespace gemforge::rdf {

namespace {

struct Parts {
  std::optional<std::string_view> scheme;
  std::optional<std::string_view> authority;
  std::string_view path;
  std::optional<std::string_view> query;
  std::optional<std::string_view> fragment;
};

Parts split(std::string_view s) {
  Parts p;
  if (auto hash = s.find('#'); hash != std::string_view::npos) {
    p.fragment = s.substr(hash + 1);
    s = s.substr(0, hash);
  }
  if (auto q = s.find('?'); q != std::string_view::npos) {
    p.query = s.substr(q + 1);
    s = s.substr(0, q);
  }
  if (has_scheme(s)) {
    auto colon = s.find(':');
    p.scheme = s.substr(0, colon);
    s = s.substr(colon + 1);
  }
  if (s.substr(0, 2) == "//") {
    s = s.substr(2);
    auto slash = s.find('/');
    p.authority = s.substr(0, slash);
    s = slash == std::string_view::npos ? std::string_view{} : s.substr(slash);
  }
  p.path = s;
  return p;
}

std::string remove_dot_segments(std::string_view input) {
  std::string in(input);
  std::string out;
  while (!in.empty()) {
    if (in.rfind("../", 0) == 0) {
      in.erase(0, 3);
    } else if (in.rfind("./", 0) == 0) {
      in.erase(0, 2);
    } else if (in.rfind("/./", 0) == 0) {
      in.replace(0, 3, "/");
    } else if (in == "/.") {
      in = "/";
    } else if (in.rfind("/../", 0) == 0 || in == "/..") {
      in = in == "/.." ? std::string("/") : in.substr(3);
      auto last = out.rfind('/');
      out.erase(last == std::string::npos ? 0 : last);
    } else if (in == "." || in == "..") {
      in.clear();
    } else {
      std::size_t start = in[0] == '/' ? 1 : 0;
      std::size_t next = in.find('/', start);
      out += in.substr(0, next);
      in.erase(0, next == std::string::npos ? in.size() : next);
    }
  }
  return out;
}

std::string merge_paths(const Parts& base, std::string_view ref_path) {
  if (base.authority && base.path.empty()) return "/" + std::string(ref_path);
  auto last = base.path.rfind('/');
  if (last == std::string_view::npos) return std::string(ref_path);
  return std::string(base.path.substr(0, last + 1)) + std::string(ref_path);
}

}  // namespace

bool has_scheme(std::string_view ref) noexcept {
  if (ref.empty() || !std::isalpha(static_cast<unsigned char>(ref[0]))) return false;
  for (std::size_t i = 1; i < ref.size(); ++i) {
    unsigned char c = ref[i];
    if (c == ':') return true;
    if (!(std::isalnum(c) || c == '+' || c == '-' || c == '.')) return false;
  }
  return false;
}

std::string resolve_iri(std::string_view base_text, std::string_view ref_text) {
  Parts ref = split(ref_text);
  Parts base = split(base_text);
  std::string scheme;
  std::optional<std::string> authority;
  std::string path;
  std::optional<std::string_view> query;

  if (ref.scheme) {
    scheme = *ref.scheme;
    if (ref.authority) authority = std::string(*ref.authority);
    path = remove_dot_segments(ref.path);
    query = ref.query;
  } else {
    scheme = base.scheme.value_or("");
    if (ref.authority) {
      authority = std::string(*ref.authority);
      path = remove_dot_segments(ref.path);
      query = ref.query;
    } else {
      if (base.authority) authority = std::string(*base.authority);
      if (ref.path.empty()) {
        path = std::string(base.path);
        query = ref.query ? ref.query : base.query;
      } else {
        path = ref.path.front() == '/' ? remove_dot_segments(ref.path)
                                       : remove_dot_segments(merge_paths(base, ref.path));
        query = ref.query;
      }
    }
  }

  std::string out = scheme + ":";
  if (authority) out += "//" + *authority;
  out += path;
  if (query) out += "?" + std::string(*query);
  if (ref.fragment) out += "#" + std::string(*ref.fragment);
  return out;
}

}  // namespace gemforge::rdf

// Lexical helpers shared by the Turtle and N-Triples readers.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>

#include "gemforge/rdf/parse.hpp"
#include "gemforge/rdf/term.hpp"

namespace gemforge::rdf::detail {

void append_utf8(std::string& out, std::uint32_t cp);

inline bool pn_chars_base(unsigned char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c >= 0x80; }
inline bool pn_chars(unsigned char c) { return pn_chars_base(c) || (c >= '0' && c <= '9') || c == '_' || c == '-'; }

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  char get() { return done() ? '\0' : text_[pos_++]; }
  std::size_t pos() const { return pos_; }
  void seek(std::size_t pos) { pos_ = pos; }
  bool starts_with(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }
  /// Case-insensitive keyword test.
  bool starts_with_keyword(std::string_view kw) const;

  void expect(char c, const char* what);

  /// Skips whitespace; with `comments`, also `#` comments. With
  /// `stop_at_newline`, a newline ends the skip without being consumed.
  void skip_ws(bool comments = true, bool stop_at_newline = false);

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const;

  /// `<...>` with \u escapes decoded. Returns the raw (possibly relative) text.
  std::string read_iriref();
  /// Quoted string: "..." or '...' and, with `allow_long`, the triple-quoted
  /// forms. Escapes are decoded.
  std::string read_string(bool allow_long);
  std::string read_langtag();
  /// Label after `_:`.
  std::string read_blank_label();
  /// PN_PREFIX, possibly empty; the ':' is not consumed.
  std::string read_pn_prefix();
  /// PN_LOCAL with %XX kept verbatim and backslash escapes decoded.
  std::string read_pn_local();

 private:
  std::uint32_t read_hex(int digits);
  void read_escape(std::string& out);

  std::string_view text_;
  std::size_t pos_ = 0;
};

/// Maps document blank-node labels to b0, b1, ... in order of first use.
class BlankNodeLabeler {
 public:
  BlankNode named(const std::string& label) {
    auto [it, inserted] = labels_.try_emplace(label, "");
    if (inserted) it->second = next_label();
    return BlankNode(it->second);
  }
  BlankNode fresh() { return BlankNode(next_label()); }

 private:
  std::string next_label() { return "b" + std::to_string(counter_++); }

  std::unordered_map<std::string, std::string> labels_;
  std::size_t counter_ = 0;
};

}  // namespace gemforge::rdf::detail

#include "syntax.hpp"

#include <cctype>

namespace gemforge::rdf {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         message),
      message_(message),
      line_(line),
      column_(column) {}

namespace detail {

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

bool Cursor::starts_with_keyword(std::string_view kw) const {
  if (text_.size() - pos_ < kw.size()) return false;
  for (std::size_t i = 0; i < kw.size(); ++i) {
    if (std::toupper(static_cast<unsigned char>(text_[pos_ + i])) !=
        std::toupper(static_cast<unsigned char>(kw[i]))) {
      return false;
    }
  }
  return true;
}

void Cursor::fail_at(std::size_t pos, const std::string& message) const {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < pos && i < text_.size(); ++i) {
    if (text_[i] == '\n') {
      ++line;
      column = 1;
    } else if ((static_cast<unsigned char>(text_[i]) & 0xC0) != 0x80) {
      ++column;
    }
  }
  throw ParseError(message, line, column);
}

void Cursor::expect(char c, const char* what) {
  if (peek() != c) fail(std::string("expected ") + what);
  ++pos_;
}

void Cursor::skip_ws(bool comments, bool stop_at_newline) {
  while (!done()) {
    char c = peek();
    if (c == '\n' && stop_at_newline) return;
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++pos_;
    } else if (c == '#' && comments) {
      while (!done() && peek() != '\n') ++pos_;
    } else {
      return;
    }
  }
}

std::uint32_t Cursor::read_hex(int digits) {
  std::uint32_t value = 0;
  for (int i = 0; i < digits; ++i) {
    char c = get();
    value <<= 4;
    if (c >= '0' && c <= '9') {
      value |= static_cast<std::uint32_t>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      value |= static_cast<std::uint32_t>(c - 'a' + 10);
    } else if (c >= 'A' && c <= 'F') {
      value |= static_cast<std::uint32_t>(c - 'A' + 10);
    } else {
      fail_at(pos_ - 1, "invalid hex digit in escape");
    }
  }
  if (value > 0x10FFFF || (value >= 0xD800 && value <= 0xDFFF)) fail("escape is not a Unicode scalar value");
  return value;
}

std::string Cursor::read_iriref() {
  expect('<', "'<'");
  std::string out;
  while (true) {
    if (done()) fail("unterminated IRI");
    char c = get();
    if (c == '>') break;
    if (c == '\\') {
      char kind = get();
      if (kind == 'u') {
        append_utf8(out, read_hex(4));
      } else if (kind == 'U') {
        append_utf8(out, read_hex(8));
      } else {
        fail_at(pos_ - 1, "invalid escape in IRI");
      }
      continue;
    }
    auto uc = static_cast<unsigned char>(c);
    if (uc <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' || c == '^' || c == '`') {
      fail_at(pos_ - 1, "invalid character in IRI");
    }
    out += c;
  }
  return out;
}

void Cursor::read_escape(std::string& out) {
  char c = get();
  switch (c) {
    case 't': out += '\t'; break;
    case 'b': out += '\b'; break;
    case 'n': out += '\n'; break;
    case 'r': out += '\r'; break;
    case 'f': out += '\f'; break;
    case '"': out += '"'; break;
    case '\'': out += '\''; break;
    case '\\': out += '\\'; break;
    case 'u': append_utf8(out, read_hex(4)); break;
    case 'U': append_utf8(out, read_hex(8)); break;
    default: fail_at(pos_ - 1, "invalid string escape");
  }
}

std::string Cursor::read_string(bool allow_long) {
  char quote = peek();
  if (quote != '"' && quote != '\'') fail("expected string literal");
  std::string out;
  bool is_long = allow_long && peek(1) == quote && peek(2) == quote;
  if (is_long) {
    pos_ += 3;
    while (true) {
      if (done()) fail("unterminated long string");
      if (peek() == quote && peek(1) == quote && peek(2) == quote) {
        // A run of more than three quotes ends with the last three.
        while (peek(3) == quote) out += get();
        pos_ += 3;
        return out;
      }
      char c = get();
      if (c == '\\') {
        read_escape(out);
      } else {
        out += c;
      }
    }
  }
  ++pos_;
  while (true) {
    if (done()) fail("unterminated string");
    char c = get();
    if (c == quote) return out;
    if (c == '\n' || c == '\r') fail_at(pos_ - 1, "newline in short string");
    if (c == '\\') {
      read_escape(out);
    } else {
      out += c;
    }
  }
}

std::string Cursor::read_langtag() {
  std::size_t start = pos_;
  while (std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
  if (pos_ == start) fail("expected language tag");
  while (peek() == '-' && std::isalnum(static_cast<unsigned char>(peek(1)))) {
    ++pos_;
    while (std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
  }
  return std::string(text_.substr(start, pos_ - start));
}

std::string Cursor::read_blank_label() {
  if (!(peek() == '_' && peek(1) == ':')) fail("expected blank node");
  pos_ += 2;
  std::size_t start = pos_;
  auto name_char = [](char c) {
    auto uc = static_cast<unsigned char>(c);
    return std::isalnum(uc) || c == '_' || c == '-' || uc >= 0x80;
  };
  if (!name_char(peek()) || peek() == '-') fail("invalid blank node label");
  while (!done()) {
    if (name_char(peek())) {
      ++pos_;
    } else if (peek() == '.' && name_char(peek(1))) {
      ++pos_;
    } else {
      break;
    }
  }
  return std::string(text_.substr(start, pos_ - start));
}

namespace {

bool is_hex(char c) { return std::isxdigit(static_cast<unsigned char>(c)) != 0; }
bool local_escapable(char c) {
  static constexpr std::string_view kChars = "_~.-!$&'()*+,;=/?#@%";
  return kChars.find(c) != std::string_view::npos;
}

}  // namespace

std::string Cursor::read_pn_prefix() {
  std::string out;
  if (!pn_chars_base(static_cast<unsigned char>(peek()))) return out;
  while (true) {
    auto c = static_cast<unsigned char>(peek());
    if (pn_chars(c)) {
      out += get();
    } else if (c == '.' && pn_chars(static_cast<unsigned char>(peek(1)))) {
      out += get();
    } else {
      break;
    }
  }
  return out;
}

std::string Cursor::read_pn_local() {
  std::string out;
  bool first = true;
  while (true) {
    char c = peek();
    auto uc = static_cast<unsigned char>(c);
    bool plain = pn_chars(uc) || c == ':' || (first && std::isdigit(uc));
    if (plain && !(first && c == '-')) {
      out += get();
    } else if (c == '%' && is_hex(peek(1)) && is_hex(peek(2))) {
      out += get();
      out += get();
      out += get();
    } else if (c == '\\' && local_escapable(peek(1))) {
      get();
      out += get();
    } else if (c == '.' && !first) {
      // Dots are part of the name only when the name continues past them.
      std::size_t dots = 0;
      while (peek(dots) == '.') ++dots;
      char after = peek(dots);
      if (!(pn_chars(static_cast<unsigned char>(after)) || after == ':' || after == '%' || after == '\\')) break;
      for (std::size_t i = 0; i < dots; ++i) out += get();
    } else {
      break;
    }
    first = false;
  }
  return out;
}

}  // namespace detail
}  // namespace gemforge::rdf

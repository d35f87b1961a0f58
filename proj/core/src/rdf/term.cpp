#include "gemforge/rdf/term.hpp"

#include <cstdio>

#include "gemforge/rdf/iri.hpp"
#include "gemforge/rdf/vocab.hpp"

namespace gemforge::rdf {

namespace {

bool forbidden_iri_char(unsigned char c) {
  if (c <= 0x20) return true;
  switch (c) {
    case '<':
    case '>':
    case '"':
    case '{':
    case '}':
    case '|':
    case '^':
    case '`':
    case '\\':
      return true;
    default:
      return false;
  }
}

void hash_combine(std::size_t& seed, std::size_t value) {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace

bool Iri::is_valid(std::string_view value) noexcept {
  if (!has_scheme(value)) return false;
  for (unsigned char c : value) {
    if (forbidden_iri_char(c)) return false;
  }
  return true;
}

Iri::Iri(std::string value) : value_(std::move(value)) {
  if (!is_valid(value_)) throw InvalidTerm("invalid IRI: '" + value_ + "'");
}

bool BlankNode::is_valid_label(std::string_view label) noexcept {
  if (label.empty()) return false;
  for (char c : label) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

BlankNode::BlankNode(std::string label) : label_(std::move(label)) {
  if (!is_valid_label(label_)) throw InvalidTerm("invalid blank node label: '" + label_ + "'");
}

Literal::Literal(std::string lexical) : Literal(std::move(lexical), Iri(std::string(vocab::kXsdString))) {}

Literal::Literal(std::string lexical, Iri datatype)
    : lexical_(std::move(lexical)), datatype_(std::move(datatype)) {
  if (datatype_.view() == vocab::kRdfLangString) {
    throw InvalidTerm("rdf:langString literal requires a language tag");
  }
}

Literal::Literal(std::string lexical, Iri datatype, std::optional<std::string> lang)
    : lexical_(std::move(lexical)), datatype_(std::move(datatype)), lang_(std::move(lang)) {}

Literal Literal::with_language(std::string lexical, std::string lang) {
  if (lang.empty()) throw InvalidTerm("empty language tag");
  for (char c : lang) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-';
    if (!ok) throw InvalidTerm("invalid language tag: '" + lang + "'");
  }
  return Literal(std::move(lexical), Iri(std::string(vocab::kRdfLangString)), std::move(lang));
}

bool Literal::is_plain_string() const noexcept {
  return !lang_ && datatype_.view() == vocab::kXsdString;
}

std::string escape_ntriples_string(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (unsigned char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20 || c == 0x7f) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04X", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  return out;
}

std::string Term::to_ntriples() const {
  switch (kind()) {
    case Kind::Iri:
      return "<" + iri().str() + ">";
    case Kind::BlankNode:
      return "_:" + blank().label();
    case Kind::Literal: {
      const Literal& lit = literal();
      std::string out = "\"" + escape_ntriples_string(lit.lexical()) + "\"";
      if (lit.language()) {
        out += "@" + *lit.language();
      } else if (lit.datatype().view() != vocab::kXsdString) {
        out += "^^<" + lit.datatype().str() + ">";
      }
      return out;
    }
  }
  return {};
}

std::size_t Term::hash() const noexcept {
  std::size_t seed = value_.index();
  std::hash<std::string> h;
  switch (kind()) {
    case Kind::Iri:
      hash_combine(seed, h(iri().str()));
      break;
    case Kind::BlankNode:
      hash_combine(seed, h(blank().label()));
      break;
    case Kind::Literal:
      hash_combine(seed, h(literal().lexical()));
      hash_combine(seed, h(literal().datatype().str()));
      if (literal().language()) hash_combine(seed, h(*literal().language()));
      break;
  }
  return seed;
}

}  // namespace gemforge::rdf

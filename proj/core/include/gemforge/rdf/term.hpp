#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace gemforge::rdf {

class InvalidTerm : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Absolute IRI. Construction validates: a scheme followed by ':' and none of
/// the characters forbidden inside `<...>` in Turtle/N-Triples.
class Iri {
 public:
  explicit Iri(std::string value);

  const std::string& str() const noexcept { return value_; }
  std::string_view view() const noexcept { return value_; }

  static bool is_valid(std::string_view value) noexcept;

  friend bool operator==(const Iri&, const Iri&) = default;
  friend auto operator<=>(const Iri&, const Iri&) = default;

 private:
  std::string value_;
};

class BlankNode {
 public:
  explicit BlankNode(std::string label);

  const std::string& label() const noexcept { return label_; }

  static bool is_valid_label(std::string_view label) noexcept;

  friend bool operator==(const BlankNode&, const BlankNode&) = default;
  friend auto operator<=>(const BlankNode&, const BlankNode&) = default;

 private:
  std::string label_;
};

class Literal {
 public:
  /// xsd:string literal.
  explicit Literal(std::string lexical);
  /// Typed literal. Passing rdf:langString without a tag throws.
  Literal(std::string lexical, Iri datatype);
  /// Language-tagged literal; datatype becomes rdf:langString.
  static Literal with_language(std::string lexical, std::string lang);

  const std::string& lexical() const noexcept { return lexical_; }
  const Iri& datatype() const noexcept { return datatype_; }
  const std::optional<std::string>& language() const noexcept { return lang_; }

  bool is_plain_string() const noexcept;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;

 private:
  Literal(std::string lexical, Iri datatype, std::optional<std::string> lang);

  std::string lexical_;
  Iri datatype_;
  std::optional<std::string> lang_;
};

class Term {
 public:
  enum class Kind { Iri, BlankNode, Literal };

  Term(Iri iri) : value_(std::move(iri)) {}  // NOLINT(google-explicit-constructor)
  Term(BlankNode node) : value_(std::move(node)) {}  // NOLINT
  Term(Literal literal) : value_(std::move(literal)) {}  // NOLINT

  Kind kind() const noexcept { return static_cast<Kind>(value_.index()); }
  bool is_iri() const noexcept { return kind() == Kind::Iri; }
  bool is_blank() const noexcept { return kind() == Kind::BlankNode; }
  bool is_literal() const noexcept { return kind() == Kind::Literal; }

  const Iri& iri() const { return std::get<Iri>(value_); }
  const BlankNode& blank() const { return std::get<BlankNode>(value_); }
  const Literal& literal() const { return std::get<Literal>(value_); }

  /// N-Triples rendering of the term, e.g. `<http://e/a>`, `_:b0`, `"x"@pt`.
  std::string to_ntriples() const;

  std::size_t hash() const noexcept;

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;

 private:
  std::variant<Iri, BlankNode, Literal> value_;
};

std::string escape_ntriples_string(std::string_view s);

}  // namespace gemforge::rdf

template <>
struct std::hash<gemforge::rdf::Iri> {
  std::size_t operator()(const gemforge::rdf::Iri& iri) const noexcept {
    return std::hash<std::string>{}(iri.str());
  }
};

template <>
struct std::hash<gemforge::rdf::Term> {
  std::size_t operator()(const gemforge::rdf::Term& t) const noexcept { return t.hash(); }
};

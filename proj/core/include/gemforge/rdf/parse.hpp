#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gemforge/rdf/graph.hpp"

namespace gemforge::rdf {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// Parses a Turtle document. Supported: @prefix/@base (and the SPARQL-style
/// PREFIX/BASE), `a`, predicate-object and object lists, `[]` blank nodes,
/// language tags, `^^` datatypes, numeric and boolean shorthand. Collections
/// are rejected. Blank nodes are relabelled b0, b1, ... in order of first
/// occurrence.
Graph parse_turtle(std::string_view text, const std::optional<Iri>& base = std::nullopt);

/// Parses N-Triples, one statement per line. Blank nodes are relabelled as in
/// parse_turtle.
Graph parse_ntriples(std::string_view text);

/// Reads a `.nt` file as N-Triples and anything else as Turtle, using the
/// file URI as base. Throws util::IoError or ParseError; ParseError messages
/// are prefixed with the path.
Graph read_graph_file(const std::filesystem::path& path);

}  // namespace gemforge::rdf

#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gemforge/rdf/term.hpp"

namespace gemforge::sparql {

class QueryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A keyword outside the supported subset (ASK, OPTIONAL, ...).
class UnsupportedFeature : public QueryError {
 public:
  explicit UnsupportedFeature(std::string keyword)
      : QueryError("unsupported feature: " + keyword), keyword_(std::move(keyword)) {}
  const std::string& keyword() const noexcept { return keyword_; }

 private:
  std::string keyword_;
};

class QuerySyntaxError : public QueryError {
 public:
  QuerySyntaxError(const std::string& message, std::size_t line, std::size_t column)
      : QueryError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                   message),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct Variable {
  std::string name;  // without the leading '?' or '$'
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

/// Subject and object positions hold a term or a variable; the predicate
/// slot's term is always an IRI.
using PatternTerm = std::variant<rdf::Term, Variable>;

struct TriplePattern {
  PatternTerm subject;
  PatternTerm predicate;
  PatternTerm object;
  friend bool operator==(const TriplePattern&, const TriplePattern&) = default;
};

enum class CompareOp { Eq, Ne, Lt, Gt, Le, Ge };

struct Comparison {
  CompareOp op;
  PatternTerm lhs;
  PatternTerm rhs;
  friend bool operator==(const Comparison&, const Comparison&) = default;
};

struct RegexFilter {
  Variable var;
  std::string pattern;
  std::string flags;
  bool str = false;  // regex(str(?x), ...) rather than regex(?x, ...)
  friend bool operator==(const RegexFilter&, const RegexFilter&) = default;
};

using Filter = std::variant<Comparison, RegexFilter>;

struct SelectQuery {
  bool distinct = false;
  bool star = false;
  std::vector<Variable> vars;  // expanded from the BGP when `star`
  std::vector<TriplePattern> patterns;
  std::vector<Filter> filters;
  std::optional<std::size_t> limit;
  std::optional<std::size_t> offset;
  friend bool operator==(const SelectQuery&, const SelectQuery&) = default;
};

struct DescribeQuery {
  rdf::Iri iri;
  friend bool operator==(const DescribeQuery&, const DescribeQuery&) = default;
};

struct QueryAst {
  std::map<std::string, rdf::Iri> prefixes;
  std::variant<SelectQuery, DescribeQuery> form;

  bool is_describe() const noexcept { return std::holds_alternative<DescribeQuery>(form); }
  bool is_select() const noexcept { return std::holds_alternative<SelectQuery>(form); }
  const DescribeQuery& describe() const { return std::get<DescribeQuery>(form); }
  const SelectQuery& select() const { return std::get<SelectQuery>(form); }

  friend bool operator==(const QueryAst&, const QueryAst&) = default;
};

/// Throws QuerySyntaxError or UnsupportedFeature.
QueryAst parse_query(std::string_view text);

/// Canonical text: full IRIs, one pattern per line. parse_query(to_string(q)) == q
/// up to the prefix table.
std::string to_string(const QueryAst& query);

}  // namespace gemforge::sparql

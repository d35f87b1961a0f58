#pragma once

#include <optional>
#include <vector>

#include "gemforge/rdf/graph.hpp"
#include "gemforge/sparql/ast.hpp"

namespace gemforge::sparql {

using Row = std::vector<std::optional<rdf::Term>>;  // aligned with SolutionSet::vars

struct SolutionSet {
  std::vector<Variable> vars;
  std::vector<Row> rows;
};

/// Natural join of the triple patterns, most selective pattern first, then
/// FILTERs, projection, DISTINCT, a deterministic sort (unbound first, then
/// N-Triples text, column by column), OFFSET and LIMIT.
///
/// FILTER semantics: numeric literals compare as numbers; `=` and `!=`
/// otherwise compare terms; ordering comparisons also accept two simple
/// string literals or two literals of the same date datatype. Anything
/// else, including unbound variables, makes the filter false.
SolutionSet evaluate_select(const SelectQuery& query, const rdf::Graph& graph);

/// Concise bounded description of `iri`: its own triples, the triples of
/// blank nodes reachable from them, and every triple with `iri` as object.
rdf::Graph describe(const rdf::Graph& graph, const rdf::Iri& iri);

}  // namespace gemforge::sparql

#pragma once

#include <stdexcept>
#include <string>

#include "gemforge/rdf/format.hpp"
#include "gemforge/rdf/graph.hpp"

namespace gemforge::rdf {

class SerializeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes `graph` in one of the RDF syntaxes (Turtle, NTriples, RdfXml,
/// JsonLd). Output is deterministic: subjects, predicates and objects are
/// emitted in N-Triples text order.
///
/// RDF/XML uses flat `rdf:Description` elements and throws SerializeError for
/// predicates that cannot be split into namespace + NCName. JSON-LD is flat
/// expanded form with an `@context` holding the graph's prefixes.
std::string serialize(const Graph& graph, Format format);

std::string to_ntriples(const Graph& graph);
std::string to_turtle(const Graph& graph);
std::string to_rdfxml(const Graph& graph);
std::string to_jsonld(const Graph& graph);

}  // namespace gemforge::rdf

#pragma once

#include <string>

#include "gemforge/rdf/format.hpp"
#include "gemforge/sparql/evaluate.hpp"

namespace gemforge::sparql {

/// W3C SPARQL 1.1 Query Results JSON, compact, no trailing newline.
std::string to_results_json(const SolutionSet& solutions);
/// W3C SPARQL Query Results XML.
std::string to_results_xml(const SolutionSet& solutions);

/// `format` must be SparqlJson or SparqlXml.
std::string serialize_results(const SolutionSet& solutions, rdf::Format format);

}  // namespace gemforge::sparql

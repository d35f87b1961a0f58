#pragma once

#include <string>
#include <string_view>

#include "gemforge/ontology/model.hpp"
#include "gemforge/rdf/graph.hpp"
#include "gemforge/sparql/evaluate.hpp"

namespace gemforge::server {

std::string html_escape(std::string_view text);

/// Property table for `iri` built from its description `cbd`: outbound
/// arcs, blank-node details, an inverse-arc section and an owl:sameAs
/// section. Every IRI is an anchor to itself. `labels` supplies display
/// labels; `variant_base` (e.g. "/resource/cultural-gems/27213") yields
/// the download links.
std::string render_resource_page(const rdf::Iri& iri, const rdf::Graph& cbd, const rdf::Graph& labels,
                                 std::string_view variant_base);

/// Label, superclasses, subclasses and instance count of an ontology class.
std::string render_class_page(const ontology::OntologyModel& model, const rdf::Iri& cls, std::size_t instances);

std::string render_results_table(const sparql::SolutionSet& solutions);

std::string render_message_page(int status, std::string_view title, std::string_view message);

}  // namespace gemforge::server

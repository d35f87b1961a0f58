#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "gemforge/rdf/format.hpp"
#include "gemforge/rdf/graph.hpp"

namespace gemforge::server {

/// Status, media type and body of one query evaluation. Shared by the HTTP
/// endpoint and `gemforge query` so both produce identical bytes.
struct QueryResponse {
  int status = 200;
  std::string content_type;
  std::string body;
};

/// Content-Type header value for a format (`; charset=utf-8` only for HTML).
std::string content_type_for(rdf::Format format);

/// Maps an `output` token to the format it selects for DESCRIBE queries:
/// media types (including text/rdf+n3, application/xml and
/// application/json) and short names such as `turtle`, `nt` or `jsonld`.
std::optional<rdf::Format> describe_format_from_token(std::string_view token);

/// Same for SELECT: application/json, application/xml, text/html and the
/// short names json, xml, html.
std::optional<rdf::Format> select_format_from_token(std::string_view token);

/// Parses and evaluates `query` against `graph`. An `output` token takes
/// precedence over `accept`; without either, DESCRIBE answers Turtle and
/// SELECT answers SPARQL results JSON. Errors map to 400 (syntax,
/// unsupported feature) and 406 (no acceptable format), each with a
/// text/plain body. `resource_ns` locates the download links of HTML pages.
QueryResponse run_sparql(const rdf::Graph& graph, std::string_view query, std::optional<std::string_view> output,
                         std::string_view accept, std::string_view resource_ns);

/// "/resource/<path>" for IRIs under `resource_ns`, the IRI itself otherwise.
std::string local_resource_path(const rdf::Iri& iri, std::string_view resource_ns);

/// Plain-text 406 body listing the accepted media types.
std::string not_acceptable_body(const std::vector<rdf::MediaOffer>& offers);

}  // namespace gemforge::server

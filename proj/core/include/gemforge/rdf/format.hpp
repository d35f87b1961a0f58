#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace gemforge::rdf {

enum class Format { Turtle, NTriples, RdfXml, JsonLd, SparqlJson, SparqlXml, Html };

/// Canonical media type, e.g. `text/turtle` for Format::Turtle.
std::string_view media_type(Format format) noexcept;

/// File extension used for format-specific resource variants (no dot).
std::string_view file_extension(Format format) noexcept;

std::optional<Format> format_from_extension(std::string_view ext) noexcept;

/// Media types recognised on dereferenceable resource URIs. Besides the
/// canonical types this accepts `text/rdf+n3` (Turtle), `application/xml`
/// (RDF/XML) and `application/json` (JSON-LD).
std::optional<Format> rdf_format_from_media_type(std::string_view media_type) noexcept;

bool is_rdf_syntax(Format format) noexcept;

/// One offer in a negotiation: a media type and the format it selects.
struct MediaOffer {
  std::string_view media_type;
  Format format;
};

/// Server preference order for resource URIs:
/// Turtle > RdfXml > JsonLd > NTriples > Html, each with its aliases.
const std::vector<MediaOffer>& resource_offers();

/// Picks the highest-q offer for an Accept header. The q-value of an offer is
/// taken from the most specific matching media range (exact, then `type/*`,
/// then `*/*`). Equal q-values resolve to the earlier offer. Returns
/// std::nullopt when nothing is acceptable.
std::optional<Format> negotiate(std::string_view accept_header,
                                const std::vector<MediaOffer>& offers,
                                Format default_format);

/// Resource-URI negotiation; an empty header selects Html.
std::optional<Format> negotiate(std::string_view accept_header);

}  // namespace gemforge::rdf

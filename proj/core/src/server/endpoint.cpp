#include "gemforge/server/endpoint.hpp"

#include <algorithm>
#include <cctype>

#include "gemforge/rdf/serialize.hpp"
#include "gemforge/server/html.hpp"
#include "gemforge/sparql/ast.hpp"
#include "gemforge/sparql/results.hpp"

namespace gemforge::server {

using rdf::Format;

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  // Tolerate the spaced spelling used in some documentation ("text/rdf +n3").
  out.erase(std::remove(out.begin(), out.end(), ' '), out.end());
  return out;
}

const std::vector<rdf::MediaOffer>& select_offers() {
  static const std::vector<rdf::MediaOffer> kOffers = {
      {"application/sparql-results+json", Format::SparqlJson},
      {"application/json", Format::SparqlJson},
      {"application/sparql-results+xml", Format::SparqlXml},
      {"application/xml", Format::SparqlXml},
      {"text/html", Format::Html},
  };
  return kOffers;
}

QueryResponse plain(int status, std::string message) {
  if (message.empty() || message.back() != '\n') message += '\n';
  return {status, "text/plain; charset=utf-8", std::move(message)};
}

}  // namespace

std::string content_type_for(Format format) {
  if (format == Format::Html) return "text/html; charset=utf-8";
  return std::string(rdf::media_type(format));
}

std::optional<Format> describe_format_from_token(std::string_view token) {
  std::string t = lower(token);
  if (auto f = rdf::rdf_format_from_media_type(t)) return f;
  if (t == "turtle" || t == "ttl" || t == "n3") return Format::Turtle;
  if (t == "nt" || t == "ntriples" || t == "n-triples") return Format::NTriples;
  if (t == "rdf" || t == "rdfxml" || t == "rdf+xml" || t == "xml") return Format::RdfXml;
  if (t == "json" || t == "jsonld" || t == "json-ld" || t == "ld+json") return Format::JsonLd;
  if (t == "html") return Format::Html;
  return std::nullopt;
}

std::optional<Format> select_format_from_token(std::string_view token) {
  std::string t = lower(token);
  for (const auto& offer : select_offers()) {
    if (offer.media_type == t) return offer.format;
  }
  if (t == "json" || t == "srj") return Format::SparqlJson;
  if (t == "xml" || t == "srx") return Format::SparqlXml;
  if (t == "html") return Format::Html;
  return std::nullopt;
}

std::string local_resource_path(const rdf::Iri& iri, std::string_view resource_ns) {
  if (!resource_ns.empty() && iri.view().rfind(resource_ns, 0) == 0) {
    return "/resource/" + std::string(iri.view().substr(resource_ns.size()));
  }
  return iri.str();
}

std::string not_acceptable_body(const std::vector<rdf::MediaOffer>& offers) {
  std::string body = "not acceptable; supported media types:\n";
  std::vector<std::string_view> seen;
  for (const auto& offer : offers) {
    if (std::find(seen.begin(), seen.end(), offer.media_type) != seen.end()) continue;
    seen.push_back(offer.media_type);
    body += "  " + std::string(offer.media_type) + "\n";
  }
  return body;
}

QueryResponse run_sparql(const rdf::Graph& graph, std::string_view query, std::optional<std::string_view> output,
                         std::string_view accept, std::string_view resource_ns) {
  sparql::QueryAst ast;
  try {
    ast = sparql::parse_query(query);
  } catch (const sparql::QueryError& e) {
    return plain(400, e.what());
  }

  if (ast.is_describe()) {
    std::optional<Format> format;
    if (output) {
      format = describe_format_from_token(*output);
      if (!format) return plain(406, "unknown output format: " + std::string(*output) + "\n" + not_acceptable_body(rdf::resource_offers()));
    } else {
      format = rdf::negotiate(accept, rdf::resource_offers(), Format::Turtle);
      if (!format) return plain(406, not_acceptable_body(rdf::resource_offers()));
    }
    const rdf::Iri& iri = ast.describe().iri;
    rdf::Graph cbd = sparql::describe(graph, iri);
    if (*format == Format::Html) {
      return {200, content_type_for(*format),
              render_resource_page(iri, cbd, graph, local_resource_path(iri, resource_ns))};
    }
    return {200, content_type_for(*format), rdf::serialize(cbd, *format)};
  }

  std::optional<Format> format;
  if (output) {
    format = select_format_from_token(*output);
    if (!format) {
      std::string why = describe_format_from_token(*output) ? "output format not available for SELECT: "
                                                            : "unknown output format: ";
      return plain(406, why + std::string(*output) + "\n" + not_acceptable_body(select_offers()));
    }
  } else {
    format = rdf::negotiate(accept, select_offers(), Format::SparqlJson);
    if (!format) return plain(406, not_acceptable_body(select_offers()));
  }
  sparql::SolutionSet solutions = sparql::evaluate_select(ast.select(), graph);
  if (*format == Format::Html) return {200, content_type_for(*format), render_results_table(solutions)};
  return {200, content_type_for(*format), sparql::serialize_results(solutions, *format)};
}

}  // namespace gemforge::server

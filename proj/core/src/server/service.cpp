#include "gemforge/server/service.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "gemforge/ontology/vocab.hpp"
#include "gemforge/rdf/serialize.hpp"
#include "gemforge/rdf/vocab.hpp"
#include "gemforge/server/endpoint.hpp"
#include "gemforge/server/html.hpp"
#include "gemforge/sparql/evaluate.hpp"

namespace gemforge::server {

using rdf::Format;
namespace rv = rdf::vocab;
namespace ov = ontology::vocab;

std::string HttpRequest::header(const std::string& name) const {
  auto it = headers.find(name);
  return it == headers.end() ? std::string() : it->second;
}

std::optional<std::string> HttpRequest::param(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> HttpResponse::header(const std::string& name) const {
  for (const auto& [k, v] : headers) {
    if (k == name) return v;
  }
  return std::nullopt;
}

namespace {

HttpResponse text(int status, std::string body) {
  if (body.empty() || body.back() != '\n') body += '\n';
  return {status, "text/plain; charset=utf-8", std::move(body), {}};
}

HttpResponse json_response(int status, const nlohmann::ordered_json& doc) {
  return {status, "application/json", doc.dump(), {}};
}

HttpResponse from_query(QueryResponse r) { return {r.status, std::move(r.content_type), std::move(r.body), {}}; }

const std::vector<rdf::MediaOffer>& ontology_file_offers() {
  static const std::vector<rdf::MediaOffer> kOffers = {
      {"text/turtle", Format::Turtle},
      {"text/rdf+n3", Format::Turtle},
      {"application/rdf+xml", Format::RdfXml},
      {"application/xml", Format::RdfXml},
  };
  return kOffers;
}

bool is_loopback(const std::string& addr) {
  return addr == "::1" || addr == "localhost" || addr.rfind("127.", 0) == 0 || addr == "::ffff:127.0.0.1";
}

// Splits a trailing ".ext" naming a known variant off the last path segment.
std::pair<std::string, std::optional<Format>> split_variant(const std::string& path) {
  std::size_t slash = path.rfind('/');
  std::size_t dot = path.rfind('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return {path, std::nullopt};
  auto format = rdf::format_from_extension(std::string_view(path).substr(dot + 1));
  if (!format) return {path, std::nullopt};
  return {path.substr(0, dot), format};
}

std::optional<double> number(const rdf::Term& t) {
  if (!t.is_literal()) return std::nullopt;
  const std::string& s = t.literal().lexical();
  double v = 0;
  const char* b = s.data() + (!s.empty() && s[0] == '+' ? 1 : 0);
  auto [ptr, ec] = std::from_chars(b, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string term_kind(const rdf::Term& t) {
  if (t.is_iri()) return "iri";
  if (t.is_blank()) return "bnode";
  return "literal";
}

std::string term_value(const rdf::Term& t) {
  if (t.is_iri()) return t.iri().str();
  if (t.is_blank()) return "_:" + t.blank().label();
  return t.literal().lexical();
}

}  // namespace

std::optional<nlohmann::ordered_json> node_json(const rdf::Graph& graph, const rdf::Iri& iri, Direction direction,
                                        std::size_t cap) {
  const rdf::Term self(iri);
  auto outbound = graph.match(self, std::nullopt, std::nullopt);
  auto inbound = graph.match(std::nullopt, std::nullopt, self);
  if (outbound.empty() && inbound.empty()) return std::nullopt;

  const rdf::Iri type(std::string(rv::kRdfType));
  const rdf::Iri label(std::string(rv::kRdfsLabel));
  const rdf::Iri same_as(std::string(rv::kOwlSameAs));
  auto by_key = [](const rdf::Triple* a, const rdf::Triple* b) {
    return std::tie(a->predicate, a->object, a->subject) < std::tie(b->predicate, b->object, b->subject);
  };
  std::sort(outbound.begin(), outbound.end(), by_key);
  std::sort(inbound.begin(), inbound.end(), by_key);

  nlohmann::ordered_json doc;
  doc["iri"] = iri.str();
  doc["label"] = nullptr;
  std::set<std::string> types;
  std::set<std::string> same;
  std::optional<double> lat;
  std::optional<double> lon;
  for (const rdf::Triple* t : outbound) {
    if (t->predicate == type && t->object.is_iri()) types.insert(t->object.iri().str());
    if (t->predicate == same_as && t->object.is_iri()) same.insert(t->object.iri().str());
    if (t->predicate == label && t->object.is_literal()) {
      const auto& lang = t->object.literal().language();
      if (doc["label"].is_null() || !lang || *lang == "en") doc["label"] = t->object.literal().lexical();
    }
    if (t->predicate == ov::lat() && !lat) lat = number(t->object);
    if (t->predicate == ov::lon() && !lon) lon = number(t->object);
  }
  for (const rdf::Triple* t : inbound) {
    if (t->predicate == same_as && t->subject.is_iri()) same.insert(t->subject.iri().str());
  }
  doc["types"] = types;

  bool truncated = false;
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  if (direction != Direction::In) {
    for (const rdf::Triple* t : outbound) {
      if (t->predicate == type || t->predicate == same_as) continue;
      if (out.size() == cap) {
        truncated = true;
        break;
      }
      nlohmann::ordered_json arc{{"p", t->predicate.str()}, {"o", term_value(t->object)}, {"o_kind", term_kind(t->object)}};
      if (t->object.is_literal()) {
        const rdf::Literal& l = t->object.literal();
        if (l.language()) {
          arc["lang"] = *l.language();
        } else {
          arc["datatype"] = l.datatype().str();
        }
      }
      out.push_back(std::move(arc));
    }
  }
  nlohmann::ordered_json in = nlohmann::ordered_json::array();
  if (direction != Direction::Out) {
    for (const rdf::Triple* t : inbound) {
      if (t->predicate == same_as) continue;
      if (in.size() == cap) {
        truncated = true;
        break;
      }
      in.push_back({{"s", term_value(t->subject)}, {"p", t->predicate.str()}});
    }
  }
  doc["out"] = std::move(out);
  doc["in"] = std::move(in);
  doc["sameAs"] = same;
  if (lat && lon) doc["geo"] = {{"lat", *lat}, {"lon", *lon}};
  doc["truncated"] = truncated;
  return doc;
}

LinkedDataService::LinkedDataService(ServerConfig config, Dataset dataset, Reloader reloader)
    : config_(std::move(config)), dataset_(std::move(dataset)), reloader_(std::move(reloader)) {
  std::string ns = config_.ontology_ns;
  if (!ns.empty() && ns.back() == '/') ns.pop_back();
  ontology_base_ = ns.substr(0, ns.rfind('/') + 1);
}

HttpResponse LinkedDataService::handle(const HttpRequest& request) const {
  HttpResponse response;
  try {
    response = dispatch(request);
  } catch (const std::exception& e) {
    response = text(500, std::string("internal error: ") + e.what());
  }
  std::string origin = request.header("origin");
  if (!origin.empty()) {
    const auto& allowed = config_.cors_allowed_origins;
    bool any = std::find(allowed.begin(), allowed.end(), "*") != allowed.end();
    if (any || std::find(allowed.begin(), allowed.end(), origin) != allowed.end()) {
      response.headers.emplace_back("Access-Control-Allow-Origin", any ? "*" : origin);
      if (!any) response.headers.emplace_back("Vary", "Origin");
      if (request.method == "OPTIONS") {
        response.headers.emplace_back("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        response.headers.emplace_back("Access-Control-Allow-Headers", "Accept, Content-Type");
      }
    }
  }
  return response;
}

HttpResponse LinkedDataService::dispatch(const HttpRequest& request) const {
  const std::string& path = request.path;
  const std::string& method = request.method;
  if (method == "OPTIONS") return {204, "", "", {{"Allow", "GET, HEAD, POST, OPTIONS"}}};

  if (path == "/admin/reload") {
    if (method != "POST") return {405, "text/plain; charset=utf-8", "use POST\n", {{"Allow", "POST"}}};
    return reload(request.remote_addr);
  }
  if (path == "/sparql") {
    if (method != "GET" && method != "HEAD" && method != "POST") {
      return {405, "text/plain; charset=utf-8", "method not allowed\n", {{"Allow", "GET, POST"}}};
    }
    auto query = request.param("query");
    if (!query && method == "POST" && request.header("content-type").rfind("application/sparql-query", 0) == 0) {
      query = request.body;
    }
    return sparql(query, request.param("output"), request.header("accept"));
  }
  if (method != "GET" && method != "HEAD") return {405, "text/plain; charset=utf-8", "method not allowed\n", {{"Allow", "GET"}}};

  if (path.rfind("/resource/", 0) == 0) return resource(path.substr(10), request.header("accept"));
  if (path.rfind("/ontology/", 0) == 0) return ontology(path.substr(10), request.header("accept"));
  if (path == "/api/node") return node(request.param("iri"), request.param("dir").value_or("both"));
  if (path == "/healthz") return healthz();
  if (path == "/explorer" || path.rfind("/explorer/", 0) == 0) {
    return {200, "text/html; charset=utf-8",
            render_message_page(200, "Explorer", "No explorer build is configured; set explorer_dir to serve one."),
            {}};
  }
  if (path == "/") {
    return {200, "text/html; charset=utf-8",
            render_message_page(200, "gemforge", "Routes: /resource/{path}, /sparql?query=, /ontology/{path}, "
                                                 "/api/node?iri=, /healthz, /explorer/"),
            {}};
  }
  return text(404, "not found: " + path);
}

HttpResponse LinkedDataService::resource(const std::string& path, const std::string& accept) const {
  auto data = dataset_.get();
  auto known = [&](const rdf::Iri& iri) {
    rdf::Term t(iri);
    return data->data.has_subject(t) || !data->data.match(std::nullopt, std::nullopt, t).empty();
  };

  auto [stem, forced] = split_variant(path);
  rdf::Iri iri(config_.resource_ns + path);
  std::string variant_base = "/resource/" + path;
  if (forced && known(rdf::Iri(config_.resource_ns + stem))) {
    iri = rdf::Iri(config_.resource_ns + stem);
    variant_base = "/resource/" + stem;
  } else {
    forced.reset();
  }

  if (!known(iri)) {
    auto format = forced ? forced : rdf::negotiate(accept);
    if (format == Format::Html) {
      return {404, content_type_for(Format::Html), render_message_page(404, "Not found", iri.str()), {}};
    }
    return {404, "text/turtle", "# no description for <" + iri.str() + ">\n", {}};
  }

  auto format = forced ? forced : rdf::negotiate(accept);
  if (!format) return {406, "text/plain; charset=utf-8", not_acceptable_body(rdf::resource_offers()), {}};

  rdf::Graph cbd = sparql::describe(data->data, iri);
  HttpResponse response{200, content_type_for(*format), "", {}};
  response.body = *format == Format::Html ? render_resource_page(iri, cbd, data->data, variant_base)
                                          : rdf::serialize(cbd, *format);
  response.headers.emplace_back("Content-Location", variant_base + "." + std::string(rdf::file_extension(*format)));
  if (!forced) response.headers.emplace_back("Vary", "Accept");
  return response;
}

HttpResponse LinkedDataService::sparql(const std::optional<std::string>& query, const std::optional<std::string>& output,
                                       const std::string& accept) const {
  if (!query || query->empty()) return text(400, "missing query parameter");
  auto data = dataset_.get();
  std::optional<std::string_view> out;
  if (output && !output->empty()) out = *output;
  return from_query(run_sparql(data->data, *query, out, accept, config_.resource_ns));
}

HttpResponse LinkedDataService::ontology(const std::string& path, const std::string& accept) const {
  auto data = dataset_.get();
  std::string ns_segment = config_.ontology_ns.substr(ontology_base_.size());  // e.g. "cultural-gems/"
  std::string ns_name = ns_segment.substr(0, ns_segment.size() - 1);

  std::optional<Format> file_format;
  bool whole_file = path == ns_segment || path == ns_name;
  if (path == ns_name + ".ttl") {
    whole_file = true;
    file_format = Format::Turtle;
  } else if (path == ns_name + ".rdf") {
    whole_file = true;
    file_format = Format::RdfXml;
  }
  if (whole_file) {
    if (!file_format) file_format = rdf::negotiate(accept, ontology_file_offers(), Format::Turtle);
    if (!file_format) return {406, "text/plain; charset=utf-8", not_acceptable_body(ontology_file_offers()), {}};
    if (*file_format == Format::Turtle) return {200, "text/turtle", data->ontology_ttl, {}};
    return {200, std::string(rdf::media_type(Format::RdfXml)), rdf::to_rdfxml(data->ontology_graph), {}};
  }

  const rdf::Iri iri(ontology_base_ + path);
  const rdf::Term term(iri);
  bool is_class = data->model.has_class(iri) && data->ontology_graph.has_subject(term);
  if (!is_class && !data->ontology_graph.has_subject(term)) return text(404, "no ontology term <" + iri.str() + ">");

  auto format = rdf::negotiate(accept);
  if (!format) return {406, "text/plain; charset=utf-8", not_acceptable_body(rdf::resource_offers()), {}};
  rdf::Graph cbd = sparql::describe(data->ontology_graph, iri);
  if (*format != Format::Html) return {200, content_type_for(*format), rdf::serialize(cbd, *format), {{"Vary", "Accept"}}};
  if (is_class) {
    std::size_t instances = data->data.match(std::nullopt, rdf::Iri(std::string(rv::kRdfType)), term).size();
    return {200, content_type_for(Format::Html), render_class_page(data->model, iri, instances), {{"Vary", "Accept"}}};
  }
  return {200, content_type_for(Format::Html), render_resource_page(iri, cbd, data->ontology_graph, "/ontology/" + path),
          {{"Vary", "Accept"}}};
}

HttpResponse LinkedDataService::node(const std::optional<std::string>& iri, const std::string& dir) const {
  if (!iri || iri->empty()) return json_response(400, {{"error", "missing iri parameter"}});
  Direction direction;
  if (dir == "out") {
    direction = Direction::Out;
  } else if (dir == "in") {
    direction = Direction::In;
  } else if (dir == "both") {
    direction = Direction::Both;
  } else {
    return json_response(400, {{"error", "dir must be out, in or both"}});
  }
  auto data = dataset_.get();
  auto doc = node_json(data->data, rdf::Iri(*iri), direction);
  if (!doc) return json_response(404, {{"error", "unknown IRI"}, {"iri", *iri}});
  return json_response(200, *doc);
}

HttpResponse LinkedDataService::healthz() const {
  auto data = dataset_.get();
  return json_response(200, {{"status", "ok"}, {"triples", data->data.size()}});
}

HttpResponse LinkedDataService::reload(const std::string& remote_addr) const {
  if (!is_loopback(remote_addr)) return text(403, "reload is only accepted from localhost");
  if (!reloader_) return text(501, "reload is not configured");
  try {
    Dataset next = reloader_();
    std::size_t triples = next.data.size();
    dataset_.publish(std::move(next));
    return json_response(200, {{"status", "reloaded"}, {"triples", triples}});
  } catch (const std::exception& e) {
    return text(500, std::string("reload failed, keeping the previous snapshot: ") + e.what());
  }
}

}  // namespace gemforge::server

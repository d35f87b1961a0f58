#include "reference_readers.hpp"

#include <map>
#include <sstream>
#include <string>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <nlohmann/json.hpp>

#include "gemforge/rdf/vocab.hpp"

namespace gemforge::testing {

namespace pt = boost::property_tree;

namespace {

constexpr std::string_view kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";

std::string expand(const std::map<std::string, std::string>& ns, const std::string& qname) {
  auto colon = qname.find(':');
  if (colon == std::string::npos) throw ReaderError("unqualified element " + qname);
  auto it = ns.find(qname.substr(0, colon));
  if (it == ns.end()) throw ReaderError("undeclared prefix in " + qname);
  return it->second + qname.substr(colon + 1);
}

std::optional<std::string> attr(const pt::ptree& node, const std::string& name) {
  if (auto attrs = node.get_child_optional("<xmlattr>")) {
    if (auto v = attrs->get_optional<std::string>(name)) return *v;
  }
  return std::nullopt;
}

}  // namespace

rdf::Graph read_rdfxml(std::string_view xml) {
  pt::ptree doc;
  std::istringstream in{std::string(xml)};
  try {
    pt::read_xml(in, doc);
  } catch (const pt::xml_parser_error& e) {
    throw ReaderError(e.what());
  }

  auto root = doc.get_child_optional("rdf:RDF");
  if (!root) throw ReaderError("missing rdf:RDF root");
  std::map<std::string, std::string> ns;
  if (auto attrs = root->get_child_optional("<xmlattr>")) {
    for (const auto& [name, value] : *attrs) {
      if (name.rfind("xmlns:", 0) == 0) ns[name.substr(6)] = value.data();
    }
  }
  if (ns["rdf"] != kRdfNs) throw ReaderError("rdf prefix not bound to the RDF namespace");

  rdf::Graph g;
  for (const auto& [name, desc] : *root) {
    if (name == "<xmlattr>" || name == "<xmlcomment>") continue;
    if (name != "rdf:Description") throw ReaderError("unexpected element " + name);
    std::optional<rdf::Term> subject;
    if (auto about = attr(desc, "rdf:about")) subject = rdf::Iri(*about);
    if (auto id = attr(desc, "rdf:nodeID")) subject = rdf::BlankNode(*id);
    if (!subject) throw ReaderError("description without subject");

    for (const auto& [prop, el] : desc) {
      if (prop == "<xmlattr>" || prop == "<xmlcomment>") continue;
      rdf::Iri predicate(expand(ns, prop));
      if (auto r = attr(el, "rdf:resource")) {
        g.insert(*subject, predicate, rdf::Iri(*r));
      } else if (auto n = attr(el, "rdf:nodeID")) {
        g.insert(*subject, predicate, rdf::BlankNode(*n));
      } else if (auto lang = attr(el, "xml:lang")) {
        g.insert(*subject, predicate, rdf::Literal::with_language(el.data(), *lang));
      } else if (auto dt = attr(el, "rdf:datatype")) {
        g.insert(*subject, predicate, rdf::Literal(el.data(), rdf::Iri(*dt)));
      } else {
        g.insert(*subject, predicate, rdf::Literal(el.data()));
      }
    }
  }
  return g;
}

namespace {

using Json = nlohmann::json;

struct JsonLdContext {
  std::map<std::string, std::string> prefixes;

  std::string iri(const std::string& value) const {
    auto colon = value.find(':');
    if (colon != std::string::npos && value.compare(colon, 3, "://") != 0) {
      auto it = prefixes.find(value.substr(0, colon));
      if (it != prefixes.end()) return it->second + value.substr(colon + 1);
    }
    return value;
  }

  rdf::Term node(const std::string& id) const {
    if (id.rfind("_:", 0) == 0) return rdf::BlankNode(id.substr(2));
    return rdf::Iri(iri(id));
  }
};

rdf::Term object_term(const JsonLdContext& ctx, const Json& v) {
  if (v.is_object() && v.contains("@id")) return ctx.node(v["@id"].get<std::string>());
  if (v.is_object() && v.contains("@value")) {
    std::string lexical = v["@value"].is_string() ? v["@value"].get<std::string>() : v["@value"].dump();
    if (v.contains("@language")) return rdf::Literal::with_language(lexical, v["@language"].get<std::string>());
    if (v.contains("@type")) return rdf::Literal(lexical, rdf::Iri(ctx.iri(v["@type"].get<std::string>())));
    return rdf::Literal(lexical);
  }
  if (v.is_string()) return rdf::Literal(v.get<std::string>());
  throw ReaderError("unsupported JSON-LD value " + v.dump());
}

}  // namespace

rdf::Graph read_jsonld(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ReaderError(e.what());
  }
  JsonLdContext ctx;
  Json nodes = Json::array();
  if (doc.is_object()) {
    if (doc.contains("@context")) {
      for (const auto& [k, v] : doc["@context"].items()) {
        if (v.is_string()) ctx.prefixes[k] = v.get<std::string>();
      }
    }
    nodes = doc.contains("@graph") ? doc["@graph"] : Json::array({doc});
  } else if (doc.is_array()) {
    nodes = doc;
  }

  rdf::Graph g;
  const rdf::Iri type(std::string(rdf::vocab::kRdfType));
  for (const Json& node : nodes) {
    if (!node.contains("@id")) throw ReaderError("node without @id");
    rdf::Term subject = ctx.node(node["@id"].get<std::string>());
    for (const auto& [key, value] : node.items()) {
      if (key == "@id") continue;
      Json values = value.is_array() ? value : Json::array({value});
      if (key == "@type") {
        for (const Json& t : values) g.insert(subject, type, rdf::Iri(ctx.iri(t.get<std::string>())));
        continue;
      }
      if (key.rfind('@', 0) == 0) throw ReaderError("unsupported keyword " + key);
      rdf::Iri predicate(ctx.iri(key));
      for (const Json& v : values) g.insert(subject, predicate, object_term(ctx, v));
    }
  }
  return g;
}

}  // namespace gemforge::testing

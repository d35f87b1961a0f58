#include "gemforge/rdf/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <nlohmann/json.hpp>
#include <set>

#include "gemforge/rdf/vocab.hpp"

namespace gemforge::rdf {

namespace {

bool valid_prefix_label(std::string_view p) {
  if (p.empty()) return true;
  if (!std::isalpha(static_cast<unsigned char>(p.front())) || p.back() == '.') return false;
  for (char c : p) {
    auto uc = static_cast<unsigned char>(c);
    if (!(std::isalnum(uc) || c == '_' || c == '-' || c == '.')) return false;
  }
  return true;
}

bool safe_local_name(std::string_view local) {
  if (local.empty()) return true;
  if (local.front() == '-') return false;
  for (char c : local) {
    auto uc = static_cast<unsigned char>(c);
    if (!(std::isalnum(uc) || c == '_' || c == '-')) return false;
  }
  return true;
}

// Returns `prefix:local` for the longest matching namespace, or nullopt.
std::optional<std::string> compact(const PrefixMap& prefixes, const std::string& iri) {
  const std::pair<const std::string, Iri>* best = nullptr;
  for (const auto& entry : prefixes) {
    const std::string& ns = entry.second.str();
    if (iri.size() < ns.size() || iri.compare(0, ns.size(), ns) != 0) continue;
    if (!valid_prefix_label(entry.first)) continue;
    if (!safe_local_name(std::string_view(iri).substr(ns.size()))) continue;
    if (!best || ns.size() > best->second.str().size()) best = &entry;
  }
  if (!best) return std::nullopt;
  return best->first + ":" + iri.substr(best->second.str().size());
}

std::string turtle_iri(const PrefixMap& prefixes, const Iri& iri) {
  if (auto pname = compact(prefixes, iri.str())) return *pname;
  return "<" + iri.str() + ">";
}

// Lexical forms that Turtle can write without quotes.
std::size_t skip_digits(std::string_view s, std::size_t i) {
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

bool integer_form(std::string_view s) {
  std::size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
  std::size_t end = skip_digits(s, i);
  return end > i && end == s.size();
}

bool decimal_form(std::string_view s) {
  std::size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
  i = skip_digits(s, i);
  if (i >= s.size() || s[i] != '.') return false;
  std::size_t end = skip_digits(s, i + 1);
  return end > i + 1 && end == s.size();
}

bool double_form(std::string_view s) {
  std::size_t i = (!s.empty() && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
  std::size_t mantissa_start = i;
  i = skip_digits(s, i);
  std::size_t int_digits = i - mantissa_start;
  std::size_t frac_digits = 0;
  if (i < s.size() && s[i] == '.') {
    std::size_t f = skip_digits(s, i + 1);
    frac_digits = f - i - 1;
    i = f;
  }
  if (int_digits + frac_digits == 0) return false;
  if (i >= s.size() || (s[i] != 'e' && s[i] != 'E')) return false;
  ++i;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t end = skip_digits(s, i);
  return end > i && end == s.size();
}

std::string turtle_term(const PrefixMap& prefixes, const Term& term) {
  if (term.is_iri()) return turtle_iri(prefixes, term.iri());
  if (term.is_blank()) return "_:" + term.blank().label();
  const Literal& lit = term.literal();
  const std::string& dt = lit.datatype().str();
  if (!lit.language()) {
    if (dt == vocab::kXsdInteger && integer_form(lit.lexical())) return lit.lexical();
    if (dt == vocab::kXsdDecimal && decimal_form(lit.lexical())) return lit.lexical();
    if (dt == vocab::kXsdDouble && double_form(lit.lexical())) return lit.lexical();
    if (dt == vocab::kXsdBoolean && (lit.lexical() == "true" || lit.lexical() == "false")) return lit.lexical();
  }
  std::string out = "\"" + escape_ntriples_string(lit.lexical()) + "\"";
  if (lit.language()) {
    out += "@" + *lit.language();
  } else if (dt != vocab::kXsdString) {
    out += "^^" + turtle_iri(prefixes, lit.datatype());
  }
  return out;
}

std::string xml_escape(std::string_view s, bool attribute) {
  std::string out;
  out.reserve(s.size());
  for (unsigned char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"':
        out += attribute ? "&quot;" : "\"";
        break;
      case '\r': out += "&#13;"; break;
      case '\n':
        out += attribute ? "&#10;" : "\n";
        break;
      case '\t':
        out += attribute ? "&#9;" : "\t";
        break;
      default:
        if (c < 0x20) throw SerializeError("control character not representable in XML 1.0");
        out += static_cast<char>(c);
    }
  }
  return out;
}

bool ncname_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool ncname_char(unsigned char c) { return ncname_start(c) || std::isdigit(c) || c == '-' || c == '.'; }

// Splits a predicate IRI into (namespace, NCName local part).
std::pair<std::string, std::string> split_qname(const std::string& iri) {
  std::size_t start = iri.size();
  while (start > 0 && ncname_char(static_cast<unsigned char>(iri[start - 1]))) --start;
  while (start < iri.size() && !ncname_start(static_cast<unsigned char>(iri[start]))) ++start;
  if (start == iri.size()) throw SerializeError("predicate <" + iri + "> has no XML-compatible local name");
  return {iri.substr(0, start), iri.substr(start)};
}

}  // namespace

std::string to_ntriples(const Graph& graph) {
  std::string out;
  for (const Triple* t : graph.sorted()) {
    out += t->to_ntriples();
    out += '\n';
  }
  return out;
}

std::string to_turtle(const Graph& graph) {
  const PrefixMap& prefixes = graph.prefixes();
  std::string out;
  for (const auto& [prefix, ns] : prefixes) {
    if (!valid_prefix_label(prefix)) continue;
    out += "@prefix " + prefix + ": <" + ns.str() + "> .\n";
  }
  if (!out.empty() && !graph.empty()) out += '\n';

  const Term* subject = nullptr;
  const Iri* predicate = nullptr;
  for (const Triple* t : graph.sorted()) {
    if (!subject || t->subject != *subject) {
      if (subject) out += " .\n";
      subject = &t->subject;
      predicate = &t->predicate;
      out += turtle_term(prefixes, t->subject) + " ";
      out += t->predicate.view() == vocab::kRdfType ? "a" : turtle_iri(prefixes, t->predicate);
      out += " " + turtle_term(prefixes, t->object);
    } else if (t->predicate != *predicate) {
      predicate = &t->predicate;
      out += " ;\n    ";
      out += t->predicate.view() == vocab::kRdfType ? "a" : turtle_iri(prefixes, t->predicate);
      out += " " + turtle_term(prefixes, t->object);
    } else {
      out += " ,\n        " + turtle_term(prefixes, t->object);
    }
  }
  if (subject) out += " .\n";
  return out;
}

std::string to_rdfxml(const Graph& graph) {
  std::vector<const Triple*> triples = graph.sorted();

  // Namespace declarations: graph prefixes when they match exactly, else ns0..
  std::map<std::string, std::string> ns_to_prefix{{std::string(vocab::kRdf), "rdf"}};
  for (const auto& [prefix, ns] : graph.prefixes()) {
    bool usable = !prefix.empty() && ncname_start(static_cast<unsigned char>(prefix[0])) && prefix != "rdf" &&
                  prefix.rfind("xml", 0) != 0 &&
                  std::all_of(prefix.begin(), prefix.end(), [](char c) {
                    return ncname_char(static_cast<unsigned char>(c)) && c != '.';
                  });
    if (usable) ns_to_prefix.emplace(ns.str(), prefix);
  }
  std::map<std::string, std::pair<std::string, std::string>> qnames;
  std::set<std::string> used_prefixes;
  for (const auto& [ns, prefix] : ns_to_prefix) used_prefixes.insert(prefix);
  int generated = 0;
  for (const Triple* t : triples) {
    const std::string& p = t->predicate.str();
    if (qnames.count(p)) continue;
    auto [ns, local] = split_qname(p);
    auto it = ns_to_prefix.find(ns);
    if (it == ns_to_prefix.end()) {
      std::string prefix;
      do {
        prefix = "ns" + std::to_string(generated++);
      } while (used_prefixes.count(prefix));
      used_prefixes.insert(prefix);
      it = ns_to_prefix.emplace(ns, prefix).first;
    }
    qnames.emplace(p, std::make_pair(it->second, local));
  }

  std::string out = "<?xml version=\"1.0\" encoding=\"utf-8\"?>\n<rdf:RDF";
  for (const auto& [ns, prefix] : ns_to_prefix) {
    out += "\n    xmlns:" + prefix + "=\"" + xml_escape(ns, true) + "\"";
  }
  out += ">\n";

  const Term* subject = nullptr;
  for (const Triple* t : triples) {
    if (!subject || t->subject != *subject) {
      if (subject) out += "  </rdf:Description>\n";
      subject = &t->subject;
      if (t->subject.is_iri()) {
        out += "  <rdf:Description rdf:about=\"" + xml_escape(t->subject.iri().str(), true) + "\">\n";
      } else {
        out += "  <rdf:Description rdf:nodeID=\"" + t->subject.blank().label() + "\">\n";
      }
    }
    const auto& [prefix, local] = qnames.at(t->predicate.str());
    std::string element = prefix + ":" + local;
    const Term& o = t->object;
    if (o.is_iri()) {
      out += "    <" + element + " rdf:resource=\"" + xml_escape(o.iri().str(), true) + "\"/>\n";
    } else if (o.is_blank()) {
      out += "    <" + element + " rdf:nodeID=\"" + o.blank().label() + "\"/>\n";
    } else {
      const Literal& lit = o.literal();
      out += "    <" + element;
      if (lit.language()) {
        out += " xml:lang=\"" + *lit.language() + "\"";
      } else if (!lit.is_plain_string()) {
        out += " rdf:datatype=\"" + xml_escape(lit.datatype().str(), true) + "\"";
      }
      out += ">" + xml_escape(lit.lexical(), false) + "</" + element + ">\n";
    }
  }
  if (subject) out += "  </rdf:Description>\n";
  out += "</rdf:RDF>\n";
  return out;
}

std::string to_jsonld(const Graph& graph) {
  using Json = nlohmann::ordered_json;
  Json context = Json::object();
  for (const auto& [prefix, ns] : graph.prefixes()) {
    if (!prefix.empty()) context[prefix] = ns.str();
  }
  Json nodes = Json::array();
  const Term* subject = nullptr;
  Json node;
  auto id_of = [](const Term& t) { return t.is_iri() ? t.iri().str() : "_:" + t.blank().label(); };
  for (const Triple* t : graph.sorted()) {
    if (!subject || t->subject != *subject) {
      if (subject) nodes.push_back(std::move(node));
      subject = &t->subject;
      node = Json::object();
      node["@id"] = id_of(t->subject);
    }
    Json value = Json::object();
    if (t->object.is_literal()) {
      const Literal& lit = t->object.literal();
      value["@value"] = lit.lexical();
      if (lit.language()) {
        value["@language"] = *lit.language();
      } else if (!lit.is_plain_string()) {
        value["@type"] = lit.datatype().str();
      }
    } else {
      value["@id"] = id_of(t->object);
    }
    node[t->predicate.str()].push_back(std::move(value));
  }
  if (subject) nodes.push_back(std::move(node));
  Json doc = Json::object();
  doc["@context"] = std::move(context);
  doc["@graph"] = std::move(nodes);
  return doc.dump(2) + "\n";
}

std::string serialize(const Graph& graph, Format format) {
  switch (format) {
    case Format::Turtle: return to_turtle(graph);
    case Format::NTriples: return to_ntriples(graph);
    case Format::RdfXml: return to_rdfxml(graph);
    case Format::JsonLd: return to_jsonld(graph);
    default: throw SerializeError("not an RDF syntax: " + std::string(media_type(format)));
  }
}

}  // namespace gemforge::rdf

#include "gemforge/sparql/results.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace gemforge::sparql {

namespace {

std::string xml_escape(std::string_view s, bool attribute) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += attribute ? "&quot;" : "\""; break;
      case '\r': out += "&#13;"; break;
      case '\n': out += attribute ? "&#10;" : "\n"; break;
      case '\t': out += attribute ? "&#9;" : "\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          out += "\xEF\xBF\xBD";  // not representable in XML 1.0
        } else {
          out += c;
        }
    }
  }
  return out;
}

}  // namespace

std::string to_results_json(const SolutionSet& solutions) {
  nlohmann::ordered_json vars = nlohmann::ordered_json::array();
  for (const auto& v : solutions.vars) vars.push_back(v.name);

  nlohmann::ordered_json bindings = nlohmann::ordered_json::array();
  for (const Row& row : solutions.rows) {
    nlohmann::ordered_json b = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < solutions.vars.size(); ++i) {
      if (!row[i]) continue;
      const rdf::Term& t = *row[i];
      nlohmann::ordered_json cell;
      if (t.is_iri()) {
        cell["type"] = "uri";
        cell["value"] = t.iri().str();
      } else if (t.is_blank()) {
        cell["type"] = "bnode";
        cell["value"] = t.blank().label();
      } else {
        const rdf::Literal& l = t.literal();
        cell["type"] = "literal";
        cell["value"] = l.lexical();
        if (l.language()) {
          cell["xml:lang"] = *l.language();
        } else if (!l.is_plain_string()) {
          cell["datatype"] = l.datatype().str();
        }
      }
      b[solutions.vars[i].name] = std::move(cell);
    }
    bindings.push_back(std::move(b));
  }

  nlohmann::ordered_json doc;
  doc["head"]["vars"] = std::move(vars);
  doc["results"]["bindings"] = std::move(bindings);
  return doc.dump();
}

std::string to_results_xml(const SolutionSet& solutions) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<sparql xmlns=\"http://www.w3.org/2005/sparql-results#\">\n  <head>\n";
  for (const auto& v : solutions.vars) out += "    <variable name=\"" + xml_escape(v.name, true) + "\"/>\n";
  out += "  </head>\n  <results>\n";
  for (const Row& row : solutions.rows) {
    out += "    <result>\n";
    for (std::size_t i = 0; i < solutions.vars.size(); ++i) {
      if (!row[i]) continue;
      const rdf::Term& t = *row[i];
      out += "      <binding name=\"" + xml_escape(solutions.vars[i].name, true) + "\">";
      if (t.is_iri()) {
        out += "<uri>" + xml_escape(t.iri().str(), false) + "</uri>";
      } else if (t.is_blank()) {
        out += "<bnode>" + xml_escape(t.blank().label(), false) + "</bnode>";
      } else {
        const rdf::Literal& l = t.literal();
        out += "<literal";
        if (l.language()) {
          out += " xml:lang=\"" + xml_escape(*l.language(), true) + "\"";
        } else if (!l.is_plain_string()) {
          out += " datatype=\"" + xml_escape(l.datatype().str(), true) + "\"";
        }
        out += ">" + xml_escape(l.lexical(), false) + "</literal>";
      }
      out += "</binding>\n";
    }
    out += "    </result>\n";
  }
  out += "  </results>\n</sparql>\n";
  return out;
}

std::string serialize_results(const SolutionSet& solutions, rdf::Format format) {
  switch (format) {
    case rdf::Format::SparqlJson: return to_results_json(solutions);
    case rdf::Format::SparqlXml: return to_results_xml(solutions);
    default: throw std::invalid_argument("not a SPARQL results format");
  }
}

}  // namespace gemforge::sparql

#include "gemforge/server/html.hpp"

#include <map>

#include "gemforge/rdf/vocab.hpp"

namespace gemforge::server {

namespace rv = rdf::vocab;

std::string html_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out += c;
    }
  }
  return out;
}

namespace {

constexpr std::string_view kStyle =
    "body{font-family:sans-serif;margin:2em;max-width:70em}"
    "table{border-collapse:collapse;width:100%}td,th{border-bottom:1px solid #ddd;padding:.3em .6em;"
    "text-align:left;vertical-align:top}th{width:30%}.iri{color:#555;font-size:.9em}"
    ".lang,.dt{color:#888;font-size:.8em}h2{margin-top:1.5em}";

std::string page(std::string_view title, const std::string& body) {
  return "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n<title>" + html_escape(title) +
         "</title>\n<style>" + std::string(kStyle) + "</style>\n</head>\n<body>\n" + body + "</body>\n</html>\n";
}

std::optional<std::string> label_of(const rdf::Graph& g, const rdf::Term& t) {
  std::optional<std::string> any;
  for (const rdf::Triple* tr : g.match(t, rdf::Iri(std::string(rv::kRdfsLabel)), std::nullopt)) {
    if (!tr->object.is_literal()) continue;
    const auto& lang = tr->object.literal().language();
    if (!lang || *lang == "en") return tr->object.literal().lexical();
    if (!any) any = tr->object.literal().lexical();
  }
  return any;
}

std::string iri_link(const rdf::Iri& iri, const rdf::Graph& labels) {
  std::string text = label_of(labels, rdf::Term(iri)).value_or(iri.str());
  return "<a href=\"" + html_escape(iri.str()) + "\">" + html_escape(text) + "</a>";
}

std::string term_cell(const rdf::Term& t, const rdf::Graph& labels) {
  if (t.is_iri()) return iri_link(t.iri(), labels);
  if (t.is_blank()) return "<a href=\"#" + html_escape(t.blank().label()) + "\">_:" + html_escape(t.blank().label()) + "</a>";
  const rdf::Literal& l = t.literal();
  std::string out = html_escape(l.lexical());
  if (l.language()) {
    out += " <span class=\"lang\">@" + html_escape(*l.language()) + "</span>";
  } else if (!l.is_plain_string()) {
    out += " <span class=\"dt\">^^" + iri_link(l.datatype(), labels) + "</span>";
  }
  return out;
}

void property_rows(std::string& out, const rdf::Graph& cbd, const rdf::Term& subject, const rdf::Graph& labels,
                   const rdf::Iri* skip) {
  std::map<rdf::Iri, std::vector<rdf::Term>> by_predicate;
  for (const rdf::Triple* t : cbd.match(subject, std::nullopt, std::nullopt)) {
    if (skip && t->predicate == *skip) continue;
    by_predicate[t->predicate].push_back(t->object);
  }
  out += "<table>\n";
  for (auto& [p, objects] : by_predicate) {
    std::sort(objects.begin(), objects.end());
    out += "<tr><th>" + iri_link(p, labels) + "</th><td>";
    for (std::size_t i = 0; i < objects.size(); ++i) out += (i ? "<br>" : "") + term_cell(objects[i], labels);
    out += "</td></tr>\n";
  }
  out += "</table>\n";
}

}  // namespace

std::string render_resource_page(const rdf::Iri& iri, const rdf::Graph& cbd, const rdf::Graph& labels,
                                 std::string_view variant_base) {
  const rdf::Term self(iri);
  const rdf::Iri same_as(std::string(rv::kOwlSameAs));
  std::string title = label_of(labels, self).value_or(iri.str());

  std::string body = "<h1>" + html_escape(title) + "</h1>\n<p class=\"iri\"><a href=\"" + html_escape(iri.str()) +
                     "\">" + html_escape(iri.str()) + "</a></p>\n";
  body += "<p>Download:";
  for (auto [ext, name] : {std::pair{"ttl", "Turtle"}, {"nt", "N-Triples"}, {"rdf", "RDF/XML"}, {"json", "JSON-LD"}}) {
    body += " <a href=\"" + html_escape(variant_base) + "." + ext + "\">" + name + "</a>";
  }
  body += "</p>\n<h2>Properties</h2>\n";
  property_rows(body, cbd, self, labels, &same_as);

  std::vector<rdf::Term> blanks;
  for (const rdf::Triple& t : cbd) {
    if (t.subject.is_blank() && std::find(blanks.begin(), blanks.end(), t.subject) == blanks.end()) {
      blanks.push_back(t.subject);
    }
  }
  for (const auto& b : blanks) {
    body += "<h3 id=\"" + html_escape(b.blank().label()) + "\">_:" + html_escape(b.blank().label()) + "</h3>\n";
    property_rows(body, cbd, b, labels, nullptr);
  }

  std::vector<const rdf::Triple*> same;
  for (const rdf::Triple* t : cbd.match(self, same_as, std::nullopt)) same.push_back(t);
  for (const rdf::Triple* t : cbd.match(std::nullopt, same_as, self)) same.push_back(t);
  body += "<h2>Same as</h2>\n<ul>\n";
  for (const rdf::Triple* t : same) {
    const rdf::Term& other = t->subject == self ? t->object : t->subject;
    body += "<li>" + term_cell(other, labels) + "</li>\n";
  }
  body += "</ul>\n<h2>Inverse relations</h2>\n<table>\n";
  for (const rdf::Triple* t : cbd.match(std::nullopt, std::nullopt, self)) {
    if (t->predicate == same_as) continue;
    body += "<tr><td>" + term_cell(t->subject, labels) + "</td><th>" + iri_link(t->predicate, labels) + "</th></tr>\n";
  }
  body += "</table>\n";
  return page(title, body);
}

std::string render_class_page(const ontology::OntologyModel& model, const rdf::Iri& cls, std::size_t instances) {
  std::string title = model.label(cls).value_or(cls.str());
  auto link = [&](const rdf::Iri& c) {
    return "<a href=\"" + html_escape(c.str()) + "\">" + html_escape(model.label(c).value_or(c.str())) + "</a>";
  };
  std::string body = "<h1>" + html_escape(title) + "</h1>\n<p class=\"iri\">" + html_escape(cls.str()) + "</p>\n";
  body += "<h2>Superclasses</h2>\n<ul>\n";
  for (const auto& c : model.superclasses(cls)) {
    if (c != cls) body += "<li>" + link(c) + "</li>\n";
  }
  body += "</ul>\n<h2>Subclasses</h2>\n<ul>\n";
  for (const auto& c : model.direct_subclasses(cls)) body += "<li>" + link(c) + "</li>\n";
  body += "</ul>\n<h2>Instances</h2>\n<p>" + std::to_string(instances) + "</p>\n";
  return page(title, body);
}

std::string render_results_table(const sparql::SolutionSet& solutions) {
  std::string body = "<h1>Query results</h1>\n<table>\n<tr>";
  for (const auto& v : solutions.vars) body += "<th>?" + html_escape(v.name) + "</th>";
  body += "</tr>\n";
  rdf::Graph no_labels;
  for (const auto& row : solutions.rows) {
    body += "<tr>";
    for (const auto& cell : row) body += "<td>" + (cell ? term_cell(*cell, no_labels) : std::string()) + "</td>";
    body += "</tr>\n";
  }
  body += "</table>\n";
  return page("Query results", body);
}

std::string render_message_page(int status, std::string_view title, std::string_view message) {
  return page(title, "<h1>" + std::to_string(status) + " " + html_escape(title) + "</h1>\n<p>" + html_escape(message) + "</p>\n");
}

}  // namespace gemforge::server

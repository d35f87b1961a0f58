#include "gemforge/ontology/validate.hpp"

#include <charconv>
#include <set>

#include "gemforge/rdf/vocab.hpp"

namespace gemforge::ontology {

namespace rv = rdf::vocab;

std::string_view to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::MissingType: return "missing-type";
    case ViolationKind::UnknownType: return "unknown-type";
    case ViolationKind::CoordinateOutOfRange: return "coordinate-out-of-range";
    case ViolationKind::IntervalOrder: return "interval-order";
    case ViolationKind::DanglingReference: return "dangling-reference";
  }
  return "unknown";
}

namespace {

std::optional<double> as_number(const rdf::Term& t) {
  if (!t.is_literal()) return std::nullopt;
  const std::string& s = t.literal().lexical();
  double value = 0;
  const char* begin = s.data() + (!s.empty() && s[0] == '+' ? 1 : 0);
  auto [ptr, ec] = std::from_chars(begin, s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || begin == ptr) return std::nullopt;
  return value;
}

void check_coordinate(const rdf::Graph& data, const rdf::Term& subject, const rdf::Iri& predicate, double limit,
                      const char* name, std::vector<Violation>& out) {
  for (const rdf::Triple* t : data.match(subject, predicate, std::nullopt)) {
    auto value = as_number(t->object);
    if (!value) {
      out.push_back({ViolationKind::CoordinateOutOfRange, std::string(name) + " is not numeric: " + t->object.to_ntriples()});
    } else if (*value < -limit || *value > limit) {
      out.push_back({ViolationKind::CoordinateOutOfRange,
                     std::string(name) + " " + t->object.literal().lexical() + " outside [-" +
                         std::to_string(static_cast<int>(limit)) + ", " + std::to_string(static_cast<int>(limit)) + "]"});
    }
  }
}

std::optional<std::string> literal_value(const rdf::Graph& data, const rdf::Term& s, const rdf::Iri& p) {
  for (const rdf::Triple* t : data.match(s, p, std::nullopt)) {
    if (t->object.is_literal()) return t->object.literal().lexical();
  }
  return std::nullopt;
}

}  // namespace

ValidationReport validate_individual(const OntologyModel& model, const rdf::Graph& data, const rdf::Iri& subject,
                                     const ValidateOptions& options) {
  ValidationReport report{subject, {}};
  const rdf::Term s(subject);
  const rdf::Iri type(std::string(rv::kRdfType));

  auto types = data.match(s, type, std::nullopt);
  if (types.empty()) report.violations.push_back({ViolationKind::MissingType, "no rdf:type"});
  for (const rdf::Triple* t : types) {
    if (!t->object.is_iri() || !model.has_class(t->object.iri())) {
      report.violations.push_back({ViolationKind::UnknownType, "type not in ontology: " + t->object.to_ntriples()});
    }
  }

  check_coordinate(data, s, vocab::lat(), 90.0, "latitude", report.violations);
  check_coordinate(data, s, vocab::lon(), 180.0, "longitude", report.violations);

  for (const rdf::Triple* t : data.match(s, vocab::has_time_indexed_location(), std::nullopt)) {
    auto start = literal_value(data, t->object, vocab::at_time_start());
    auto end = literal_value(data, t->object, vocab::at_time_end());
    // xsd:date lexical forms of equal width order lexicographically.
    if (start && end && start->size() == end->size() && *end < *start) {
      report.violations.push_back({ViolationKind::IntervalOrder, "interval ends (" + *end + ") before it starts (" + *start + ")"});
    }
  }

  std::set<rdf::Iri> reported;
  for (const rdf::Triple* t : data.match(s, std::nullopt, std::nullopt)) {
    if (!t->object.is_iri()) continue;
    const rdf::Iri& o = t->object.iri();
    if (o.view().rfind(options.resource_ns, 0) != 0 || data.has_subject(t->object)) continue;
    if (reported.insert(o).second) {
      report.violations.push_back({ViolationKind::DanglingReference, "no triples describe <" + o.str() + ">"});
    }
  }
  return report;
}

std::vector<ValidationReport> validate_all(const OntologyModel& model, const rdf::Graph& data,
                                           const ValidateOptions& options) {
  std::set<rdf::Iri> subjects;
  for (const rdf::Triple& t : data) {
    if (t.subject.is_iri() && t.subject.iri().view().rfind(options.resource_ns, 0) == 0) {
      subjects.insert(t.subject.iri());
    }
  }
  std::vector<ValidationReport> out;
  for (const auto& s : subjects) out.push_back(validate_individual(model, data, s, options));
  return out;
}

nlohmann::json to_json(const std::vector<ValidationReport>& reports) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& r : reports) {
    for (const auto& v : r.violations) {
      violations.push_back({{"subject", r.subject.str()}, {"kind", to_string(v.kind)}, {"detail", v.detail}});
    }
  }
  return {{"checked", reports.size()}, {"violations", std::move(violations)}};
}

}  // namespace gemforge::ontology

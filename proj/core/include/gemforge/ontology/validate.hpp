#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gemforge/ontology/model.hpp"
#include "gemforge/ontology/vocab.hpp"

namespace gemforge::ontology {

enum class ViolationKind { MissingType, UnknownType, CoordinateOutOfRange, IntervalOrder, DanglingReference };

std::string_view to_string(ViolationKind kind) noexcept;

struct Violation {
  ViolationKind kind;
  std::string detail;
};

struct ValidationReport {
  rdf::Iri subject;
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

struct ValidateOptions {
  /// Objects under this namespace must have at least one triple of their own.
  std::string resource_ns{vocab::kResourceNs};
};

/// Data-quality checks on one individual. Never throws for data problems;
/// everything is reported.
ValidationReport validate_individual(const OntologyModel& model, const rdf::Graph& data, const rdf::Iri& subject,
                                     const ValidateOptions& options = {});

/// Reports for every IRI subject under `options.resource_ns`, sorted by IRI.
std::vector<ValidationReport> validate_all(const OntologyModel& model, const rdf::Graph& data,
                                           const ValidateOptions& options = {});

nlohmann::json to_json(const std::vector<ValidationReport>& reports);

}  // namespace gemforge::ontology

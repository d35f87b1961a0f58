#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gemforge/rdf/graph.hpp"

namespace gemforge::ontology {

class SubclassCycleError : public std::runtime_error {
 public:
  explicit SubclassCycleError(std::vector<rdf::Iri> path);
  /// Classes on the cycle, in edge order, starting at the smallest IRI.
  const std::vector<rdf::Iri>& path() const noexcept { return path_; }

 private:
  std::vector<rdf::Iri> path_;
};

struct PropertyDecl {
  std::optional<rdf::Iri> domain;
  std::optional<rdf::Iri> range;

  friend bool operator==(const PropertyDecl&, const PropertyDecl&) = default;
};

using SubclassEdge = std::pair<rdf::Iri, rdf::Iri>;  // (child, parent)

/// Classes, subclass DAG, property declarations and imports of an ontology.
/// Immutable once built; the reflexive-transitive superclass table is
/// computed at construction.
class OntologyModel {
 public:
  OntologyModel() = default;
  /// Throws SubclassCycleError when `edges` contain a cycle. Edge endpoints
  /// are added to `classes`.
  OntologyModel(std::set<rdf::Iri> classes, std::set<SubclassEdge> edges,
                std::map<rdf::Iri, PropertyDecl> properties, std::set<rdf::Iri> imports,
                rdf::Graph annotations);

  const std::set<rdf::Iri>& classes() const noexcept { return classes_; }
  const std::set<SubclassEdge>& subclass_edges() const noexcept { return edges_; }
  const std::map<rdf::Iri, PropertyDecl>& properties() const noexcept { return properties_; }
  const std::set<rdf::Iri>& imports() const noexcept { return imports_; }
  const rdf::Graph& annotations() const noexcept { return annotations_; }

  bool has_class(const rdf::Iri& c) const { return classes_.count(c) != 0; }
  /// Reflexive-transitive superclasses of `c` (empty for unknown classes).
  const std::set<rdf::Iri>& superclasses(const rdf::Iri& c) const;
  std::vector<rdf::Iri> direct_superclasses(const rdf::Iri& c) const;
  std::vector<rdf::Iri> direct_subclasses(const rdf::Iri& c) const;
  std::optional<std::string> label(const rdf::Iri& c) const;

  /// Set when resolve_imports could not load one or more imports.
  bool partial() const noexcept { return partial_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  friend bool operator==(const OntologyModel& a, const OntologyModel& b);

 private:
  friend OntologyModel resolve_imports(const OntologyModel&,
                                       const std::function<std::optional<rdf::Graph>(const rdf::Iri&)>&);

  std::set<rdf::Iri> classes_;
  std::set<SubclassEdge> edges_;
  std::map<rdf::Iri, PropertyDecl> properties_;
  std::set<rdf::Iri> imports_;
  rdf::Graph annotations_;
  std::unordered_map<rdf::Iri, std::set<rdf::Iri>> closure_;
  bool partial_ = false;
  std::vector<std::string> warnings_;
};

/// Extracts owl:Class / rdfs:Class declarations, rdfs:subClassOf edges,
/// property declarations and owl:imports; everything else lands in
/// annotations. Throws SubclassCycleError on a cyclic hierarchy.
OntologyModel load_ontology(const rdf::Graph& graph);

using ImportLoader = std::function<std::optional<rdf::Graph>(const rdf::Iri&)>;

/// Transitively merges every import reachable from `model`. Imports the
/// loader cannot resolve are recorded as warnings and mark the result
/// partial.
OntologyModel resolve_imports(const OntologyModel& model, const ImportLoader& loader);

bool is_subclass_of(const OntologyModel& model, const rdf::Iri& a, const rdf::Iri& b);

/// `data` plus (x rdf:type D) for every (x rdf:type C) and superclass D of C.
rdf::Graph infer_types(const OntologyModel& model, const rdf::Graph& data);

/// CG classes whose direct superclass lies outside the CG namespace.
std::vector<rdf::Iri> top_level_classes(const OntologyModel& model);

}  // namespace gemforge::ontology

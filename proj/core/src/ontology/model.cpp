#include "gemforge/ontology/model.hpp"

#include <algorithm>
#include <deque>

#include "gemforge/ontology/vocab.hpp"
#include "gemforge/rdf/vocab.hpp"

namespace gemforge::ontology {

namespace rv = rdf::vocab;

namespace {

std::string describe_path(const std::vector<rdf::Iri>& path) {
  std::string out = "subclass cycle:";
  for (const auto& c : path) out += " <" + c.str() + "> ->";
  if (!path.empty()) out += " <" + path.front().str() + ">";
  return out;
}

// Finds a cycle in the subclass graph, if any, using an iterative DFS.
std::optional<std::vector<rdf::Iri>> find_cycle(const std::map<rdf::Iri, std::vector<rdf::Iri>>& parents) {
  enum class Color { White, Grey, Black };
  std::map<rdf::Iri, Color> color;
  for (const auto& [node, _] : parents) color[node] = Color::White;

  for (const auto& [root, _] : parents) {
    if (color[root] != Color::White) continue;
    std::vector<std::pair<rdf::Iri, std::size_t>> stack{{root, 0}};
    color[root] = Color::Grey;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      auto it = parents.find(node);
      if (it == parents.end() || next >= it->second.size()) {
        color[node] = Color::Black;
        stack.pop_back();
        continue;
      }
      const rdf::Iri& parent = it->second[next++];
      Color c = color.count(parent) ? color[parent] : Color::White;
      if (c == Color::Grey) {
        std::vector<rdf::Iri> path;
        auto start = std::find_if(stack.begin(), stack.end(), [&](const auto& e) { return e.first == parent; });
        for (auto s = start; s != stack.end(); ++s) path.push_back(s->first);
        std::rotate(path.begin(), std::min_element(path.begin(), path.end()), path.end());
        return path;
      }
      if (c == Color::White) {
        color[parent] = Color::Grey;
        stack.emplace_back(parent, 0);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

SubclassCycleError::SubclassCycleError(std::vector<rdf::Iri> path)
    : std::runtime_error(describe_path(path)), path_(std::move(path)) {}

OntologyModel::OntologyModel(std::set<rdf::Iri> classes, std::set<SubclassEdge> edges,
                             std::map<rdf::Iri, PropertyDecl> properties, std::set<rdf::Iri> imports,
                             rdf::Graph annotations)
    : classes_(std::move(classes)),
      edges_(std::move(edges)),
      properties_(std::move(properties)),
      imports_(std::move(imports)),
      annotations_(std::move(annotations)) {
  std::map<rdf::Iri, std::vector<rdf::Iri>> parents;
  for (const auto& [child, parent] : edges_) {
    classes_.insert(child);
    classes_.insert(parent);
    parents[child].push_back(parent);
  }
  for (const auto& c : classes_) parents.try_emplace(c);
  if (auto cycle = find_cycle(parents)) throw SubclassCycleError(std::move(*cycle));

  // Acyclic: memoised DFS computes each closure once.
  std::function<const std::set<rdf::Iri>&(const rdf::Iri&)> visit = [&](const rdf::Iri& c) -> const std::set<rdf::Iri>& {
    if (auto it = closure_.find(c); it != closure_.end()) return it->second;
    std::set<rdf::Iri> supers{c};
    for (const auto& p : parents[c]) {
      const auto& up = visit(p);
      supers.insert(up.begin(), up.end());
    }
    return closure_.emplace(c, std::move(supers)).first->second;
  };
  for (const auto& c : classes_) visit(c);
}

const std::set<rdf::Iri>& OntologyModel::superclasses(const rdf::Iri& c) const {
  static const std::set<rdf::Iri> kEmpty;
  auto it = closure_.find(c);
  return it == closure_.end() ? kEmpty : it->second;
}

std::vector<rdf::Iri> OntologyModel::direct_superclasses(const rdf::Iri& c) const {
  std::vector<rdf::Iri> out;
  for (const auto& [child, parent] : edges_) {
    if (child == c) out.push_back(parent);
  }
  return out;
}

std::vector<rdf::Iri> OntologyModel::direct_subclasses(const rdf::Iri& c) const {
  std::vector<rdf::Iri> out;
  for (const auto& [child, parent] : edges_) {
    if (parent == c) out.push_back(child);
  }
  return out;
}

std::optional<std::string> OntologyModel::label(const rdf::Iri& c) const {
  std::optional<std::string> best;
  for (const rdf::Triple* t : annotations_.match(rdf::Term(c), rdf::Iri(std::string(rv::kRdfsLabel)), std::nullopt)) {
    if (!t->object.is_literal()) continue;
    const auto& lit = t->object.literal();
    bool english = lit.language() && *lit.language() == "en";
    if (english || !lit.language()) return lit.lexical();
    if (!best) best = lit.lexical();
  }
  return best;
}

bool operator==(const OntologyModel& a, const OntologyModel& b) {
  return a.classes_ == b.classes_ && a.edges_ == b.edges_ && a.properties_ == b.properties_ &&
         a.imports_ == b.imports_ && a.annotations_ == b.annotations_;
}

OntologyModel load_ontology(const rdf::Graph& graph) {
  const rdf::Iri type(std::string(rv::kRdfType));
  const rdf::Iri subclass_of(std::string(rv::kRdfsSubClassOf));
  const rdf::Iri imports_p(std::string(rv::kOwlImports));
  const rdf::Iri domain_p(std::string(rv::kRdfsDomain));
  const rdf::Iri range_p(std::string(rv::kRdfsRange));
  static constexpr std::string_view kClassTypes[] = {rv::kOwlClass, rv::kRdfsClass};
  static constexpr std::string_view kPropertyTypes[] = {rv::kOwlObjectProperty, rv::kOwlDatatypeProperty,
                                                        rv::kOwlAnnotationProperty, rv::kRdfProperty};

  std::set<rdf::Iri> classes;
  std::set<SubclassEdge> edges;
  std::map<rdf::Iri, PropertyDecl> properties;
  std::set<rdf::Iri> imports;
  rdf::Graph annotations;
  for (const auto& [prefix, ns] : graph.prefixes()) annotations.set_prefix(prefix, ns);

  for (const rdf::Triple& t : graph) {
    if (t.predicate == type && t.subject.is_iri() && t.object.is_iri()) {
      std::string_view o = t.object.iri().view();
      if (std::find(std::begin(kClassTypes), std::end(kClassTypes), o) != std::end(kClassTypes)) {
        classes.insert(t.subject.iri());
        continue;
      }
      if (std::find(std::begin(kPropertyTypes), std::end(kPropertyTypes), o) != std::end(kPropertyTypes)) {
        properties.try_emplace(t.subject.iri());
        continue;
      }
    }
    if (t.predicate == subclass_of && t.subject.is_iri() && t.object.is_iri()) {
      edges.emplace(t.subject.iri(), t.object.iri());
      continue;
    }
    if (t.predicate == imports_p && t.object.is_iri()) {
      imports.insert(t.object.iri());
      continue;
    }
    annotations.insert(t);
  }

  // Domain and range belong to the property declaration, not the annotations.
  rdf::Graph rest;
  for (const auto& [prefix, ns] : annotations.prefixes()) rest.set_prefix(prefix, ns);
  for (const rdf::Triple& t : annotations) {
    bool is_decl = t.subject.is_iri() && t.object.is_iri() && properties.count(t.subject.iri()) &&
                   (t.predicate == domain_p || t.predicate == range_p);
    if (!is_decl) {
      rest.insert(t);
      continue;
    }
    auto& decl = properties[t.subject.iri()];
    (t.predicate == domain_p ? decl.domain : decl.range) = t.object.iri();
  }

  return OntologyModel(std::move(classes), std::move(edges), std::move(properties), std::move(imports),
                       std::move(rest));
}

OntologyModel resolve_imports(const OntologyModel& model, const ImportLoader& loader) {
  std::set<rdf::Iri> classes = model.classes();
  std::set<SubclassEdge> edges = model.subclass_edges();
  std::map<rdf::Iri, PropertyDecl> properties = model.properties();
  std::set<rdf::Iri> imports = model.imports();
  rdf::Graph annotations = model.annotations();
  std::vector<std::string> warnings = model.warnings();
  bool partial = model.partial();

  // Ontology IRIs already present count as visited so cyclic imports stop.
  std::set<rdf::Iri> visited;
  const rdf::Iri type(std::string(rv::kRdfType));
  const rdf::Term owl_ontology(rdf::Iri(std::string(rv::kOwl) + "Ontology"));
  for (const rdf::Triple* t : annotations.match(std::nullopt, type, owl_ontology)) {
    if (t->subject.is_iri()) visited.insert(t->subject.iri());
  }

  std::deque<rdf::Iri> queue(model.imports().begin(), model.imports().end());
  while (!queue.empty()) {
    rdf::Iri next = queue.front();
    queue.pop_front();
    if (!visited.insert(next).second) continue;
    std::optional<rdf::Graph> graph = loader(next);
    if (!graph) {
      warnings.push_back("unresolved import <" + next.str() + ">");
      partial = true;
      continue;
    }
    OntologyModel imported = load_ontology(*graph);
    classes.insert(imported.classes().begin(), imported.classes().end());
    edges.insert(imported.subclass_edges().begin(), imported.subclass_edges().end());
    for (const auto& [iri, decl] : imported.properties()) {
      auto& mine = properties[iri];
      if (!mine.domain) mine.domain = decl.domain;
      if (!mine.range) mine.range = decl.range;
    }
    imports.insert(imported.imports().begin(), imported.imports().end());
    annotations.merge(imported.annotations());
    for (const rdf::Triple* t : imported.annotations().match(std::nullopt, type, owl_ontology)) {
      if (t->subject.is_iri()) visited.insert(t->subject.iri());
    }
    for (const auto& i : imported.imports()) queue.push_back(i);
  }

  OntologyModel merged(std::move(classes), std::move(edges), std::move(properties), std::move(imports),
                       std::move(annotations));
  merged.partial_ = partial;
  merged.warnings_ = std::move(warnings);
  return merged;
}

bool is_subclass_of(const OntologyModel& model, const rdf::Iri& a, const rdf::Iri& b) {
  if (a == b) return true;
  return model.superclasses(a).count(b) != 0;
}

rdf::Graph infer_types(const OntologyModel& model, const rdf::Graph& data) {
  rdf::Graph out = data;
  const rdf::Iri type(std::string(rv::kRdfType));
  for (const rdf::Triple* t : data.match(std::nullopt, type, std::nullopt)) {
    if (!t->object.is_iri()) continue;
    for (const rdf::Iri& super : model.superclasses(t->object.iri())) {
      out.insert(rdf::Triple(t->subject, type, rdf::Term(super)));
    }
  }
  return out;
}

std::vector<rdf::Iri> top_level_classes(const OntologyModel& model) {
  auto in_cg = [](const rdf::Iri& c) { return c.view().rfind(vocab::kOntologyNs, 0) == 0; };
  std::vector<rdf::Iri> out;
  for (const auto& c : model.classes()) {
    if (!in_cg(c)) continue;
    auto parents = model.direct_superclasses(c);
    if (std::any_of(parents.begin(), parents.end(), [&](const rdf::Iri& p) { return !in_cg(p); })) out.push_back(c);
  }
  return out;
}

}  // namespace gemforge::ontology

#include "gemforge/rdf/graph.hpp"

#include <algorithm>
#include <tuple>

namespace gemforge::rdf {

Triple::Triple(Term s, Iri p, Term o) : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
  if (subject.is_literal()) throw InvalidTerm("literal in subject position: " + subject.to_ntriples());
}

std::string Triple::to_ntriples() const {
  return subject.to_ntriples() + " <" + predicate.str() + "> " + object.to_ntriples() + " .";
}

std::size_t TripleHash::operator()(const Triple& t) const noexcept {
  std::size_t seed = t.subject.hash();
  seed ^= std::hash<Iri>{}(t.predicate) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  seed ^= t.object.hash() + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}

Graph::Graph(const Graph& other) : prefixes_(other.prefixes_) {
  set_.reserve(other.size());
  for (const Triple& t : other) insert(t);
}

Graph& Graph::operator=(const Graph& other) {
  if (this != &other) {
    Graph copy(other);
    *this = std::move(copy);
  }
  return *this;
}

bool Graph::insert(Triple triple) {
  auto [it, inserted] = set_.insert(std::move(triple));
  if (!inserted) return false;
  const Triple* ptr = &*it;
  order_.push_back(ptr);
  by_subject_[ptr->subject].push_back(ptr);
  by_predicate_[ptr->predicate].push_back(ptr);
  by_object_[ptr->object].push_back(ptr);
  return true;
}

void Graph::merge(const Graph& other) {
  for (const auto& [prefix, ns] : other.prefixes_) prefixes_.emplace(prefix, ns);
  for (const Triple& t : other) insert(t);
}

void Graph::set_prefix(std::string prefix, Iri ns) { prefixes_.insert_or_assign(std::move(prefix), std::move(ns)); }

namespace {

template <typename Map, typename Key>
const std::vector<const Triple*>* lookup(const Map& map, const Key& key) {
  static const std::vector<const Triple*> kEmpty;
  auto it = map.find(key);
  return it == map.end() ? &kEmpty : &it->second;
}

}  // namespace

std::size_t Graph::estimate(const std::optional<Term>& s, const std::optional<Iri>& p,
                            const std::optional<Term>& o) const {
  std::size_t best = size();
  if (s) best = std::min(best, lookup(by_subject_, *s)->size());
  if (p) best = std::min(best, lookup(by_predicate_, *p)->size());
  if (o) best = std::min(best, lookup(by_object_, *o)->size());
  return best;
}

std::vector<const Triple*> Graph::match(const std::optional<Term>& s, const std::optional<Iri>& p,
                                        const std::optional<Term>& o) const {
  const std::vector<const Triple*>* candidates = &order_;
  auto narrow = [&](const std::vector<const Triple*>* bucket) {
    if (bucket->size() < candidates->size()) candidates = bucket;
  };
  if (s) narrow(lookup(by_subject_, *s));
  if (p) narrow(lookup(by_predicate_, *p));
  if (o) narrow(lookup(by_object_, *o));

  std::vector<const Triple*> out;
  for (const Triple* t : *candidates) {
    if (s && t->subject != *s) continue;
    if (p && t->predicate != *p) continue;
    if (o && t->object != *o) continue;
    out.push_back(t);
  }
  return out;
}

std::vector<const Triple*> Graph::sorted() const {
  struct Keyed {
    std::string s, p, o;
    const Triple* t;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(size());
  for (const Triple* t : order_) {
    keyed.push_back({t->subject.to_ntriples(), "<" + t->predicate.str() + ">", t->object.to_ntriples(), t});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    return std::tie(a.s, a.p, a.o) < std::tie(b.s, b.p, b.o);
  });
  std::vector<const Triple*> out;
  out.reserve(keyed.size());
  for (const auto& k : keyed) out.push_back(k.t);
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.begin(), a.end(), [&](const Triple& t) { return b.contains(t); });
}

std::vector<Triple> match(const Graph& graph, const std::optional<Term>& s, const std::optional<Iri>& p,
                          const std::optional<Term>& o) {
  std::vector<Triple> out;
  for (const Triple* t : graph.match(s, p, o)) out.push_back(*t);
  return out;
}

Graph prefix_blank_nodes(const Graph& graph, std::string_view prefix) {
  auto rename = [&](const Term& t) -> Term {
    if (!t.is_blank()) return t;
    return BlankNode(std::string(prefix) + t.blank().label());
  };
  Graph out;
  for (const auto& [p, ns] : graph.prefixes()) out.set_prefix(p, ns);
  for (const Triple& t : graph) out.insert(Triple(rename(t.subject), t.predicate, rename(t.object)));
  return out;
}

}  // namespace gemforge::rdf

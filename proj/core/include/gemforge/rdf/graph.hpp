#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gemforge/rdf/term.hpp"

namespace gemforge::rdf {

struct Triple {
  /// Throws InvalidTerm when `subject` is a literal.
  Triple(Term subject, Iri predicate, Term object);

  Term subject;
  Iri predicate;
  Term object;

  std::string to_ntriples() const;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

struct TripleHash {
  std::size_t operator()(const Triple& t) const noexcept;
};

using PrefixMap = std::map<std::string, Iri>;

/// Set of triples with subject, predicate and object indexes. Iteration
/// follows insertion order.
class Graph {
 public:
  Graph() = default;
  Graph(const Graph& other);
  Graph& operator=(const Graph& other);
  Graph(Graph&&) noexcept = default;
  Graph& operator=(Graph&&) noexcept = default;
  ~Graph() = default;

  /// Returns false when the triple was already present.
  bool insert(Triple triple);
  bool insert(Term subject, Iri predicate, Term object) {
    return insert(Triple(std::move(subject), std::move(predicate), std::move(object)));
  }
  /// Inserts every triple of `other` and adopts prefixes that are not yet bound.
  void merge(const Graph& other);

  bool contains(const Triple& triple) const { return set_.count(triple) != 0; }
  std::size_t size() const noexcept { return order_.size(); }
  bool empty() const noexcept { return order_.empty(); }

  /// Triples agreeing with every bound position. Candidates come from the
  /// smallest index among the bound positions.
  std::vector<const Triple*> match(const std::optional<Term>& s, const std::optional<Iri>& p,
                                   const std::optional<Term>& o) const;
  /// Number of candidates the most selective bound index would yield; an
  /// upper bound for match().size().
  std::size_t estimate(const std::optional<Term>& s, const std::optional<Iri>& p,
                       const std::optional<Term>& o) const;

  bool has_subject(const Term& s) const { return by_subject_.count(s) != 0; }

  const PrefixMap& prefixes() const noexcept { return prefixes_; }
  void set_prefix(std::string prefix, Iri ns);

  class const_iterator {
   public:
    using value_type = Triple;
    using difference_type = std::ptrdiff_t;
    using reference = const Triple&;
    using pointer = const Triple*;
    using iterator_category = std::forward_iterator_tag;

    const_iterator() = default;
    explicit const_iterator(std::vector<const Triple*>::const_iterator it) : it_(it) {}
    reference operator*() const { return **it_; }
    pointer operator->() const { return *it_; }
    const_iterator& operator++() {
      ++it_;
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++it_;
      return copy;
    }
    friend bool operator==(const const_iterator&, const const_iterator&) = default;

   private:
    std::vector<const Triple*>::const_iterator it_;
  };

  const_iterator begin() const { return const_iterator(order_.begin()); }
  const_iterator end() const { return const_iterator(order_.end()); }

  /// Triples ordered by (subject, predicate, object) N-Triples text.
  std::vector<const Triple*> sorted() const;

  /// Set equality of triples; prefixes are ignored.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  using Bucket = std::vector<const Triple*>;

  std::unordered_set<Triple, TripleHash> set_;
  std::vector<const Triple*> order_;
  std::unordered_map<Term, Bucket> by_subject_;
  std::unordered_map<Iri, Bucket> by_predicate_;
  std::unordered_map<Term, Bucket> by_object_;
  PrefixMap prefixes_;
};

/// Copy of `graph` with every blank-node label prefixed, so graphs parsed
/// separately can be merged without their b0, b1, ... labels colliding.
Graph prefix_blank_nodes(const Graph& graph, std::string_view prefix);

/// Free-function form of Graph::match returning copies.
std::vector<Triple> match(const Graph& graph, const std::optional<Term>& s,
                          const std::optional<Iri>& p, const std::optional<Term>& o);

}  // namespace gemforge::rdf

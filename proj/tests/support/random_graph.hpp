#pragma once

#include <cstddef>
#include <random>

#include "gemforge/rdf/graph.hpp"

namespace gemforge::testing {

struct RandomGraphOptions {
  std::size_t triples = 50;
  std::size_t max_blank_nodes = 12;
  std::size_t iri_pool = 40;
  std::size_t predicate_pool = 8;
  bool with_prefixes = true;
  bool awkward_literals = true;  // quotes, escapes, non-ASCII, odd numerals
};

/// Random graph drawn from small term pools so that subjects, predicates
/// and objects repeat. Holds exactly `options.triples` triples unless the
/// pools are too small to supply that many distinct ones.
rdf::Graph random_graph(std::mt19937_64& rng, const RandomGraphOptions& options = {});

/// Random term from the same pools (IRIs, literals; no blank nodes).
rdf::Term random_object(std::mt19937_64& rng, const RandomGraphOptions& options);
rdf::Iri random_iri(std::mt19937_64& rng, std::size_t pool);
rdf::Iri random_predicate(std::mt19937_64& rng, std::size_t pool);

}  // namespace gemforge::testing

#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gemforge/etl/record.hpp"
#include "gemforge/rdf/graph.hpp"

namespace gemforge::testing {

/// Two or three invented words, e.g. "Museu Taroveli Dunasco".
std::string synthetic_name(std::mt19937_64& rng);

/// `count` valid records with ids 1..count spread over 20 cities: one or
/// two categories, 1-3 descriptions, up to two links and, for some, a
/// validity interval.
std::vector<etl::GemRecord> synthetic_records(std::uint64_t seed, std::size_t count);

struct LinkingSet {
  rdf::Graph left;
  rdf::Graph right;
  std::set<std::pair<rdf::Iri, rdf::Iri>> truth;  // planted (left, right) matches
};

/// `gems` labelled, geolocated resources on the left; on the right a
/// perturbed copy of each (one typo in the name, at most 50 m of jitter)
/// plus `distractors` unrelated resources: half near a gem with a
/// different name, half elsewhere with a name borrowed from a gem.
LinkingSet synthetic_linking_set(std::uint64_t seed, std::size_t gems = 200, std::size_t distractors = 50);

}  // namespace gemforge::testing

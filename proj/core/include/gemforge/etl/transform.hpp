#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "gemforge/etl/record.hpp"
#include "gemforge/ontology/model.hpp"
#include "gemforge/rdf/graph.hpp"

namespace gemforge::etl {

class RecordError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

rdf::Iri mint_iri(const GemRecord& record);
rdf::Iri city_iri(std::uint64_t city_id);

/// Per-record triples: one rdf:type per category, rdfs:label, geo:lat and
/// geo:long, cg:inCity, and the location assignment. Without a validity
/// interval the location is a direct a-loc:hasLocationType arc; with one it
/// is a blank node `_:loc{id}` carrying atLocationType, atTime-start and,
/// when given, atTime-end. Descriptions and links add dcterms:description
/// and rdfs:seeAlso arcs. Throws RecordError on invalid fields; nothing is
/// emitted then. Category fallbacks are appended to `warnings`.
rdf::Graph record_to_triples(const GemRecord& record, const ontology::OntologyModel& model,
                             std::vector<std::string>* warnings = nullptr);

struct EtlStats {
  std::size_t records_in = 0;
  std::size_t records_rejected = 0;
  std::size_t triples_out = 0;
  std::size_t resources_minted = 0;  // gems plus cities
  std::size_t category_fallbacks = 0;

  std::size_t accepted() const noexcept { return records_in - records_rejected; }
  friend bool operator==(const EtlStats&, const EtlStats&) = default;
};

struct EtlResult {
  rdf::Graph graph;
  EtlStats stats;
  std::vector<Rejection> rejected;
  std::vector<std::string> warnings;
};

/// Transforms every record, rejecting duplicates (the later occurrence) and
/// invalid records, adds one clv:City description per city, and
/// materialises the subclass closure with infer_types.
EtlResult run_etl(const RecordBatch& batch, const ontology::OntologyModel& model);

}  // namespace gemforge::etl

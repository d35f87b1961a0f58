#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gemforge/linker/blocking.hpp"
#include "gemforge/linker/similarity.hpp"
#include "gemforge/linker/spec.hpp"
#include "gemforge/rdf/graph.hpp"

namespace gemforge::linker {

enum class Verdict { Accept, Review, Reject };

std::string_view to_string(Verdict v) noexcept;

struct LinkCandidate {
  rdf::Iri left;
  rdf::Iri right;
  double score = 0;
  Verdict verdict = Verdict::Reject;

  friend bool operator==(const LinkCandidate&, const LinkCandidate&) = default;
};

struct DiscoverOptions {
  bool blocking = true;        // false scores every pair
  bool keep_rejected = false;  // include reject-tier pairs in the output
  std::vector<std::string>* log = nullptr;
};

/// Weighted sum of the spec's metrics. String metrics take the best pair
/// of names; a metric whose input is missing on either side contributes 0
/// and, when `log` is set, leaves a note.
double score_pair(const Entity& left, const Entity& right, const LinkSpec& spec,
                  std::vector<std::string>* log = nullptr);

Verdict verdict_for(double score, const LinkSpec& spec) noexcept;

/// Scores candidate pairs and assigns verdicts. Each left resource keeps at
/// most one accept (highest score, then smallest right IRI); its other
/// accept-tier pairs are dropped. Sorted by (left, score desc, right).
std::vector<LinkCandidate> discover_links(const std::vector<Entity>& left, const std::vector<Entity>& right,
                                          const LinkSpec& spec, const DiscoverOptions& options = {});
std::vector<LinkCandidate> discover_links(const rdf::Graph& left, const rdf::Graph& right, const LinkSpec& spec,
                                          const DiscoverOptions& options = {});

/// (left owl:sameAs right) for every candidate with the given verdict.
rdf::Graph emit_sameas(const std::vector<LinkCandidate>& candidates, Verdict filter = Verdict::Accept);

/// `left_iri,right_iri,score` header plus one row per review-tier candidate.
std::string review_csv(const std::vector<LinkCandidate>& candidates);

}  // namespace gemforge::linker

#include "gemforge/linker/discover.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "gemforge/rdf/vocab.hpp"
#include "gemforge/util/csv.hpp"

namespace gemforge::linker {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Accept: return "accept";
    case Verdict::Review: return "review";
    case Verdict::Reject: return "reject";
  }
  return "unknown";
}

double score_pair(const Entity& left, const Entity& right, const LinkSpec& spec, std::vector<std::string>* log) {
  double score = 0;
  for (const auto& m : spec.metrics) {
    if (m.weight == 0) continue;
    double sim = 0;
    if (m.kind == MetricKind::Geo) {
      if (left.point && right.point) {
        sim = geo_sim(*left.point, *right.point, spec.geo_cutoff_m);
      } else if (log) {
        log->push_back("no coordinates for " + (left.point ? right.iri : left.iri).str() + "; geo contributes 0");
      }
    } else if (left.names.empty() || right.names.empty()) {
      if (log) log->push_back("no label for " + (left.names.empty() ? left.iri : right.iri).str());
    } else {
      for (const auto& a : left.names) {
        for (const auto& b : right.names) sim = std::max(sim, string_sim(a, b, m.kind));
      }
    }
    score += m.weight * sim;
  }
  return std::clamp(score, 0.0, 1.0);
}

Verdict verdict_for(double score, const LinkSpec& spec) noexcept {
  if (score >= spec.accept_threshold) return Verdict::Accept;
  if (score >= spec.review_threshold) return Verdict::Review;
  return Verdict::Reject;
}

std::vector<LinkCandidate> discover_links(const std::vector<Entity>& left, const std::vector<Entity>& right,
                                          const LinkSpec& spec, const DiscoverOptions& options) {
  std::vector<CandidatePair> pairs = options.blocking ? block(left, right, spec) : all_pairs(left, right);

  std::vector<LinkCandidate> scored;
  for (auto [i, j] : pairs) {
    double s = score_pair(left[i], right[j], spec, options.log);
    Verdict v = verdict_for(s, spec);
    if (v == Verdict::Reject && !options.keep_rejected) continue;
    scored.push_back({left[i].iri, right[j].iri, s, v});
  }

  std::sort(scored.begin(), scored.end(), [](const LinkCandidate& a, const LinkCandidate& b) {
    if (a.left != b.left) return a.left < b.left;
    if (a.score != b.score) return a.score > b.score;
    return a.right < b.right;
  });

  std::vector<LinkCandidate> out;
  out.reserve(scored.size());
  std::optional<rdf::Iri> accepted_for;
  for (auto& c : scored) {
    if (c.verdict == Verdict::Accept) {
      // Sorted order puts the winning accept first for each left resource.
      if (accepted_for == c.left) continue;
      accepted_for = c.left;
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<LinkCandidate> discover_links(const rdf::Graph& left, const rdf::Graph& right, const LinkSpec& spec,
                                          const DiscoverOptions& options) {
  return discover_links(extract_entities(left), extract_entities(right), spec, options);
}

rdf::Graph emit_sameas(const std::vector<LinkCandidate>& candidates, Verdict filter) {
  const rdf::Iri same_as(std::string(rdf::vocab::kOwlSameAs));
  rdf::Graph g;
  g.set_prefix("owl", rdf::Iri(std::string(rdf::vocab::kOwl)));
  for (const auto& c : candidates) {
    if (c.verdict == filter) g.insert(rdf::Triple(rdf::Term(c.left), same_as, rdf::Term(c.right)));
  }
  return g;
}

std::string review_csv(const std::vector<LinkCandidate>& candidates) {
  std::string out = "left_iri,right_iri,score\n";
  char buf[32];
  for (const auto& c : candidates) {
    if (c.verdict != Verdict::Review) continue;
    std::snprintf(buf, sizeof buf, "%.6f", c.score);
    out += util::csv_field(c.left.str()) + ',' + util::csv_field(c.right.str()) + ',' + buf + '\n';
  }
  return out;
}

}  // namespace gemforge::linker

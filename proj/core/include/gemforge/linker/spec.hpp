#pragma once

#include <filesystem>
#include <stdexcept>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace gemforge::linker {

class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class MetricKind { Levenshtein, TrigramJaccard, Geo };

std::string_view to_string(MetricKind kind) noexcept;

struct Metric {
  MetricKind kind;
  double weight;
};

struct BlockingSpec {
  double cell_deg = 0.01;
  std::size_t name_prefix_len = 4;  // 0 disables the name key
};

struct LinkSpec {
  std::vector<Metric> metrics{{MetricKind::Levenshtein, 0.5}, {MetricKind::TrigramJaccard, 0.2}, {MetricKind::Geo, 0.3}};
  double accept_threshold = 0.85;
  double review_threshold = 0.65;
  double geo_cutoff_m = 500.0;
  BlockingSpec blocking;

  /// Checks the invariants and rescales weights to sum to 1. Throws SpecError.
  void normalize();
  double weight(MetricKind kind) const noexcept;
};

/// Keys: accept_threshold, review_threshold, geo_cutoff_m, a `metrics`
/// table of kind -> weight (levenshtein, trigram | trigram-jaccard, geo)
/// and a `blocking` table with cell_deg and name_prefix_len. Absent keys
/// keep their defaults; a present `metrics` table replaces the default
/// metric list. The result is normalised.
LinkSpec link_spec_from_json(const nlohmann::json& config);

/// TOML or JSON, detected from the content.
LinkSpec load_link_spec(const std::filesystem::path& path);

}  // namespace gemforge::linker

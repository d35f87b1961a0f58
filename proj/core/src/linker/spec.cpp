#include "gemforge/linker/spec.hpp"

#include <cmath>

#include "gemforge/util/config_file.hpp"

namespace gemforge::linker {

std::string_view to_string(MetricKind kind) noexcept {
  switch (kind) {
    case MetricKind::Levenshtein: return "levenshtein";
    case MetricKind::TrigramJaccard: return "trigram-jaccard";
    case MetricKind::Geo: return "geo";
  }
  return "unknown";
}

void LinkSpec::normalize() {
  if (metrics.empty()) throw SpecError("link spec has no metrics");
  double total = 0;
  for (const auto& m : metrics) {
    if (!(m.weight >= 0) || !std::isfinite(m.weight)) throw SpecError("metric weights must be finite and >= 0");
    total += m.weight;
  }
  if (!(total > 0)) throw SpecError("metric weights sum to zero");
  for (auto& m : metrics) m.weight /= total;
  if (!(accept_threshold > 0 && accept_threshold <= 1)) throw SpecError("accept_threshold must lie in (0, 1]");
  if (!(review_threshold > 0 && review_threshold <= accept_threshold)) {
    throw SpecError("review_threshold must lie in (0, accept_threshold]");
  }
  if (!(geo_cutoff_m > 0) || !std::isfinite(geo_cutoff_m)) throw SpecError("geo_cutoff_m must be positive");
  if (!(blocking.cell_deg > 0) || blocking.cell_deg > 180) throw SpecError("blocking.cell_deg must lie in (0, 180]");
}

double LinkSpec::weight(MetricKind kind) const noexcept {
  double w = 0;
  for (const auto& m : metrics) {
    if (m.kind == kind) w += m.weight;
  }
  return w;
}

namespace {

double number(const nlohmann::json& j, const char* key) {
  if (!j.is_number()) throw SpecError(std::string(key) + " must be a number");
  return j.get<double>();
}

MetricKind metric_kind(const std::string& name) {
  if (name == "levenshtein") return MetricKind::Levenshtein;
  if (name == "trigram" || name == "trigram-jaccard" || name == "trigram_jaccard") return MetricKind::TrigramJaccard;
  if (name == "geo") return MetricKind::Geo;
  throw SpecError("unknown metric '" + name + "'");
}

}  // namespace

LinkSpec link_spec_from_json(const nlohmann::json& config) {
  if (!config.is_object()) throw SpecError("link spec must be an object");
  LinkSpec spec;
  for (const auto& [key, value] : config.items()) {
    if (key == "accept_threshold") {
      spec.accept_threshold = number(value, "accept_threshold");
    } else if (key == "review_threshold") {
      spec.review_threshold = number(value, "review_threshold");
    } else if (key == "geo_cutoff_m") {
      spec.geo_cutoff_m = number(value, "geo_cutoff_m");
    } else if (key == "metrics") {
      if (!value.is_object()) throw SpecError("metrics must be a table of kind = weight");
      spec.metrics.clear();
      for (const auto& [name, w] : value.items()) spec.metrics.push_back({metric_kind(name), number(w, name.c_str())});
    } else if (key == "blocking") {
      if (!value.is_object()) throw SpecError("blocking must be a table");
      for (const auto& [bk, bv] : value.items()) {
        if (bk == "cell_deg") {
          spec.blocking.cell_deg = number(bv, "blocking.cell_deg");
        } else if (bk == "name_prefix_len") {
          if (!bv.is_number_integer() || bv.get<long long>() < 0) {
            throw SpecError("blocking.name_prefix_len must be a non-negative integer");
          }
          spec.blocking.name_prefix_len = bv.get<std::size_t>();
        } else {
          throw SpecError("unknown blocking key '" + bk + "'");
        }
      }
    } else {
      throw SpecError("unknown link spec key '" + key + "'");
    }
  }
  spec.normalize();
  return spec;
}

LinkSpec load_link_spec(const std::filesystem::path& path) {
  try {
    return link_spec_from_json(util::load_config_file(path));
  } catch (const util::ConfigError& e) {
    throw SpecError(path.string() + ": " + e.what());
  }
}

}  // namespace gemforge::linker

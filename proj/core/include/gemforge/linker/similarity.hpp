#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gemforge/linker/spec.hpp"
#include "gemforge/rdf/graph.hpp"

namespace gemforge::linker {

inline constexpr double kEarthRadiusM = 6'371'000.0;

struct GeoPoint {
  double lat = 0;
  double lon = 0;
};

/// 1 - edit distance / max length, over Unicode code points.
double levenshtein_sim(std::string_view a, std::string_view b);
/// Jaccard index of the character trigram sets of "  " + s + " ".
double trigram_jaccard(std::string_view a, std::string_view b);
/// Dispatches to one of the two string metrics; Geo is not a string metric.
double string_sim(std::string_view a, std::string_view b, MetricKind kind);

double haversine_m(GeoPoint a, GeoPoint b);
/// max(0, 1 - d / cutoff_m)
double geo_sim(GeoPoint a, GeoPoint b, double cutoff_m);

/// A resource as the linker sees it: slugified labels and an optional point.
struct Entity {
  rdf::Iri iri;
  std::vector<std::string> names;
  std::optional<GeoPoint> point;
};

/// Every IRI subject carrying an rdfs:label, sorted by IRI. Coordinates
/// come from geo:lat / geo:long when both parse as numbers.
std::vector<Entity> extract_entities(const rdf::Graph& graph);

}  // namespace gemforge::linker

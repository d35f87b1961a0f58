#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gemforge/rdf/term.hpp"

namespace gemforge::etl {

using OsmTags = std::map<std::string, std::string>;

struct CategoryMatch {
  rdf::Iri cls;
  /// True when neither the code nor any OSM tag was recognised and the
  /// class is the CulturalProperty fallback.
  bool fallback = false;
};

/// Resolves an application category code (case-insensitive), or an OSM
/// `key=value` pair given as the code, or else the first OSM tag in the
/// shipped table order, to a class IRI.
CategoryMatch map_category(std::string_view code, const OsmTags* osm_tags = nullptr);

struct CategoryEntry {
  std::string_view key;    // app code or "key=value"
  std::string_view local;  // local name, ArCo or CG namespace per `arco`
  bool arco = false;
};

const std::vector<CategoryEntry>& app_category_table();
const std::vector<CategoryEntry>& osm_category_table();

}  // namespace gemforge::etl

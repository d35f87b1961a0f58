#pragma once

#include <filesystem>
#include <string>

#include "gemforge/ontology/model.hpp"
#include "gemforge/rdf/parse.hpp"
#include "gemforge/util/io.hpp"

namespace gemforge::testing {

inline std::filesystem::path fixture(const std::string& name) { return std::filesystem::path(GEMFORGE_FIXTURES_DIR) / name; }

inline std::filesystem::path ontology_file() { return GEMFORGE_ONTOLOGY_FILE; }

inline const ontology::OntologyModel& shipped_model() {
  static const ontology::OntologyModel model = ontology::load_ontology(rdf::read_graph_file(ontology_file()));
  return model;
}

}  // namespace gemforge::testing

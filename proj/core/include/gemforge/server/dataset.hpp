#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "gemforge/ontology/model.hpp"
#include "gemforge/rdf/graph.hpp"

namespace gemforge::server {

/// Everything one server snapshot answers from. Immutable once published.
struct Dataset {
  rdf::Graph data;  // instance data plus links, with inferred types
  ontology::OntologyModel model;
  rdf::Graph ontology_graph;
  std::string ontology_ttl;  // the ontology file, byte for byte
};

/// Parses and merges data files; blank nodes of file i are labelled f{i}_b*.
rdf::Graph load_data_files(const std::vector<std::filesystem::path>& data_files);

/// Parses the ontology and every data file, merges the data and
/// materialises inferred types. Throws util::IoError, rdf::ParseError or
/// ontology::SubclassCycleError.
Dataset load_dataset(const std::filesystem::path& ontology_file, const std::vector<std::filesystem::path>& data_files);

/// Builds a dataset from in-memory parts (tests, embedding).
Dataset make_dataset(std::string ontology_ttl, const rdf::Graph& data);

}  // namespace gemforge::server

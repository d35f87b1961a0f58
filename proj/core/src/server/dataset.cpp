#include "gemforge/server/dataset.hpp"

#include "gemforge/rdf/parse.hpp"
#include "gemforge/util/io.hpp"

namespace gemforge::server {

Dataset make_dataset(std::string ontology_ttl, const rdf::Graph& data) {
  Dataset ds;
  ds.ontology_graph = rdf::parse_turtle(ontology_ttl);
  ds.model = ontology::load_ontology(ds.ontology_graph);
  ds.data = ontology::infer_types(ds.model, data);
  for (const auto& [prefix, ns] : ds.ontology_graph.prefixes()) {
    if (!ds.data.prefixes().count(prefix)) ds.data.set_prefix(prefix, ns);
  }
  ds.ontology_ttl = std::move(ontology_ttl);
  return ds;
}

rdf::Graph load_data_files(const std::vector<std::filesystem::path>& data_files) {
  rdf::Graph data;
  for (std::size_t i = 0; i < data_files.size(); ++i) {
    data.merge(rdf::prefix_blank_nodes(rdf::read_graph_file(data_files[i]), "f" + std::to_string(i) + "_"));
  }
  return data;
}

Dataset load_dataset(const std::filesystem::path& ontology_file, const std::vector<std::filesystem::path>& data_files) {
  std::string ttl = util::read_file(ontology_file);
  rdf::Graph data = load_data_files(data_files);
  try {
    return make_dataset(std::move(ttl), data);
  } catch (const rdf::ParseError& e) {
    throw rdf::ParseError(ontology_file.string() + ": " + e.message(), e.line(), e.column());
  }
}

}  // namespace gemforge::server

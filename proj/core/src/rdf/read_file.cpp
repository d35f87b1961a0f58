#include "gemforge/rdf/parse.hpp"
#include "gemforge/util/io.hpp"

namespace gemforge::rdf {

Graph read_graph_file(const std::filesystem::path& path) {
  std::string text = util::read_file(path);
  try {
    if (path.extension() == ".nt") return parse_ntriples(text);
    std::string base = "file://" + std::filesystem::absolute(path).lexically_normal().string();
    return parse_turtle(text, Iri::is_valid(base) ? std::optional<Iri>(Iri(base)) : std::nullopt);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.message(), e.line(), e.column());
  }
}

}  // namespace gemforge::rdf

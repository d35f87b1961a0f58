#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "gemforge/rdf/format.hpp"
#include "gemforge/server/dataset.hpp"
#include "gemforge/server/service.hpp"
#include "gemforge/util/io.hpp"

namespace rdf = gemforge::rdf;
namespace server = gemforge::server;

namespace {

void BM_Negotiate(benchmark::State& state) {
  const std::string accept = "text/html,application/xhtml+xml,application/xml;q=0.9,image/avif,*/*;q=0.8";
  for (auto _ : state) benchmark::DoNotOptimize(rdf::negotiate(accept));
}
BENCHMARK(BM_Negotiate);

void BM_ResourceRequest(benchmark::State& state) {
  server::ServerConfig config;
  config.ontology_file = gemforge::testing::ontology_file();
  server::LinkedDataService service(
      config, server::make_dataset(gemforge::util::read_file(config.ontology_file),
                                   rdf::read_graph_file(gemforge::testing::fixture("museu-do-fado.ttl"))));
  const char* accepts[] = {"text/turtle", "application/n-triples", "application/rdf+xml", "application/ld+json",
                           "text/html"};
  server::HttpRequest req;
  req.path = "/resource/cultural-gems/27213";
  req.headers["accept"] = accepts[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(service.handle(req));
  state.SetLabel(accepts[state.range(0)]);
}
BENCHMARK(BM_ResourceRequest)->DenseRange(0, 4);

}  // namespace

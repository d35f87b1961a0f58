#include <benchmark/benchmark.h>

#include "gemforge/linker/blocking.hpp"
#include "gemforge/linker/discover.hpp"
#include "gemforge/linker/similarity.hpp"
#include "synthetic.hpp"

namespace linker = gemforge::linker;

namespace {

struct Inputs {
  std::vector<linker::Entity> left, right;
  linker::LinkSpec spec;
};

Inputs inputs(std::size_t gems) {
  auto set = gemforge::testing::synthetic_linking_set(5, gems, gems / 4);
  Inputs in{linker::extract_entities(set.left), linker::extract_entities(set.right), {}};
  in.spec.normalize();
  return in;
}

void BM_Blocking(benchmark::State& state) {
  Inputs in = inputs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(linker::block(in.left, in.right, in.spec));
}
BENCHMARK(BM_Blocking)->Arg(200)->Arg(2'000);

void BM_DiscoverBlocked(benchmark::State& state) {
  Inputs in = inputs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(linker::discover_links(in.left, in.right, in.spec));
}
BENCHMARK(BM_DiscoverBlocked)->Arg(200)->Arg(2'000);

void BM_DiscoverAllPairs(benchmark::State& state) {
  Inputs in = inputs(static_cast<std::size_t>(state.range(0)));
  linker::DiscoverOptions opts;
  opts.blocking = false;
  for (auto _ : state) benchmark::DoNotOptimize(linker::discover_links(in.left, in.right, in.spec, opts));
}
BENCHMARK(BM_DiscoverAllPairs)->Arg(200);

void BM_Levenshtein(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(linker::levenshtein_sim("museu-nacional-do-azulejo", "museu-nacional-de-azuleijo"));
  }
}
BENCHMARK(BM_Levenshtein);

}  // namespace

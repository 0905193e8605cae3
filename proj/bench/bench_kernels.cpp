// Serial reference kernels against their OpenMP counterparts. The Arg is the
// worker count; jobs = 0 selects the serial reference.

#include <benchmark/benchmark.h>

#include "mrc/constructor.hpp"
#include "mrc/cyclotree.hpp"
#include "mrc/kernels.hpp"

namespace {

using namespace mrc;

// K4vK4 after one diamond replacement (8 vertices, 15 edges). It is Ramsey,
// so the scan visits all 2^14 colourings.
const Graph& scan_graph() {
  static const Graph g = apply_construction(k4_vee_k4(), legal_sites(k4_vee_k4(), ConstructionKind::C2)[0]).after;
  return g;
}

void BM_ColouringScan(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  const Graph& g = scan_graph();
  for (auto _ : state) {
    auto r = jobs == 0 ? kernels::scan_colourings_serial(g, 2) : kernels::scan_colourings_parallel(g, 2, jobs);
    benchmark::DoNotOptimize(r);
  }
  state.counters["colourings"] = static_cast<double>(kernels::colouring_space(g.edge_count(), 2));
}
BENCHMARK(BM_ColouringScan)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_MaskCollection(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(0));
  const int n = 7;
  const auto pairs = kernels::pair_table(n);
  auto pred = [&](std::uint64_t m) {
    const auto s = kernels::small_from_mask(n, m, pairs);
    return kernels::small_is_2_connected(s) && kernels::small_every_edge_in_two_triangles(s);
  };
  for (auto _ : state) {
    auto out = jobs == 0 ? kernels::collect_masks_serial(21, 13, pred)
                         : kernels::collect_masks_parallel(21, 13, pred, jobs);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_MaskCollection)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_VerifyEmbedding(benchmark::State& state) {
  const int jobs = std::max<int>(1, static_cast<int>(state.range(0)));
  std::vector<std::vector<int>> star;
  for (int t = 0; t < 10; ++t) star.push_back({0, 2 * t + 1, 2 * t + 2});
  const auto emb = embed(parse_forest(star), 21);
  for (auto _ : state) {
    auto r = verify_embedding(emb, 21, jobs);
    benchmark::DoNotOptimize(r);
  }
  state.counters["colourings"] = 1024;
}
BENCHMARK(BM_VerifyEmbedding)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State& state) {
  const int jobs = std::max<int>(1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_minimal(7, jobs));
}
BENCHMARK(BM_Enumerate)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "detcycle/arith/groebner.hpp"
#include "detcycle/arith/parser.hpp"
#include "detcycle/arith/random.hpp"
#include "detcycle/deformation/pipeline.hpp"
#include "detcycle/determinant/axioms.hpp"

namespace {

using namespace detcycle;

arith::RingPtr plane(unsigned order) {
  return arith::RingContext::make({"x", "y", "z"}, arith::ArtinAlgebra{{"e"}, order});
}

void BM_GroebnerTwistedCubic(benchmark::State& state) {
  auto ctx = arith::RingContext::make({"z", "y", "x"}, arith::ArtinAlgebra::field());
  std::vector<arith::RingElem> gens = {arith::parse_poly("y - x^2", ctx), arith::parse_poly("z - x^3", ctx)};
  for (auto _ : state) benchmark::DoNotOptimize(arith::groebner_basis(gens));
}
BENCHMARK(BM_GroebnerTwistedCubic);

void BM_GroebnerRandom(benchmark::State& state) {
  auto ctx = plane(1);
  arith::RandomSource rng(static_cast<std::uint64_t>(state.range(0)));
  std::vector<arith::RingElem> gens;
  for (int i = 0; i < 3; ++i) gens.push_back(rng.nonzero_pure_poly(ctx, static_cast<unsigned>(state.range(0)), 3));
  for (auto _ : state) benchmark::DoNotOptimize(arith::groebner_basis(gens));
}
BENCHMARK(BM_GroebnerRandom)->Arg(2)->Arg(3);

void BM_AxiomSuite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(det::axiom_suite(7, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_AxiomSuite)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_CycleCheck(benchmark::State& state) {
  auto ctx = plane(2);
  std::vector<arith::RingElem> params = {arith::parse_poly("x", ctx), arith::parse_poly("y", ctx),
                                         arith::parse_poly("z", ctx)};
  auto scene = deformation::Scene::make(ctx, {{"U", params, arith::parse_poly("x + e*(y^4 + x*z^3 + y*z)", ctx)}});
  for (auto _ : state) benchmark::DoNotOptimize(deformation::cycle_check(scene, "U"));
}
BENCHMARK(BM_CycleCheck)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "wehrhart/corpus.hpp"
#include "wehrhart/ehrhart.hpp"
#include "wehrhart/stanley.hpp"
#include "wehrhart/weights.hpp"

using namespace wehrhart;

namespace {

std::vector<Point> points_for(int which) {
  switch (which) {
    case 0: return corpus::unit_cube();
    case 1: return corpus::standard_simplex(4);
    case 2: return corpus::square_pyramid();
    default: return corpus::random_points(corpus::kRandomPolytopeSeed, 3, 9, 3);
  }
}

void BM_FaceLattice(benchmark::State& state) {
  const auto pts = points_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_face_lattice(facet_presentation(pts)));
}
BENCHMARK(BM_FaceLattice)->DenseRange(0, 3);

void BM_PointsByFace(benchmark::State& state) {
  const auto l = build_face_lattice(facet_presentation(corpus::unit_cube()));
  for (auto _ : state) benchmark::DoNotOptimize(points_by_face(*l, state.range(0)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PointsByFace)->RangeMultiplier(2)->Range(2, 16)->Complexity();

void BM_EhrhartPolynomial(benchmark::State& state) {
  const auto l = build_face_lattice(facet_presentation(points_for(static_cast<int>(state.range(0)))));
  const WeightFunction f = random_weight(l, 1);
  const HomogPoly phi = HomogPoly::sum_of_squares(l->dim());
  for (auto _ : state) benchmark::DoNotOptimize(ehrhart_polynomial(f, phi, Variant::E));
}
BENCHMARK(BM_EhrhartPolynomial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Dualize(benchmark::State& state) {
  const auto l = build_face_lattice(facet_presentation(points_for(static_cast<int>(state.range(0)))));
  const WeightFunction f = random_weight(l, 2);
  for (auto _ : state) benchmark::DoNotOptimize(dualize(f));
}
BENCHMARK(BM_Dualize)->DenseRange(0, 3);

void BM_HPolynomial(benchmark::State& state) {
  const auto l = build_face_lattice(facet_presentation(points_for(static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(h_polynomial(l));
}
BENCHMARK(BM_HPolynomial)->DenseRange(0, 3);

}  // namespace

BENCHMARK_MAIN();

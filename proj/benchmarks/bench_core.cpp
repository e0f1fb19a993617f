#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "grex/graded.hpp"
#include "grex/groebner.hpp"
#include "grex/io.hpp"
#include "grex/pfaffian.hpp"
#include "grex/semigroup.hpp"

using namespace grex;

namespace {

std::vector<Poly> curve_gens(const Ring& r) {
  return {parse_poly(r, "x*z - y^2"), parse_poly(r, "x*w - y*z"), parse_poly(r, "y*w - z^2")};
}

void BM_BuchbergerCurveRationals(benchmark::State& state) {
  Ring r = make_ring(Field::rationals(), {"x", "y", "z", "w"}, {1, 1, 1, 1});
  std::vector<Poly> gens = curve_gens(r);
  for (auto _ : state) {
    GroebnerBasis gb = buchberger(r, gens);
    benchmark::DoNotOptimize(gb);
  }
}
BENCHMARK(BM_BuchbergerCurveRationals);

void BM_BuchbergerCurvePrime(benchmark::State& state) {
  Ring r = make_ring(Field::prime(32003), {"x", "y", "z", "w"}, {1, 1, 1, 1});
  std::vector<Poly> gens = curve_gens(r);
  for (auto _ : state) {
    GroebnerBasis gb = buchberger(r, gens);
    benchmark::DoNotOptimize(gb);
  }
}
BENCHMARK(BM_BuchbergerCurvePrime);

void BM_ToricIdeal(benchmark::State& state) {
  NumericalSemigroup h({3, 4, 5});
  for (auto _ : state) {
    Ideal p = toric_ideal(h, Field::rationals());
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_ToricIdeal);

void BM_NormalForm(benchmark::State& state) {
  Ring r = make_ring(Field::rationals(), {"x", "y", "z", "w"}, {1, 1, 1, 1});
  GroebnerBasis gb = buchberger(r, curve_gens(r));
  Poly f = parse_poly(r, "x + y + z + w").pow(6);
  for (auto _ : state) {
    Poly nf = normal_form(f, gb);
    benchmark::DoNotOptimize(nf);
  }
}
BENCHMARK(BM_NormalForm);

void BM_MaxPfaffians(benchmark::State& state) {
  Ring r = make_ring(Field::prime(32003), {"x", "y", "z"}, {1, 1, 1});
  Rng rng(1);
  AltMatrix a = AltMatrix::random_linear(r, static_cast<int>(state.range(0)), rng);
  for (auto _ : state) {
    std::vector<Poly> g = signed_max_pfaffians(a);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_MaxPfaffians)->Arg(7)->Arg(9);

void BM_HilbertValues(benchmark::State& state) {
  Ring r = make_ring(Field::rationals(), {"x", "y", "z", "w"}, {1, 1, 1, 1});
  Ideal i(r, curve_gens(r));
  for (auto _ : state) {
    std::vector<int64_t> hf = hilbert_values(i, 0, 50);
    benchmark::DoNotOptimize(hf);
  }
}
BENCHMARK(BM_HilbertValues);

void BM_FreeResolution(benchmark::State& state) {
  Ideal p = toric_ideal(NumericalSemigroup({3, 4, 5}), Field::rationals());
  for (auto _ : state) {
    FreeRes res = free_resolution(p);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_FreeResolution);

void BM_SymbolicSquare(benchmark::State& state) {
  Ideal p = toric_ideal(NumericalSemigroup({3, 4, 5}), Field::rationals());
  for (auto _ : state) {
    Ideal s = symbolic_square(p);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_SymbolicSquare);

}  // namespace

BENCHMARK_MAIN();

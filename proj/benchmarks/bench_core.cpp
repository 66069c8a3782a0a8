#include "affgrass/harness.hpp"
#include "affgrass/puiseux.hpp"
#include "iwasawa_support.hpp"

#include <benchmark/benchmark.h>

using namespace affgrass;
using namespace affgrass::test;

namespace {

std::vector<MatrixF> random_reps(int n, int count, std::uint64_t seed) {
  Gen g(seed);
  std::vector<MatrixF> out;
  for (int k = 0; k < count; ++k)
    out.push_back(g.point_rep(n) * g.gl_O(n));
  return out;
}

void BM_Canonicalize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto reps = random_reps(n, 64, 1);
  std::size_t k = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(canonicalize(reps[k++ % reps.size()]));
}
BENCHMARK(BM_Canonicalize)->DenseRange(2, 5);

void BM_RetractBorel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto reps = random_reps(n, 64, 2);
  const ParabolicDatum B = BorelDatum::standard(n).parabolic();
  std::size_t k = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(retract(reps[k++ % reps.size()], B));
}
BENCHMARK(BM_RetractBorel)->DenseRange(2, 5);

void BM_AllNPairs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto reps = random_reps(n, 16, 3);
  const auto pairs = adjacent_pairs(LeviDatum::torus(n));
  std::size_t k = 0;
  for (auto _ : state) {
    long s = 0;
    for (const auto& [P, P2] : pairs)
      s += n_pair(reps[k % reps.size()], P, P2);
    ++k;
    benchmark::DoNotOptimize(s);
  }
  state.counters["pairs"] = static_cast<double>(pairs.size());
}
BENCHMARK(BM_AllNPairs)->DenseRange(2, 4)->Unit(benchmark::kMicrosecond);

void BM_Resultant(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Gen g(4);
  std::vector<FieldElem> a, b;
  for (int i = 0; i < d; ++i) {
    a.push_back(g.in_O());
    b.push_back(g.in_O() + eps(1));
  }
  a.emplace_back(1);
  b.emplace_back(1);
  const PolyF p(a), q(b);
  for (auto _ : state)
    benchmark::DoNotOptimize(resultant(p, q));
}
BENCHMARK(BM_Resultant)->DenseRange(1, 4);

void BM_Charpoly(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MatrixF m = random_reps(n, 1, 5).front();
  for (auto _ : state)
    benchmark::DoNotOptimize(charpoly(m));
}
BENCHMARK(BM_Charpoly)->DenseRange(2, 5);

void BM_CertifyPoint(benchmark::State& state) {
  const FiberDatum u(LeviDatum::torus(3), diag({eps(1), eps(1, 2), eps(1, 4)}));
  EnumWindow w;
  w.mu_box.assign(3, {0, 2});
  w.exp_range = {-1, 0};
  w.coeff_set = {Rational(0), Rational(1), Rational(-1)};
  const auto pts = generate_fiber_points(u, BorelDatum::standard(3), w).points;
  std::size_t k = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(certify_point(pts[k++ % pts.size()], u));
}
BENCHMARK(BM_CertifyPoint)->Unit(benchmark::kMicrosecond);

void BM_SweepChart(benchmark::State& state) {
  const FiberDatum u(LeviDatum::torus(3), diag({eps(1), eps(1, 2), eps(1, 4)}));
  EnumWindow w;
  w.mu_box.assign(3, {-1, 1});
  w.exp_range = {-1, 1};
  w.coeff_set = {Rational(0), Rational(1), Rational(-1)};
  std::size_t candidates = 0;
  for (auto _ : state) {
    const FiberSample s = generate_fiber_points(u, BorelDatum::standard(3), w);
    candidates = s.candidates;
    benchmark::DoNotOptimize(s.points.data());
  }
  state.counters["candidates/s"] =
      benchmark::Counter(static_cast<double>(candidates), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_SweepChart)->Unit(benchmark::kMillisecond);

void BM_PuiseuxOracle(benchmark::State& state) {
  const FiberDatum u(contiguous_levi({2, 2}),
                     block_diag({companion(monic({-eps(1), FieldElem(0)})),
                                 companion(monic({-eps(1, 4), FieldElem(0)}))}));
  const auto pairs = adjacent_pairs(u.levi());
  for (auto _ : state)
    benchmark::DoNotOptimize(puiseux_oracle_n_u(u, pairs[0].first, pairs[0].second));
}
BENCHMARK(BM_PuiseuxOracle)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();

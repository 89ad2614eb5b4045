#include <benchmark/benchmark.h>

#include <cmath>

#include "meridian/expression.hpp"
#include "meridian/families.hpp"
#include "meridian/invariants.hpp"
#include "meridian/ode.hpp"
#include "meridian/oracle.hpp"

using namespace meridian;

namespace {

MeridianSurface reference() {
  return MeridianSurface(ProfileCurve(Expression::parse("sqrt(u+1)"), {0.0, 3.0}, -2.0 / 3.0),
                         Directrix(Expression::parse("1+0.2*cos(v)"), {0.0, 6.283185307179586}));
}

}  // namespace

static void BM_ExpressionJet(benchmark::State& state) {
  const auto e = Expression::parse("1.3+0.8*u-0.14*u^2+exp(0.5*u)*sin(u)");
  double t = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(e->jet(t));
    t += 1e-9;
  }
}
BENCHMARK(BM_ExpressionJet);

static void BM_EightInvariants(benchmark::State& state) {
  const MeridianSurface s = reference();
  for (auto _ : state) benchmark::DoNotOptimize(eight_invariants(s, 1.2, 0.7));
}
BENCHMARK(BM_EightInvariants);

static void BM_OracleInvariants(benchmark::State& state) {
  const MeridianSurface s = reference();
  for (auto _ : state) benchmark::DoNotOptimize(oracle_invariants(s, 1.2, 0.7));
}
BENCHMARK(BM_OracleInvariants);

// embed integrates g' from the profile origin out to u.
static void BM_EmbedFarFromOrigin(benchmark::State& state) {
  const MeridianSurface s = reference();
  for (auto _ : state) benchmark::DoNotOptimize(embed(s, 2.9, 0.7));
}
BENCHMARK(BM_EmbedFarFromOrigin);

static void BM_GenerateConstantMean(benchmark::State& state) {
  const DirectrixSolution d = constant_kappa_directrix(2.0, {0.0, 1.0});
  const FamilySpec spec = ConstantMean{0.5, 2.0, 0.0, Sign::Plus, Sign::Plus};
  for (auto _ : state) benchmark::DoNotOptimize(generate(spec, 1.0, {0.0, 1.0}, d.directrix));
}
BENCHMARK(BM_GenerateConstantMean)->Unit(benchmark::kMillisecond);

static void BM_ConstantKappaDirectrix(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(constant_kappa_directrix(1.0, {0.0, 3.0}));
}
BENCHMARK(BM_ConstantKappaDirectrix)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();

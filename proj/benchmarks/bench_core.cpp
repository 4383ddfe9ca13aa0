#include <benchmark/benchmark.h>

#include "dfm/dressing.hpp"
#include "dfm/gauge.hpp"
#include "dfm/jets.hpp"
#include "dfm/reduction.hpp"

using namespace dfm;

namespace {

const GroupSpec& ew() { return GroupSpec::get(GroupId::SU2xU1); }

LatticeField doublet(const Lattice& lat) {
  LatticeField phi = random_smooth_field(lat, ew(), FieldKind::ScalarDoublet, 2, 1, 0.4);
  for (std::size_t s = 0; s < phi.site_count(); ++s) phi.site(s)[1] += 1.0;
  return phi;
}

}  // namespace

static void BM_ExpLog(benchmark::State& state) {
  const GroupSpec& spec = GroupSpec::get(static_cast<GroupId>(state.range(0)));
  Rng rng(1);
  const AlgebraVector x = random_algebra(spec, rng);
  for (auto _ : state) benchmark::DoNotOptimize(log_map(exp_map(x)));
}
BENCHMARK(BM_ExpLog)
    ->Arg(static_cast<int>(GroupId::U1))
    ->Arg(static_cast<int>(GroupId::SU2))
    ->Arg(static_cast<int>(GroupId::SU2xU1))
    ->Arg(static_cast<int>(GroupId::AffinePlus));

static void BM_Curvature(benchmark::State& state) {
  const Lattice lat = Lattice::cubic(2, static_cast<int>(state.range(0)));
  const LatticeField A = random_smooth_field(lat, ew(), FieldKind::AlgebraOneForm, 1, 1, 0.6);
  for (auto _ : state) benchmark::DoNotOptimize(curvature(A));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(lat.site_count()));
}
BENCHMARK(BM_Curvature)->Arg(16)->Arg(32)->Arg(64);

static void BM_GaugeTransform(benchmark::State& state) {
  const Lattice lat = Lattice::cubic(2, static_cast<int>(state.range(0)));
  const LatticeField A = random_smooth_field(lat, ew(), FieldKind::AlgebraOneForm, 1, 1, 0.6);
  const LatticeField f = random_smooth_field(lat, ew(), FieldKind::GroupValued, 3, 1, 0.8);
  for (auto _ : state) benchmark::DoNotOptimize(gauge_transform_connection(A, f));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(lat.site_count()));
}
BENCHMARK(BM_GaugeTransform)->Arg(16)->Arg(32)->Arg(64);

static void BM_DressAndReduce(benchmark::State& state) {
  const Lattice lat = Lattice::cubic(2, static_cast<int>(state.range(0)));
  const LatticeField A = random_smooth_field(lat, ew(), FieldKind::AlgebraOneForm, 1, 1, 0.6);
  const LatticeField phi = doublet(lat);
  for (auto _ : state) {
    const DressingField u = dressing_from_scalar(phi);
    benchmark::DoNotOptimize(zeta(ConfigPair::from_connection(A), u));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(lat.site_count()));
}
BENCHMARK(BM_DressAndReduce)->Arg(16)->Arg(32)->Arg(64);

static void BM_JetSplitting(benchmark::State& state) {
  Rng rng(4);
  const JetSample jet = random_jet(ew(), 4, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pr1(jet));
    benchmark::DoNotOptimize(pr2(jet));
  }
}
BENCHMARK(BM_JetSplitting);
BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <memory>

#include "catcore/centers.hpp"
#include "catcore/equivariant.hpp"
#include "catcore/strictify.hpp"

using namespace catcore;

namespace {

FinGroup group_at(int i) {
  switch (i) {
    case 0: return cyclic_group(2);
    case 1: return cyclic_group(4);
    case 2: return klein_four();
    default: return symmetric_group3();
  }
}

Fin2CatPtr sigma(const FinGroup& g) { return std::make_shared<const Fin2Cat>(delooping(g)); }

ActionPtr inv_c4() {
  const FinGroup c4 = cyclic_group(4);
  return std::make_shared<const GroupAction2>(inversion_action(sigma(c4), c4));
}

ActionPtr trivial_on(const FinGroup& g, const FinGroup& k) {
  return std::make_shared<const GroupAction2>(trivial_action(g, sigma(k)));
}

}  // namespace

static void BM_Validate2Category(benchmark::State& st) {
  const Fin2Cat b = delooping(group_at(static_cast<int>(st.range(0))));
  for (auto _ : st) benchmark::DoNotOptimize(validate_2category(b));
}
BENCHMARK(BM_Validate2Category)->DenseRange(0, 3);

static void BM_RelativeCenter(benchmark::State& st) {
  auto id = std::make_shared<const PseudoFunctor>(identity_pseudofunctor(sigma(group_at(static_cast<int>(st.range(0))))));
  for (auto _ : st) benchmark::DoNotOptimize(relative_center(id));
}
BENCHMARK(BM_RelativeCenter)->DenseRange(0, 3);

static void BM_EnumerateBG(benchmark::State& st) {
  const ActionPtr a = st.range(0) == 0 ? inv_c4() : trivial_on(klein_four(), cyclic_group(2));
  StrictifyCaps caps;
  caps.search.jobs = static_cast<int>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_BG(a, caps));
}
BENCHMARK(BM_EnumerateBG)->ArgsProduct({{0, 1}, {1, 2}})->Unit(benchmark::kMillisecond);

static void BM_EnumerateEquivariant(benchmark::State& st) {
  const ActionPtr a = st.range(0) == 0 ? inv_c4() : trivial_on(cyclic_group(3), symmetric_group3());
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_equivariant(a));
}
BENCHMARK(BM_EnumerateEquivariant)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

static void BM_BuildZG(benchmark::State& st) {
  const ActionPtr a = inv_c4();
  for (auto _ : st) benchmark::DoNotOptimize(build_ZG(a));
}
BENCHMARK(BM_BuildZG)->Unit(benchmark::kMillisecond);

static void BM_GCrossedAxioms(benchmark::State& st) {
  const GCrossedCat z = build_ZG(trivial_on(cyclic_group(2), cyclic_group(4)));
  for (auto _ : st) benchmark::DoNotOptimize(check_g_crossed_axioms(z));
}
BENCHMARK(BM_GCrossedAxioms)->Unit(benchmark::kMillisecond);

static void BM_CenterTheorem(benchmark::State& st) {
  const ActionPtr a = st.range(0) == 0 ? trivial_on(cyclic_group(2), cyclic_group(2)) : inv_c4();
  for (auto _ : st) benchmark::DoNotOptimize(check_center_theorem(a));
}
BENCHMARK(BM_CenterTheorem)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();

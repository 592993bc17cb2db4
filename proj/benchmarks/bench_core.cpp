#include <benchmark/benchmark.h>

#include "uclab/contact.hpp"
#include "uclab/simplicial.hpp"
#include "uclab/stacksys.hpp"
#include "uclab/topology.hpp"

using namespace uclab;

namespace {

BooleanAlgebra letters(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, 'a' + i));
  return BooleanAlgebra(names);
}

void BM_EnumerateStacks(benchmark::State& state) {
  const auto b = letters(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_stacks(b));
  }
}
BENCHMARK(BM_EnumerateStacks)->Arg(3)->Arg(4);

void BM_EnumerateComplexes(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_complexes(n));
  }
}
BENCHMARK(BM_EnumerateComplexes)->Arg(3)->Arg(4)->Arg(5);

void BM_EnumerateUcs(benchmark::State& state) {
  const auto b = letters(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_uc(b, [&](const Ultracontact&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateUcs)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_UcAxiomCheck_KminB4(benchmark::State& state) {
  const auto b = letters(4);
  const auto members = kmin(b).explicit_members();
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_uc_axioms(members));
  }
}
BENCHMARK(BM_UcAxiomCheck_KminB4)->Unit(benchmark::kMillisecond);

void BM_UcMeetSigma_B3(benchmark::State& state) {
  const auto b = letters(3);
  const auto k1 = extend_by_atoms(kmin(b), Family::from_masks(b, {1, 2}));
  const auto k2 = extend_by_atoms(kmin(b), Family::from_masks(b, {1, 4}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(uc_meet({k1, k2}));
  }
}
BENCHMARK(BM_UcMeetSigma_B3);

void BM_MeetOracle_B3(benchmark::State& state) {
  const auto b = letters(3);
  const auto k1 = extend_by_atoms(kmin(b), Family::from_masks(b, {1, 2}));
  const auto k2 = extend_by_atoms(kmin(b), Family::from_masks(b, {1, 4}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(meet_oracle({k1, k2}));
  }
}
BENCHMARK(BM_MeetOracle_B3);

void BM_DeriveContact_B4(benchmark::State& state) {
  const auto b = letters(4);
  const auto k = extend_by_atoms(kmin(b), Family::from_masks(b, {1, 2}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(derive_contact(k));
  }
}
BENCHMARK(BM_DeriveContact_B4);

void BM_HypercontactCheck_KmaxB4(benchmark::State& state) {
  const auto b = letters(4);
  const auto d = derive_hypercontact(kmax(b));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_hypercontact_axioms(d));
  }
}
BENCHMARK(BM_HypercontactCheck_KmaxB4)->Unit(benchmark::kMillisecond);

void BM_RcAlgebra(benchmark::State& state) {
  const auto space = make_space({"l", "m", "r"},
                                {0b000, 0b001, 0b100, 0b101, 0b111});
  for (auto _ : state) {
    benchmark::DoNotOptimize(intersection_uc(space));
  }
}
BENCHMARK(BM_RcAlgebra);

}  // namespace

BENCHMARK_MAIN();

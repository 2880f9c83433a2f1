#include <benchmark/benchmark.h>

#include "tat/forward.hpp"
#include "tat/kernels.hpp"
#include "tat/recon.hpp"

namespace {

const tat::AttenuationLaw law = tat::AttenuationLaw::causal_tied(1.5, 0.01);

void BM_MMatrix(benchmark::State& st) {
  tat::BuildOptions opt;
  opt.parallel = st.range(1) != 0;
  const tat::TimeGrid g(static_cast<int>(st.range(0)), 2.0 / st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(tat::m_matrix(law, g, opt).values.data());
}
BENCHMARK(BM_MMatrix)->ArgsProduct({{512, 1024}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Backprojection(benchmark::State& st) {
  tat::Phantom ph{{{tat::Vec3(0.1, -0.05, 0.08), 0.25, 1.0}}};
  const tat::TimeGrid g(1024, 2.0 / 1024);
  const auto rule = tat::lebedev(110);
  std::vector<tat::Signal> proj;
  for (const auto& d : rule.directions) proj.push_back({"", "", g, tat::sample_spherical(ph, d, g)});
  tat::BackprojectionOptions opt;
  opt.parallel = st.range(0) != 0;
  for (auto _ : st) benchmark::DoNotOptimize(tat::spherical_backprojection(rule, proj, 0.4, 32, opt).values.data());
}
BENCHMARK(BM_Backprojection)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Green(benchmark::State& st) {
  tat::Phantom ph{{{tat::Vec3(0.0, 0.0, 0.0), 0.05, 1.0}}};
  const tat::TimeGrid g(1024, 2.0 / 1024);
  tat::GreenOptions opt;
  opt.max_nodes = 2000;
  opt.parallel = st.range(0) != 0;
  for (auto _ : st)
    benchmark::DoNotOptimize(tat::green_forward(ph, law, tat::Vec3(0.48, 0.6, 0.64), g, opt).data.values.data());
}
BENCHMARK(BM_Green)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

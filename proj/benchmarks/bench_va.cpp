#include <benchmark/benchmark.h>

#include "va/apolar.hpp"
#include "va/parse.hpp"
#include "va/singlocus.hpp"
#include "va/veronese.hpp"

namespace {

const char* const kForms[] = {
    "x^3 + y^3 + z^3",
    "x*y*z + x^3 + y^3",
    "x*y*z^2 + x^4 + y^4 + x^3*z",
    "x*y*z^3 + x^5 + y^5 + x^4*z",
    "x^4 + y^4 + z^4 + 4*x*y*z*(x + y + z)",
    "x*y*z^4 + x^6 + y^6",
};

va::Polynomial form(const benchmark::State& state) { return va::parse_poly(kForms[state.range(0)], 3); }

void BM_JacobianBasis(benchmark::State& state) {
  const auto grad = va::gradient(form(state));
  for (auto _ : state) benchmark::DoNotOptimize(va::buchberger(std::span<const va::Polynomial>(grad)));
  state.SetLabel(kForms[state.range(0)]);
}
BENCHMARK(BM_JacobianBasis)->DenseRange(0, 5);

void BM_CheckVA(benchmark::State& state) {
  const auto f = form(state);
  va::CheckOptions o;
  o.seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(va::check_va(f, o));
  state.SetLabel(kForms[state.range(0)]);
}
BENCHMARK(BM_CheckVA)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_Saturation(benchmark::State& state) {
  const auto grad = va::gradient(va::parse_poly("x*y*z^2 + x^4 + y^4 + x^3*z", 3));
  for (auto _ : state) {
    if (state.range(0) == 0)
      benchmark::DoNotOptimize(va::saturate_irrelevant(grad));
    else
      benchmark::DoNotOptimize(va::saturate_irrelevant_linear(grad));
  }
  state.SetLabel(state.range(0) == 0 ? "extra variable" : "linear form");
}
BENCHMARK(BM_Saturation)->Arg(0)->Arg(1);

void BM_InverseSystem(benchmark::State& state) {
  const va::JacobianAnalysis a(va::parse_poly("x^4 + y^4 + z^4 + 4*x*y*z*(x + y + z)", 3));
  for (auto _ : state) benchmark::DoNotOptimize(va::inverse_system(a));
}
BENCHMARK(BM_InverseSystem);

void BM_SingularReport(benchmark::State& state) {
  const va::JacobianAnalysis a(va::f0_form(4, 3));
  for (auto _ : state) benchmark::DoNotOptimize(va::singular_report(a));
}
BENCHMARK(BM_SingularReport);

}  // namespace

BENCHMARK_MAIN();

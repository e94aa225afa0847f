#include "awlab/qracah.hpp"
#include "awlab/rank2.hpp"
#include "awlab/uqsl2.hpp"

#include <benchmark/benchmark.h>

using namespace awlab;

namespace {

const QContext kCtx{};
const Alpha3 kRank2Alpha{-1.5, -1.0, 0.25};

template <class T>
void BuildRep(benchmark::State& st) {
  const QFun<T> qf(kCtx);
  const int N = int(st.range(0));
  const auto p = AlphaParams::for_dim(0.25, 0.5, 0.0, N);
  for (auto _ : st) benchmark::DoNotOptimize(build_rep(qf, p, N));
}
BENCHMARK_TEMPLATE(BuildRep, double)->Arg(4)->Arg(8);
BENCHMARK_TEMPLATE(BuildRep, ext)->Arg(4)->Arg(8);

void AwResidual(benchmark::State& st) {
  const QFun<double> qf(kCtx);
  const int N = int(st.range(0));
  const auto p = AlphaParams::for_dim(0.25, 0.5, 0.0, N);
  const auto rep = build_rep(qf, p, N);
  const auto a = a_values(qf, p);
  for (auto _ : st) benchmark::DoNotOptimize(aw_residual(qf, rep.K, rep.L, a).worst());
}
BENCHMARK(AwResidual)->Arg(8);

void OverlapFromRep(benchmark::State& st) {
  const QFun<double> qf(kCtx);
  const int N = int(st.range(0));
  const auto rep = build_rep(qf, AlphaParams::for_dim(0.25, 0.5, 0.0, N), N);
  for (auto _ : st) benchmark::DoNotOptimize(overlap_from_rep(qf, rep));
}
BENCHMARK(OverlapFromRep)->Arg(4)->Arg(8);

void CoproductTable(benchmark::State& st) {
  const QFun<double> qf(kCtx);
  const int n = int(st.range(0));
  const auto c = TwistCoeffs<double>::canonical(qf, 0.3, 0.2, 0.1, 1.3);
  const auto r1 = build_irrep(qf, n), r2 = build_irrep(qf, n);
  for (auto _ : st) {
    const auto g = build_tensor(qf, r1, r2, c);
    double w = 0;
    for (const auto& row : coproduct_table_rows(qf, g, c)) w = std::max(w, row_residual(qf, row));
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(CoproductTable)->Arg(3)->Arg(5);

void BuildAw2(benchmark::State& st) {
  const QFun<double> qf(kCtx);
  const int n = int(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(build_aw2(qf, n, n, kRank2Alpha));
}
BENCHMARK(BuildAw2)->Arg(3)->Arg(6);

void VerifyAw2(benchmark::State& st) {
  const QFun<double> qf(kCtx);
  const int n = int(st.range(0));
  const auto rep = build_aw2(qf, n, n, kRank2Alpha);
  for (auto _ : st) benchmark::DoNotOptimize(verify_aw2_relations(qf, rep).worst());
}
BENCHMARK(VerifyAw2)->Arg(3)->Arg(6);

void BivariateOverlaps(benchmark::State& st) {
  const QFun<double> qf(kCtx);
  const int n = int(st.range(0));
  const auto rep = build_aw2(qf, n, n, kRank2Alpha);
  for (auto _ : st) benchmark::DoNotOptimize(bivariate_overlaps(qf, rep));
}
BENCHMARK(BivariateOverlaps)->Arg(2)->Arg(3);

}  // namespace
BENCHMARK_MAIN();

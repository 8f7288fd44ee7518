#include <benchmark/benchmark.h>

#include "hwgraph/graph.hpp"
#include "hwgraph/kernels.hpp"
#include "hwgraph/covariant.hpp"

using namespace hwg;

namespace {

Matrix dense(std::size_t d) { return random_hermitian(d, 42); }

void BM_Gemm(benchmark::State& st) {
  const Matrix a = dense(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::multiply(a, a));
}
void BM_GemmReference(benchmark::State& st) {
  const Matrix a = dense(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::multiply_reference(a, a));
}

void BM_Conjugate(benchmark::State& st) {
  const WeylRepresentation rep(static_cast<int>(st.range(0)));
  const Matrix u = rep.element({1, 1, 0});
  const Matrix x = dense(rep.dim());
  for (auto _ : st) benchmark::DoNotOptimize(kernels::conjugate(u, x));
}
void BM_ConjugateReference(benchmark::State& st) {
  const WeylRepresentation rep(static_cast<int>(st.range(0)));
  const Matrix u = rep.element({1, 1, 0});
  const Matrix x = dense(rep.dim());
  for (auto _ : st) benchmark::DoNotOptimize(kernels::conjugate_reference(u, x));
}

std::vector<Matrix> orbit(int n) {
  std::vector<Matrix> ops;
  for (auto& g : orbit_generators(WeylRepresentation(n), q_projection(n, 0))) ops.push_back(std::move(g.op));
  return ops;
}

void BM_Gram(benchmark::State& st) {
  const auto ops = orbit(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::gram(ops));
}
void BM_GramReference(benchmark::State& st) {
  const auto ops = orbit(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::gram_reference(ops));
}

void BM_KnillLaflamme(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const WeylRepresentation rep(n);
  const auto gens = orbit_generators(rep, q_projection(n, 0));
  const Matrix p = anticlique_projector(rep.basis(), 0);
  for (auto _ : st) benchmark::DoNotOptimize(check_knill_laflamme(gens, p, 1e-10));
}
void BM_KnillLaflammeReference(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  const WeylRepresentation rep(n);
  const auto gens = orbit_generators(rep, q_projection(n, 0));
  const Matrix p = anticlique_projector(rep.basis(), 0);
  for (auto _ : st) benchmark::DoNotOptimize(check_knill_laflamme_reference(gens, p, 1e-10));
}

}  // namespace

BENCHMARK(BM_Gemm)->Arg(64)->Arg(144);
BENCHMARK(BM_GemmReference)->Arg(64)->Arg(144);
BENCHMARK(BM_Conjugate)->Arg(8)->Arg(12);
BENCHMARK(BM_ConjugateReference)->Arg(8)->Arg(12);
BENCHMARK(BM_Gram)->Arg(6)->Arg(10);
BENCHMARK(BM_GramReference)->Arg(6)->Arg(10);
BENCHMARK(BM_KnillLaflamme)->Arg(6)->Arg(8);
BENCHMARK(BM_KnillLaflammeReference)->Arg(6)->Arg(8);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <random>

#include "quiverlab/census.hpp"
#include "quiverlab/homology.hpp"
#include "quiverlab/kron.hpp"

using namespace quiverlab;

namespace {

Mat<PrimeField> random_mat(const PrimeField& f, int rows, int cols, std::mt19937& rng) {
  Mat<PrimeField> m(rows, cols);
  for (auto& e : m.a) e = rng() % f.modulus();
  return m;
}

void BM_reduce(benchmark::State& state) {
  const PrimeField f(1000003);
  std::mt19937 rng(7);
  const int n = static_cast<int>(state.range(0));
  const auto m = random_mat(f, n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(reduce(f, m));
  state.SetComplexityN(n);
}
BENCHMARK(BM_reduce)->Arg(16)->Arg(64)->Arg(128)->Complexity();

void BM_hom_basis(benchmark::State& state) {
  const PrimeField f(5);
  auto alg = example_algebra_one(static_cast<int>(state.range(0)));
  const auto P = projective_rep(alg, f, alg->quiver.vertices.back());
  for (auto _ : state) benchmark::DoNotOptimize(hom_basis(P, P));
}
BENCHMARK(BM_hom_basis)->Arg(4)->Arg(8)->Arg(12);

void BM_resolution(benchmark::State& state) {
  const PrimeField f(5);
  auto alg = example_algebra_one(static_cast<int>(state.range(0)));
  const auto S = simple_rep(alg, f, alg->quiver.vertices.back());
  for (auto _ : state) benchmark::DoNotOptimize(min_resolution(S));
}
BENCHMARK(BM_resolution)->Arg(4)->Arg(8)->Arg(12);

void BM_census(benchmark::State& state) {
  auto alg = example_algebra_one(3);
  const PrimeField f(2);
  const int b = static_cast<int>(state.range(0));
  const std::vector<int> bounds(3, b);
  for (auto _ : state) benchmark::DoNotOptimize(brick_census(alg, f, bounds));
}
BENCHMARK(BM_census)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_decompose_regular(benchmark::State& state) {
  auto alg = example_algebra_two();
  const PrimeField f(7);
  std::mt19937 rng(11);
  std::vector<Representation<PrimeField>> parts;
  for (std::uint64_t v : {0u, 2u, 5u}) parts.push_back(
      simple_regular(alg, f, ProjPoint<PrimeField>::finite(v)));
  parts.push_back(simple_regular(alg, f, ProjPoint<PrimeField>::at_infinity()));
  auto M = direct_sum(parts);
  // conjugate by a random basis at each vertex so the block structure is hidden
  // and the pencil probe does real work
  std::vector<Mat<PrimeField>> P, Pinv;
  for (int dv : M.dims) {
    Mat<PrimeField> g(dv, dv);
    do {
      for (auto& e : g.a) e = rng() % f.modulus();
    } while (!is_invertible(f, g));
    P.push_back(g);
    Pinv.push_back(inverse(f, g));
  }
  const auto& q = M.alg->quiver;
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    const int s = q.vertex_index(q.arrows[a].source);
    const int t = q.vertex_index(q.arrows[a].target);
    M.mats[a] = mat_mul(f, P[t], mat_mul(f, M.mats[a], Pinv[s]));
  }
  for (auto _ : state) benchmark::DoNotOptimize(decompose_regular(M));
}
BENCHMARK(BM_decompose_regular);

}  // namespace

BENCHMARK_MAIN();

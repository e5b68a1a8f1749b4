#include <benchmark/benchmark.h>

#include "mrt/exact/cyclotomic.hpp"
#include "mrt/gf/matrix.hpp"
#include "mrt/mtx/meataxe.hpp"
#include "mrt/perm/group.hpp"
#include "mrt/util/prng.hpp"

using namespace mrt;
using gf::Field;
using gf::Matrix;

namespace {

Matrix random_matrix(const Field& f, std::size_t n, std::uint64_t seed) {
  Prng rng(seed);
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, gf::Fel(rng.below(f.size())));
  return m;
}

void bm_mat_mul(benchmark::State& state, unsigned p) {
  Field f = Field::prime(p);
  std::size_t n = std::size_t(state.range(0));
  Matrix a = random_matrix(f, n, 1), b = random_matrix(f, n, 2);
  for (auto _ : state) {
    Matrix c = a * b;
    benchmark::DoNotOptimize(c);
  }
  state.SetItemsProcessed(state.iterations() * n * n * n);
}

void bm_mat_mul_generic(benchmark::State& state) {
  Field f = Field::prime(251);
  std::size_t n = std::size_t(state.range(0));
  Matrix a = random_matrix(f, n, 1), b = random_matrix(f, n, 2);
  for (auto _ : state) {
    Matrix c = a.mul_generic(b);
    benchmark::DoNotOptimize(c);
  }
  state.SetItemsProcessed(state.iterations() * n * n * n);
}

void bm_rref(benchmark::State& state) {
  Field f = Field::prime(7);
  std::size_t n = std::size_t(state.range(0));
  Matrix a = random_matrix(f, n, 3);
  for (auto _ : state) {
    auto e = a.rref();
    benchmark::DoNotOptimize(e.rank);
  }
}

void bm_chop_s5_regular_block(benchmark::State& state) {
  perm::Group s5(5, {perm::Perm::from_cycles(5, {{0, 1}}),
                     perm::Perm::from_cycles(5, {{0, 1, 2, 3, 4}})});
  Field f = Field::prime(3);
  mtx::Module nat = mtx::permutation_module(f, s5.generators());
  mtx::Module m = nat.tensor(nat);
  for (auto _ : state) {
    auto cs = mtx::chop(m, 42);
    benchmark::DoNotOptimize(cs.factors.size());
  }
}

void bm_cyclotomic_mul(benchmark::State& state) {
  using exact::Cyclotomic;
  Prng rng(5);
  std::uint64_t n = std::uint64_t(state.range(0));
  Cyclotomic a, b;
  for (int i = 0; i < 4; ++i) {
    a += Cyclotomic(static_cast<long long>(rng.below(9)) - 4) * Cyclotomic::root_of_unity(n, rng.below(n));
    b += Cyclotomic(static_cast<long long>(rng.below(9)) - 4) * Cyclotomic::root_of_unity(n, rng.below(n));
  }
  for (auto _ : state) {
    Cyclotomic c = a * b;
    benchmark::DoNotOptimize(c.conductor());
  }
}

}  // namespace

BENCHMARK_CAPTURE(bm_mat_mul, f2, 2u)->Arg(256)->Arg(1024)->Arg(2048);
BENCHMARK_CAPTURE(bm_mat_mul, f3, 3u)->Arg(256)->Arg(1024)->Arg(2048);
BENCHMARK_CAPTURE(bm_mat_mul, f251, 251u)->Arg(256)->Arg(512);
BENCHMARK(bm_mat_mul_generic)->Arg(256);
BENCHMARK(bm_rref)->Arg(128)->Arg(512);
BENCHMARK(bm_chop_s5_regular_block);
BENCHMARK(bm_cyclotomic_mul)->Arg(12)->Arg(60)->Arg(168);

BENCHMARK_MAIN();

// Micro-benchmarks for the hot paths: exact linear algebra, envelope
// construction and axiom verification, the deformed product, and the
// coderivation solver. Not part of the test suite; run manually.

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "rackbi/defcohom.hpp"
#include "rackbi/leibniz.hpp"
#include "rackbi/matrix.hpp"
#include "rackbi/rack_bialgebra.hpp"
#include "rackbi/starprod.hpp"
#include "rackbi/uar.hpp"

using namespace rackbi;

namespace {

ExactMatrix random_matrix(int rows, int cols, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  ExactMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if ((r + c) % 3 == 0) continue;  // keep the matrix sparse-ish
      const Rational v = ratio(num(rng), den(rng));
      m.set(r, c, v);
    }
  return m;
}

void BM_kernel_basis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ExactMatrix m = random_matrix(n, n + 4, 7);
  for (auto _ : state) {
    const auto basis = kernel_basis(m);
    benchmark::DoNotOptimize(basis);
  }
}
BENCHMARK(BM_kernel_basis)->Arg(8)->Arg(16)->Arg(32);

void BM_uar_construction(benchmark::State& state) {
  const LeibnizAlgebra h = catalog("heisenberg");
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const Uar a = uar_canonical(h, k);
    benchmark::DoNotOptimize(a.b.dim);
  }
}
BENCHMARK(BM_uar_construction)->Arg(1)->Arg(2)->Arg(3);

void BM_rack_axioms(benchmark::State& state) {
  const Uar a = uar_canonical(catalog("heisenberg"),
                              static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const auto reports = verify_rack_axioms(a.b);
    benchmark::DoNotOptimize(reports.size());
  }
}
BENCHMARK(BM_rack_axioms)->Arg(1)->Arg(2);

void BM_star_product(benchmark::State& state) {
  const LeibnizAlgebra h = catalog("sl2");
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coeff(-3, 3);
  PolyFun<Rational> f = pf_zero<Rational>(h.dim);
  PolyFun<Rational> g = pf_zero<Rational>(h.dim);
  const int deg = static_cast<int>(state.range(0));
  std::uniform_int_distribution<int> slot(0, h.dim - 1);
  for (int t = 0; t < 4; ++t) {
    std::vector<int> e(h.dim, 0), e2(h.dim, 0);
    for (int s = 0; s < deg; ++s) ++e[slot(rng)];
    for (int s = 0; s < deg; ++s) ++e2[slot(rng)];
    const Rational cf(coeff(rng));
    const Rational cg(coeff(rng));
    detail::pf_acc(f, e, cf);
    detail::pf_acc(g, e2, cg);
  }
  for (auto _ : state) {
    const PolyFun<HPoly> s = star(h, f, g);
    benchmark::DoNotOptimize(s.terms.size());
  }
}
BENCHMARK(BM_star_product)->Arg(2)->Arg(3)->Arg(4);

void BM_coderivation_space(benchmark::State& state) {
  const Bialg<Rational> r =
      uar_canonical(catalog("sq2"), static_cast<int>(state.range(0))).b;
  for (auto _ : state) {
    const auto basis = coderivation_space(r, 2);
    benchmark::DoNotOptimize(basis.size());
  }
}
BENCHMARK(BM_coderivation_space)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();

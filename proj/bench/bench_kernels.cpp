// Serial vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "mbetti/parallel.hpp"

using namespace mbetti;

namespace {

LaurentPoly dense_poly(std::mt19937_64& rng, std::size_t n, std::size_t terms, int hi) {
  std::uniform_int_distribution<int> ex(0, hi), co(-9, 9);
  std::vector<Term> ts;
  for (std::size_t k = 0; k < terms; ++k) {
    Exponent e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = ex(rng);
    ts.push_back({e, Rational(co(rng))});
  }
  return LaurentPoly::from_terms(n, std::move(ts));
}

std::vector<Partition> partitions(std::size_t n, int max_part) {
  std::vector<Partition> out;
  std::vector<int> p(n, 0);
  for (;;) {
    out.emplace_back(p);
    std::size_t k = n;
    // Next weakly decreasing tuple in reverse lex order.
    while (k-- > 0) {
      const int cap = k == 0 ? max_part : p[k - 1];
      if (p[k] < cap) {
        ++p[k];
        for (std::size_t j = k + 1; j < n; ++j) p[j] = 0;
        break;
      }
      if (k == 0) return out;
    }
  }
}

std::vector<BettiTuple> members(const DifferenceVector& e, std::size_t count) {
  std::mt19937_64 rng(5);
  const auto s = canonical_generator(e);
  std::vector<BettiTuple> out;
  for (std::size_t k = 0; k < count; ++k) {
    auto p = dense_poly(rng, e.size(), 4, 3);
    // Keep only degree-3 terms so p stays homogeneous.
    std::vector<Term> ts;
    for (const auto& t : p.terms())
      if (t.exp.total() == 3) ts.push_back(t);
    if (ts.empty()) ts.push_back({Exponent{3, 0, 0}, Rational(1)});
    out.push_back(LaurentPoly::from_terms(e.size(), std::move(ts)) * s);
  }
  return out;
}

template <auto Fn>
void BM_multiply(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto terms = static_cast<std::size_t>(state.range(0));
  const auto a = dense_poly(rng, 3, terms, 40);
  const auto b = dense_poly(rng, 3, terms, 40);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(a, b));
  state.counters["threads"] = par::max_threads();
}

template <auto Fn>
void BM_schur_family(benchmark::State& state) {
  const auto lambdas = partitions(4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(lambdas, 4));
  state.counters["partitions"] = static_cast<double>(lambdas.size());
}

template <auto Fn>
void BM_membership(benchmark::State& state) {
  const DifferenceVector e({2, 1, 3});
  const auto tuples = members(e, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(tuples, e));
}

template <auto Fn>
void BM_check_hk(benchmark::State& state) {
  const auto tuples = members(DifferenceVector({2, 1, 3}), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(tuples));
}

}  // namespace

BENCHMARK(BM_multiply<par::multiply_serial>)->Name("multiply/serial")->Arg(100)->Arg(400)->Arg(1600);
BENCHMARK(BM_multiply<par::multiply>)->Name("multiply/omp")->Arg(100)->Arg(400)->Arg(1600);
BENCHMARK(BM_multiply<par::multiply_naive>)->Name("multiply/naive")->Arg(100)->Arg(400);
BENCHMARK(BM_schur_family<par::schur_family_serial>)->Name("schur_family/serial")->Arg(3)->Arg(5);
BENCHMARK(BM_schur_family<par::schur_family>)->Name("schur_family/omp")->Arg(3)->Arg(5);
BENCHMARK(BM_check_hk<par::check_hk_batch_serial>)->Name("check_hk/serial")->Arg(64);
BENCHMARK(BM_check_hk<par::check_hk_batch>)->Name("check_hk/omp")->Arg(64);
BENCHMARK(BM_membership<par::membership_batch_serial>)->Name("membership/serial")->Arg(32);
BENCHMARK(BM_membership<par::membership_batch>)->Name("membership/omp")->Arg(32);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "sdcalc/bernoulli.hpp"
#include "sdcalc/combinatorics.hpp"
#include "sdcalc/polynomial.hpp"
#include "sdcalc/series.hpp"

using namespace sdcalc;

namespace {

void BM_BernoulliSeries(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const long n_max = state.range(1);
    for (auto _ : state) {
        auto table = bernoulli_numbers_series(d, 1, n_max);
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(BM_BernoulliSeries)->Args({2, 16})->Args({2, 64})->Args({5, 64});

void BM_BernoulliComposition(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        auto value = bernoulli_number_composition(2, 1, n);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_BernoulliComposition)->Arg(8)->Arg(12)->Arg(16);

void BM_HoggattRow(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const long n = state.range(1);
    for (auto _ : state) {
        for (long k = 0; k <= n; ++k) {
            auto v = hoggatt_binomial(d, n, k);
            benchmark::DoNotOptimize(v);
        }
    }
}
BENCHMARK(BM_HoggattRow)->Args({2, 25})->Args({6, 25});

void BM_SeriesInverse(benchmark::State& state) {
    const long order = state.range(0);
    const TruncatedSeries tail = one_sigma_one_tail(3, 1, order);
    for (auto _ : state) {
        auto inv = tail.inverse();
        benchmark::DoNotOptimize(inv);
    }
}
BENCHMARK(BM_SeriesInverse)->Arg(16)->Arg(64)->Arg(128);

void BM_SdDerivative(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const Polynomial p = exp_d_partial_sum(d, state.range(1));
    for (auto _ : state) {
        auto q = sd_derivative_operator_form(p, d);
        benchmark::DoNotOptimize(q);
    }
}
BENCHMARK(BM_SdDerivative)->Args({2, 32})->Args({5, 32});

}  // namespace

BENCHMARK_MAIN();

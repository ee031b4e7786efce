// Microbenchmarks for the coefficient algorithms: the O(N) recurrence, the
// O(N^3) dynamic program, the exponential naive enumerator, and the
// Green-function path. Run with --benchmark_min_time=... for stable numbers.

#include <benchmark/benchmark.h>

#include "heun/closed_form.hpp"
#include "heun/jacobi.hpp"
#include "heun/recurrence.hpp"

using heun::Rational;
using heun::ValentParams;
using heun::WConvention;
using Complex = std::complex<double>;

namespace {

ValentParams<Rational> exact_params() {
    return {Rational(1, 2), Rational(5, 4), Rational(2), Rational(3, 2),
            Rational(-1, 2), Rational(7, 3), WConvention::general};
}

ValentParams<Complex> float_params() {
    ValentParams<Complex> v;
    v.k = Complex(0.5);
    v.alpha = Complex(1.25);
    v.beta = Complex(2.0);
    v.gamma = Complex(1.5);
    v.delta = Complex(-0.5);
    v.w = Complex(7.0 / 3.0);
    return v;
}

void BM_recurrence_exact(benchmark::State& state) {
    const auto v = exact_params();
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto table = heun::recurrence_coefficients_valent(v, order);
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(BM_recurrence_exact)->Arg(16)->Arg(64)->Arg(256);

void BM_recurrence_float(benchmark::State& state) {
    const auto v = float_params();
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto table = heun::recurrence_coefficients_valent(v, order);
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(BM_recurrence_float)->Arg(16)->Arg(64)->Arg(256)->Arg(1024);

void BM_closed_form_dp_exact(benchmark::State& state) {
    const auto v = exact_params();
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto table = heun::closed_form_coefficients(v, order);
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(BM_closed_form_dp_exact)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_closed_form_dp_float(benchmark::State& state) {
    const auto v = float_params();
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto table = heun::closed_form_coefficients(v, order);
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(BM_closed_form_dp_float)->Arg(16)->Arg(64)->Arg(128);

void BM_naive_enumeration(benchmark::State& state) {
    const auto v = exact_params();
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        for (int m = 0; m <= n; ++m)
            benchmark::DoNotOptimize(heun::f_general_naive(v, m, n));
    }
}
BENCHMARK(BM_naive_enumeration)->DenseRange(4, 12, 2);

void BM_green_path(benchmark::State& state) {
    auto v = float_params();
    v.delta = Complex(1.0);
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto table = heun::heun_coefficients_via_green(v, order);
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(BM_green_path)->Arg(16)->Arg(32)->Arg(64);

} // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "uqaw/scalar.hpp"

using namespace uqaw;

static void BM_scalar_laurent_mul(benchmark::State& state) {
    Scalar q = Scalar::q();
    Scalar a = (q - q.inverse()).pow(4) * q.pow(-3);
    Scalar b = (q.pow(2) + Scalar(1) + q.pow(-2)) / (q - q.inverse());
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_scalar_laurent_mul);

static void BM_scalar_laurent_add(benchmark::State& state) {
    Scalar q = Scalar::q();
    Scalar a = (q - q.inverse()).pow(6);
    Scalar b = q.pow(5) - q.pow(-5);
    for (auto _ : state) benchmark::DoNotOptimize(a + b);
}
BENCHMARK(BM_scalar_laurent_add);

static void BM_scalar_symbolic_mul(benchmark::State& state) {
    ParamSet::global().declare("kappa");
    ParamSet::global().declare("lambda");
    Scalar a = param_bracket("kappa", 2) * param_bracket("lambda", -1);
    Scalar b = param_bracket("kappa", -3) + param_bracket("lambda", 1);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_scalar_symbolic_mul);

static void BM_polynomial_gcd(benchmark::State& state) {
    ParamSet::global().declare("lambda");
    Scalar q = Scalar::q();
    Scalar lam = Scalar::variable("lambda");
    Polynomial g = (q.pow(2) * lam + lam - Scalar(1)).num();
    Polynomial a = g * (q.pow(3) - lam).num();
    Polynomial b = g * (lam.pow(2) + q).num();
    for (auto _ : state) benchmark::DoNotOptimize(Polynomial::gcd(a, b));
}
BENCHMARK(BM_polynomial_gcd);

static void BM_q_binomial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(q_binomial(8, 4));
}
BENCHMARK(BM_q_binomial);

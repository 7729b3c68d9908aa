#include <benchmark/benchmark.h>

#include <random>

#include "esing/classify.hpp"
#include "esing/decompose.hpp"
#include "esing/normal_form.hpp"
#include "esing/parse.hpp"
#include "esing/verify.hpp"

namespace {

esing::BinaryForm random_form(std::mt19937_64& gen, unsigned degree) {
    esing::BinaryForm p(degree);
    for (unsigned i = 0; i <= degree; ++i) {
        p.set_coeff(i, esing::Rational(static_cast<long long>(gen() % 19) - 9));
    }
    if (p.is_zero()) p.set_coeff(0, esing::Rational(1));
    return p;
}

void BM_Resultant5x5(benchmark::State& state) {
    std::mt19937_64 gen(1);
    const auto p = random_form(gen, 5);
    const auto q = random_form(gen, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(esing::resultant(p, q));
    }
}
BENCHMARK(BM_Resultant5x5);

void BM_SquarefreeDegree6(benchmark::State& state) {
    std::mt19937_64 gen(2);
    const auto p = random_form(gen, 3) * random_form(gen, 2) * random_form(gen, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(esing::squarefree_decomposition(p));
    }
}
BENCHMARK(BM_SquarefreeDegree6);

void BM_Classify(benchmark::State& state) {
    const auto jet = esing::parse_germ("(x1+x2)^3 + x1^4 - 2*x1^2*x2^2 + x1^5", 8).jet;
    for (auto _ : state) {
        benchmark::DoNotOptimize(esing::classify(jet));
    }
}
BENCHMARK(BM_Classify);

void BM_SubstituteLinear(benchmark::State& state) {
    const unsigned order = static_cast<unsigned>(state.range(0));
    const auto jet = esing::parse_germ("x2^3 + x1^3*x2 + x1^2*x2^2 + x1^6", order).jet;
    const auto map = esing::PolyMap2::linear(
        {esing::Rational(2), esing::Rational(1), esing::Rational(-1), esing::Rational(1)}, order);
    for (auto _ : state) {
        benchmark::DoNotOptimize(esing::substitute(jet, map));
    }
}
BENCHMARK(BM_SubstituteLinear)->Arg(6)->Arg(8)->Arg(12)->Arg(16);

void BM_Decompose(benchmark::State& state) {
    const auto jet = esing::parse_germ("x2^3 + x1^2*x2^2 + x1^3*x2^2 + x1^5", 8).jet;
    const unsigned W = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(esing::decompose(jet, W));
    }
}
BENCHMARK(BM_Decompose)->Arg(8)->Arg(12)->Arg(16);

void BM_VerifyE7(benchmark::State& state) {
    const auto jet = esing::parse_germ("x2^3 + x1^3*x2 + 2*x1^2*x2^2 + x1^6", 8).jet;
    for (auto _ : state) {
        benchmark::DoNotOptimize(esing::verify_normal_form(jet, 10, 0.1, 200, 0));
    }
}
BENCHMARK(BM_VerifyE7);

}  // namespace

BENCHMARK_MAIN();

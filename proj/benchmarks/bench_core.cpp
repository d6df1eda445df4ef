#include <benchmark/benchmark.h>

#include "hasse/jacobian.hpp"
#include "hasse/localpoints.hpp"
#include "hasse/weil.hpp"

using namespace hasse;

namespace {

Poly P(const Fq& F, const std::string& s) { return poly_parse(F, s); }

void BM_poly_mul(benchmark::State& state) {
    Fq F(3);
    Rng rng(1);
    Poly a, b;
    a.c.resize(static_cast<std::size_t>(state.range(0)));
    b.c.resize(static_cast<std::size_t>(state.range(0)));
    for (auto& x : a.c) x = static_cast<FqElem>(rng.below(3));
    for (auto& x : b.c) x = static_cast<FqElem>(rng.below(3));
    a.c.back() = 1;
    b.c.back() = 1;
    for (auto _ : state) benchmark::DoNotOptimize(poly_mul(F, a, b));
}

void BM_legendre(benchmark::State& state) {
    Fq F(3);
    const PrimePoly p(F, P(F, "T^13+2*T+1"));
    const Poly a = P(F, "T^7+2*T^3+T+1");
    for (auto _ : state) benchmark::DoNotOptimize(legendre(F, a, p));
}

void BM_factorize_deg48(benchmark::State& state) {
    Fq F(3);
    Rng rng(7);
    Poly f;
    f.c.resize(49);
    for (auto& x : f.c) x = static_cast<FqElem>(rng.below(3));
    f.c.back() = 1;
    for (auto _ : state) benchmark::DoNotOptimize(factorize(F, f));
}

void BM_cantor_add(benchmark::State& state) {
    Fq F(3);
    const HyperCurve C(F, P(F, "T^13+2*T+1"));
    Rng rng(3);
    const MumfordDivisor a = random_divisor(C, rng);
    const MumfordDivisor b = random_divisor(C, rng);
    for (auto _ : state) benchmark::DoNotOptimize(cantor_add(C, a, b));
}

void BM_count_points_deg6(benchmark::State& state) {
    Fq F(3);
    const HyperCurve C(F, P(F, "T^13+2*T+1"));
    for (auto _ : state) benchmark::DoNotOptimize(count_points(C, 6));
}

void BM_d_set_q3_s2(benchmark::State& state) {
    Fq F(3);
    const PrimePoly y(F, P(F, "T"));
    for (auto _ : state) benchmark::DoNotOptimize(d_set(F, y, 2));
}

void BM_composite_sieve_deg10(benchmark::State& state) {
    Fq F(3);
    for (auto _ : state) benchmark::DoNotOptimize(composite_sieve(F, 10));
}

} // namespace

BENCHMARK(BM_poly_mul)->Arg(16)->Arg(128)->Arg(1024);
BENCHMARK(BM_legendre);
BENCHMARK(BM_factorize_deg48);
BENCHMARK(BM_cantor_add);
BENCHMARK(BM_count_points_deg6);
BENCHMARK(BM_d_set_q3_s2);
BENCHMARK(BM_composite_sieve_deg10);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "szego/partitions.hpp"
#include "szego/polynomial.hpp"
#include "szego/roots.hpp"
#include "szego/text.hpp"
#include "szego/verify.hpp"

using namespace szego;
namespace V = szego::verify;

namespace {

Polynomial negative_ladder(int n, int offset) {
    std::vector<Rational> roots;
    roots.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) roots.emplace_back(-(i + offset));
    return Polynomial::from_roots(roots, n);
}

void BM_schur_szego_n17(benchmark::State& state) {
    const Polynomial p = negative_ladder(17, 1);
    const Polynomial q = negative_ladder(17, 2);
    for (auto _ : state) benchmark::DoNotOptimize(schur_szego(p, q));
}
BENCHMARK(BM_schur_szego_n17);

void BM_multiplicity_structure_deg10(benchmark::State& state) {
    // Mixed multiplicities and an irrational pair: (x^2-2)(x+1)^3(x-3)^2 x^3.
    const Polynomial p = multiply(
        multiply(Polynomial(parse_rational_list("-2,0,1"), 2),
                 pow(Polynomial(parse_rational_list("1,1"), 1), 3)),
        multiply(pow(Polynomial(parse_rational_list("-3,1"), 1), 2),
                 Polynomial(parse_rational_list("0,0,0,1"), 3)));
    for (auto _ : state) benchmark::DoNotOptimize(multiplicity_structure(p));
}
BENCHMARK(BM_multiplicity_structure_deg10);

void BM_compose_partitions_n17(benchmark::State& state) {
    const MultiplicityVector a = parse_multiplicity_vector("2,14,1", 17);
    const MultiplicityVector b = parse_multiplicity_vector("5,6,6", 17);
    for (auto _ : state) benchmark::DoNotOptimize(compose_partitions(a, b));
}
BENCHMARK(BM_compose_partitions_n17);

void BM_star_identity_n12(benchmark::State& state) {
    std::mt19937_64 rng(V::mix_seed(42, V::property_id("star-identity"), 12, 0));
    const V::HeightSchedule heights;
    const V::RealizedInstance inst = V::realize(V::sample_instance_spec(rng, 12, heights));
    for (auto _ : state)
        benchmark::DoNotOptimize(V::check_star_identity(inst.p, inst.q));
}
BENCHMARK(BM_star_identity_n12);

void BM_realize_n10(benchmark::State& state) {
    const V::HeightSchedule heights;
    std::uint64_t trial = 0;
    for (auto _ : state) {
        std::mt19937_64 rng(V::mix_seed(7, 1, 10, trial++));
        benchmark::DoNotOptimize(V::realize(V::sample_instance_spec(rng, 10, heights)));
    }
}
BENCHMARK(BM_realize_n10);

}  // namespace

BENCHMARK_MAIN();

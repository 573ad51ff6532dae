#include <benchmark/benchmark.h>

#include "steiner/jumping.hpp"
#include "steiner/random.hpp"
#include "steiner/schwarzenberger.hpp"
#include "steiner/verify.hpp"

using namespace steiner;

namespace {

void BM_RrefF5(benchmark::State& state) {
    Rng rng(1);
    Matrix m = random_matrix(20, 40, FieldSpec::prime_field(5), rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefF5);

void BM_RrefRationals(benchmark::State& state) {
    Rng rng(1);
    Matrix m = random_matrix(12, 24, FieldSpec::rationals(), rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefRationals);

void BM_ChowChernPower(benchmark::State& state) {
    chow::Grassmannian g(2, 6);
    chow::ChowClass chern = chow::ChowClass::chern_quotient(g);
    for (auto _ : state) {
        chow::ChowClass acc = chow::ChowClass::unit(g);
        for (int i = 0; i < 4; ++i)
            acc = chow::multiply(acc, chern);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_ChowChernPower);

void BM_CheckPkExhaustiveF5(benchmark::State& state) {
    SteinerMap sm = schw::to_steiner(schw::build_triple(schw::RncSpec{2, 3}), ExhaustiveMode{3});
    for (auto _ : state)
        benchmark::DoNotOptimize(check_pk(sm, ExhaustiveMode{5}));
}
BENCHMARK(BM_CheckPkExhaustiveF5);

void BM_SigmaEnumerateVeroneseF7(benchmark::State& state) {
    SteinerMap sm = schw::to_steiner(schw::build_triple(schw::VeroneseSpec{}), ExhaustiveMode{3});
    SteinerMap w7 = reduce(reduce_mod_p(sm, 7)).map;
    for (auto _ : state)
        benchmark::DoNotOptimize(sigma_enumerate(w7, 7));
}
BENCHMARK(BM_SigmaEnumerateVeroneseF7);

void BM_TangentSystemVeronese(benchmark::State& state) {
    SteinerMap sm = schw::to_steiner(schw::build_triple(schw::VeroneseSpec{}), ExhaustiveMode{3});
    SteinerMap w5 = reduce(reduce_mod_p(sm, 5)).map;
    JumpingPair jp = jumping_enumerate(w5, 5).front();
    for (auto _ : state)
        benchmark::DoNotOptimize(tangent_system(w5, jp));
}
BENCHMARK(BM_TangentSystemVeronese);

} // namespace

BENCHMARK_MAIN();

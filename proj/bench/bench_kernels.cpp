#include "opint/integration.hpp"
#include "opint/trees.hpp"

#include <benchmark/benchmark.h>

using namespace opint;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_associativity_trees4(benchmark::State& st) {
    auto p = tree_operad(4);
    for (auto _ : st) benchmark::DoNotOptimize(check_associativity(p, {default_cap(), exec_of(st)}));
}

void BM_associativity_nat8(benchmark::State& st) {
    auto p = nat_operad(8);
    for (auto _ : st) benchmark::DoNotOptimize(check_associativity(p, {default_cap(), exec_of(st)}));
}

void BM_factorization_trees3(benchmark::State& st) {
    auto p = tree_operad(3);
    Integration ip(p);
    for (auto _ : st) benchmark::DoNotOptimize(check_factorization(ip, {default_cap(), exec_of(st)}));
}

void BM_two_category_laws_nat4(benchmark::State& st) {
    auto p = nat_operad(4);
    Integration ip(p);
    auto mi = materialize(ip);
    for (auto _ : st) benchmark::DoNotOptimize(check_two_category_laws(mi.fibration.o.cat, {default_cap(), exec_of(st)}));
}

void BM_operadic_axioms_trees2(benchmark::State& st) {
    auto p = tree_operad(2);
    Integration ip(p);
    auto mi = materialize(ip);
    for (auto _ : st) benchmark::DoNotOptimize(check_operadic_axioms(mi.fibration.o, {default_cap(), exec_of(st)}));
}

void BM_materialize_nat3(benchmark::State& st) {
    auto p = nat_operad(3);
    for (auto _ : st) {
        Integration ip(p);
        benchmark::DoNotOptimize(materialize(ip));
    }
}

} // namespace

// Argument 0 is the serial reference path, 1 the OpenMP path.
BENCHMARK(BM_associativity_trees4)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_associativity_nat8)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_factorization_trees3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_two_category_laws_nat4)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_operadic_axioms_trees2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_materialize_nat3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

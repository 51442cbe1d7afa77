#include <benchmark/benchmark.h>

#include "quandlekit/catalog.hpp"
#include "quandlekit/commutators.hpp"
#include "quandlekit/idempotents.hpp"
#include "quandlekit/order_zero.hpp"
#include "quandlekit/ring_automorphisms.hpp"
#include "quandlekit/rng.hpp"

namespace qk = quandlekit;

namespace {

const qk::CoefficientRing kZ = qk::CoefficientRing::integers();

qk::RingElement random_element(qk::Rng& rng, const qk::QuandlePtr& q, long long bound) {
    std::vector<qk::Integer> v;
    for (int i = 0; i < q->size(); ++i) v.push_back(qk::Integer(rng.next_in(-bound, bound)));
    return qk::RingElement::from_dense(q, kZ, v);
}

}  // namespace

static void RingMul(benchmark::State& state) {
    const auto q = qk::catalog::quandle("R4");
    qk::Rng rng(1);
    const auto u = random_element(rng, q, 9);
    const auto v = random_element(rng, q, 9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(u * v);
    }
}
BENCHMARK(RingMul);

static void IdempotentsBox(benchmark::State& state) {
    const auto q = qk::catalog::quandle("R4");
    const long long bound = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qk::idempotents_box(q, bound));
    }
    state.SetComplexityN(2 * state.range(0) + 1);
}
BENCHMARK(IdempotentsBox)->Arg(1)->Arg(2)->Arg(3)->Arg(4)->Complexity();

static void IdempotentsModular(benchmark::State& state) {
    const auto q = qk::catalog::quandle("R3");
    for (auto _ : state) {
        benchmark::DoNotOptimize(qk::idempotents_modular(q, state.range(0)));
    }
}
BENCHMARK(IdempotentsModular)->Arg(2)->Arg(5)->Arg(11);

static void AutomorphismSearch(benchmark::State& state) {
    const auto q = qk::catalog::quandle("R4");
    for (auto _ : state) {
        benchmark::DoNotOptimize(qk::automorphisms_bounded(q, 2));
    }
}
BENCHMARK(AutomorphismSearch);

static void CommutatorClosure(benchmark::State& state) {
    const auto q = qk::catalog::quandle("Alex(Z5,2)");
    for (auto _ : state) {
        benchmark::DoNotOptimize(qk::commutator_subalgebra(q, kZ));
    }
}
BENCHMARK(CommutatorClosure);

static void WidthOneCertificates(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(qk::cw_certificates("R4", 100, 7));
    }
}
BENCHMARK(WidthOneCertificates);

static void OrderSearch(benchmark::State& state) {
    const auto q = qk::catalog::quandle("Conj(S3)");
    for (auto _ : state) {
        benchmark::DoNotOptimize(qk::find_order(*q, qk::OrderSide::right));
    }
}
BENCHMARK(OrderSearch);

BENCHMARK_MAIN();

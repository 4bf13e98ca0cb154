#include <benchmark/benchmark.h>

#include "lh/cone.hpp"
#include "lh/lh_sequence.hpp"
#include "lh/minors.hpp"
#include "lh/verify.hpp"

namespace {

void BM_PolyMul(benchmark::State& state) {
    const int i = static_cast<int>(state.range(0));
    lh::LectureHallSequence seq;
    const lh::LaurentPoly a = seq.at(i);
    const lh::LaurentPoly b = seq.at(i - 1);
    for (auto _ : state) {
        auto p = a * b;
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_PolyMul)->Arg(6)->Arg(8)->Arg(10);

void BM_SequenceExtend(benchmark::State& state) {
    const int i = static_cast<int>(state.range(0));
    for (auto _ : state) {
        lh::LectureHallSequence seq;
        benchmark::DoNotOptimize(seq.at(i));
    }
}
BENCHMARK(BM_SequenceExtend)->Arg(8)->Arg(10);

void BM_SubsetMinorsAll(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        lh::LectureHallSequence seq;
        lh::MinorTable minors(seq);
        for (const auto& subset : lh::subsetsInOrder(n))
            benchmark::DoNotOptimize(minors.subsetMinor(subset));
    }
}
BENCHMARK(BM_SubsetMinorsAll)->Arg(5)->Arg(6)->Arg(7);

void BM_SeriesIdentity(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto lhs = lh::lectureHallSeries(n, 20);
        auto rhs = lh::productSeries(n, 20);
        benchmark::DoNotOptimize(lhs == rhs);
    }
}
BENCHMARK(BM_SeriesIdentity)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();

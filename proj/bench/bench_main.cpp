// Serial vs OpenMP paradigm generation and index construction on an enlarged
// lexicon: each sample verb is repeated behind N distinct prefix syllables.

#include <benchmark/benchmark.h>

#include <map>
#include <memory>

#include "kparadigm/conjugator.hpp"
#include "kparadigm/lemmatizer.hpp"
#include "kparadigm/utf8.hpp"

using namespace kparadigm;

namespace {

const Lexicon& base() {
    static const Lexicon lex = Lexicon::load(KPARADIGM_BENCH_DATA_DIR "/endings.tsv",
                                             KPARADIGM_BENCH_DATA_DIR "/verbs.tsv",
                                             KPARADIGM_BENCH_DATA_DIR "/template.tsv");
    return lex;
}

const Lexicon& enlarged(int copies) {
    static std::map<int, std::unique_ptr<Lexicon>> cache;
    auto& slot = cache[copies];
    if (!slot) {
        std::vector<VerbEntry> verbs;
        for (int p = 0; p < copies; ++p) {
            std::string prefix;
            utf8::append(prefix, static_cast<char32_t>(0xAC00 + 28 * p));
            for (const auto& v : base().verbs()) {
                auto surface = prefix + v.surface;
                auto letters = decompose(surface);
                verbs.push_back({std::move(surface), v.class_ids, std::move(letters)});
            }
        }
        slot = std::make_unique<Lexicon>(base().endings(), std::move(verbs), base().templ());
    }
    return *slot;
}

std::vector<std::string> surfaces(const Lexicon& lex) {
    std::vector<std::string> out;
    for (const auto& v : lex.verbs()) out.push_back(v.surface);
    return out;
}

void BM_ConjugateSerial(benchmark::State& state) {
    const auto& lex = enlarged(static_cast<int>(state.range(0)));
    const auto verbs = surfaces(lex);
    for (auto _ : state) benchmark::DoNotOptimize(conjugate_many_serial(lex, verbs));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(verbs.size()));
}

void BM_ConjugateParallel(benchmark::State& state) {
    const auto& lex = enlarged(static_cast<int>(state.range(0)));
    const auto verbs = surfaces(lex);
    for (auto _ : state) benchmark::DoNotOptimize(conjugate_many(lex, verbs));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(verbs.size()));
}

void BM_IndexSerial(benchmark::State& state) {
    const auto& lex = enlarged(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(build_index_serial(lex));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(lex.verbs().size()));
}

void BM_IndexParallel(benchmark::State& state) {
    const auto& lex = enlarged(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(build_index(lex));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(lex.verbs().size()));
}

}  // namespace

BENCHMARK(BM_ConjugateSerial)->Arg(1)->Arg(32)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConjugateParallel)->Arg(1)->Arg(32)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_IndexSerial)->Arg(1)->Arg(32)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IndexParallel)->Arg(1)->Arg(32)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();

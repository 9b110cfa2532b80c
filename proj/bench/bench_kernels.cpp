// Serial reference vs OpenMP kernels. Each pair of benchmarks runs the same
// input through kernels::serial::X and kernels::X.

#include <benchmark/benchmark.h>

#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cryptobench/cryptanalysis.hpp"
#include "cryptobench/kernels.hpp"
#include "cryptobench/numtheory.hpp"

using namespace cryptobench;
namespace k = cryptobench::kernels;

namespace {

const std::string& corpus_letters() {
    static const std::string text = [] {
        std::ifstream in(CRYPTOBENCH_CORPUS_PATH);
        std::ostringstream buf;
        buf << in.rdbuf();
        return normalize(buf.str()).str();
    }();
    return text;
}

std::string cipher_of_length(std::size_t n) {
    std::string s;
    while (s.size() < n) s += corpus_letters();
    s.resize(n);
    return vigenere_encrypt(NormalizedText::from_letters(s), VigenereKey("DISCRETE")).str();
}

std::vector<std::uint64_t> random_distances(std::size_t count) {
    std::mt19937_64 rng(42);
    std::vector<std::uint64_t> d(count);
    for (auto& x : d) x = 1 + rng() % 100'000;
    return d;
}

// All (e, least inverse) pairs for n = p * q, capped at `limit` pairs.
std::vector<k::ExponentPair> exponent_pairs(std::uint64_t p, std::uint64_t q, std::size_t limit) {
    const std::uint64_t phi = (p - 1) * (q - 1);
    std::vector<k::ExponentPair> pairs;
    for (std::uint64_t e = 2; e < phi && pairs.size() < limit; ++e) {
        if (std::gcd(e, phi) != 1) continue;
        pairs.push_back({e, static_cast<std::uint64_t>(mod_inverse(e, phi))});
    }
    return pairs;
}

// ---- 26-shift chi-squared scoring

void BM_ScoreShifts_Serial(benchmark::State& state) {
    const auto counts = k::count_letters(corpus_letters());
    const auto expected = FrequencyTable::english().proportions();
    for (auto _ : state) benchmark::DoNotOptimize(k::serial::score_shifts(counts, expected));
}
void BM_ScoreShifts_Parallel(benchmark::State& state) {
    const auto counts = k::count_letters(corpus_letters());
    const auto expected = FrequencyTable::english().proportions();
    for (auto _ : state) benchmark::DoNotOptimize(k::score_shifts(counts, expected));
}
BENCHMARK(BM_ScoreShifts_Serial);
BENCHMARK(BM_ScoreShifts_Parallel);

// ---- per-column letter counts

void BM_ColumnCounts_Serial(benchmark::State& state) {
    const auto text = cipher_of_length(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(k::serial::column_counts(text, 8));
    state.SetBytesProcessed(state.iterations() * state.range(0));
}
void BM_ColumnCounts_Parallel(benchmark::State& state) {
    const auto text = cipher_of_length(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(k::column_counts(text, 8));
    state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ColumnCounts_Serial)->Arg(10'000)->Arg(1'000'000);
BENCHMARK(BM_ColumnCounts_Parallel)->Arg(10'000)->Arg(1'000'000);

// ---- Kasiski divisibility counts

void BM_Divisibility_Serial(benchmark::State& state) {
    const auto d = random_distances(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(k::serial::divisibility_counts(d, 40));
}
void BM_Divisibility_Parallel(benchmark::State& state) {
    const auto d = random_distances(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(k::divisibility_counts(d, 40));
}
BENCHMARK(BM_Divisibility_Serial)->Arg(1'000)->Arg(100'000);
BENCHMARK(BM_Divisibility_Parallel)->Arg(1'000)->Arg(100'000);

// ---- trial-division factoring of a balanced semiprime near 10^12 and 10^16

constexpr std::uint64_t kSemiprime12 = 999'983ULL * 1'000'003ULL;
constexpr std::uint64_t kSemiprime16 = 99'999'989ULL * 100'000'007ULL;

void BM_SmallestFactor_Serial(benchmark::State& state) {
    const std::uint64_t n = state.range(0) == 12 ? kSemiprime12 : kSemiprime16;
    for (auto _ : state) benchmark::DoNotOptimize(k::serial::smallest_factor(n, UINT64_MAX));
}
void BM_SmallestFactor_Parallel(benchmark::State& state) {
    const std::uint64_t n = state.range(0) == 12 ? kSemiprime12 : kSemiprime16;
    for (auto _ : state) benchmark::DoNotOptimize(k::smallest_factor(n, UINT64_MAX));
}
BENCHMARK(BM_SmallestFactor_Serial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SmallestFactor_Parallel)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

// ---- m^e mod n for every m

void BM_PowerTable_Serial(benchmark::State& state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(k::serial::power_table(n, 65'537));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
void BM_PowerTable_Parallel(benchmark::State& state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(k::power_table(n, 65'537));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PowerTable_Serial)->Arg(9'991)->Arg(1'000'003)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_PowerTable_Parallel)->Arg(9'991)->Arg(1'000'003)->Unit(benchmark::kMicrosecond);

// ---- exhaustive RSA roundtrip check, n = 97 * 103

void BM_Roundtrip_Serial(benchmark::State& state) {
    const auto pairs = exponent_pairs(97, 103, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(k::serial::roundtrip_failures(9'991, pairs));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pairs.size()) * 9'991);
}
void BM_Roundtrip_Parallel(benchmark::State& state) {
    const auto pairs = exponent_pairs(97, 103, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(k::roundtrip_failures(9'991, pairs));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pairs.size()) * 9'991);
}
BENCHMARK(BM_Roundtrip_Serial)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Roundtrip_Parallel)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include "cryptobench/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cryptobench/numtheory.hpp"

namespace cryptobench::kernels {

namespace {

double chi_term(std::uint64_t observed, double expected_count) {
    if (expected_count <= 0.0) {
        return observed == 0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    const double diff = static_cast<double>(observed) - expected_count;
    return diff * diff / expected_count;
}

double score_one_shift(const LetterCounts& counts, std::span<const double, kAlphabetSize> expected,
                       std::uint64_t total, int shift) {
    double score = 0.0;
    for (int j = 0; j < kAlphabetSize; ++j) {
        const auto observed = counts[(j + shift) % kAlphabetSize];
        score += chi_term(observed, expected[j] * static_cast<double>(total));
    }
    return score;
}

std::uint64_t total_of(const LetterCounts& counts) {
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    return total;
}

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

__extension__ typedef unsigned __int128 u128;

// Remainder by a fixed modulus. Below 2^16 every product of two residues fits
// in 32 bits, so the remainder comes from a precomputed 64-bit reciprocal
// (Lemire, Kaser & Kurz) instead of a hardware divide.
class Modulus {
public:
    explicit Modulus(std::uint32_t n)
        : n_(n), small_(n < (1u << 16)), inverse_(~std::uint64_t{0} / n + 1) {}

    std::uint32_t value() const noexcept { return n_; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
        if (small_) {
            const std::uint64_t low = inverse_ * product;
            return static_cast<std::uint32_t>((static_cast<u128>(low) * n_) >> 64);
        }
        return static_cast<std::uint32_t>(product % n_);
    }

    std::uint32_t pow(std::uint32_t base, std::uint64_t exp) const noexcept {
        std::uint32_t result = 1 % n_;
        std::uint32_t b = base % n_;
        while (exp != 0) {
            if (exp & 1u) result = mul(result, b);
            b = mul(b, b);
            exp >>= 1;
        }
        return result;
    }

private:
    std::uint32_t n_;
    bool small_;
    std::uint64_t inverse_;
};

// Smallest prime factor of every m < n (spf[0] = spf[1] = 0).
std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> spf(n, 0);
    for (std::uint32_t i = 2; i < n; ++i) {
        if (spf[i] != 0) continue;
        for (std::uint64_t j = i; j < n; j += i) {
            if (spf[j] == 0) spf[j] = i;
        }
    }
    return spf;
}

// Builds tables of m^exp mod n for every m < n. m^exp is completely
// multiplicative in m, so only primes need an exponentiation; a composite is
// the product of the entries for its smallest prime factor and cofactor. The
// prime exponentiations all share one exponent and run lane by lane, which
// keeps independent multiplies in flight instead of one dependent chain.
class PowerTableBuilder {
public:
    explicit PowerTableBuilder(std::uint32_t n) : mod_(n), spf_(smallest_prime_factors(n)), cofactor_(n, 0) {
        for (std::uint32_t m = 2; m < n; ++m) {
            if (spf_[m] == m) {
                primes_.push_back(m);
            } else {
                cofactor_[m] = m / spf_[m];
            }
        }
    }

    std::uint32_t modulus() const noexcept { return mod_.value(); }

    /// `parallel_lanes` spreads the prime exponentiations over OpenMP threads;
    /// leave it off when the caller is already inside a parallel region.
    void fill(std::uint64_t exp, std::vector<std::uint32_t>& table, bool parallel_lanes = false) {
        const std::uint32_t n = mod_.value();
        table.assign(n, 0);
        if (n == 1) return;

        acc_.assign(primes_.size(), 1);
        base_ = primes_;
        const auto lanes = static_cast<std::int64_t>(primes_.size());
#pragma omp parallel for schedule(static) if (parallel_lanes)
        for (std::int64_t block = 0; block < lanes; block += kLaneBlock) {
            const std::int64_t stop = std::min(lanes, block + kLaneBlock);
            for (std::uint64_t e = exp; e != 0; e >>= 1) {
                if (e & 1u) {
                    for (std::int64_t i = block; i < stop; ++i) acc_[i] = mod_.mul(acc_[i], base_[i]);
                }
                if (e > 1) {
                    for (std::int64_t i = block; i < stop; ++i) base_[i] = mod_.mul(base_[i], base_[i]);
                }
            }
        }

        table[0] = mod_.pow(0, exp);
        table[1] = 1;
        for (std::size_t i = 0; i < primes_.size(); ++i) table[primes_[i]] = acc_[i];
        for (std::uint32_t m = 4; m < n; ++m) {
            if (cofactor_[m] != 0) table[m] = mod_.mul(table[spf_[m]], table[cofactor_[m]]);
        }
    }

private:
    static constexpr std::int64_t kLaneBlock = 512;

    Modulus mod_;
    std::vector<std::uint32_t> spf_;
    std::vector<std::uint32_t> cofactor_;
    std::vector<std::uint32_t> primes_;
    std::vector<std::uint32_t> acc_;
    std::vector<std::uint32_t> base_;
};

struct TaggedTable {
    std::uint64_t exp = 0;
    bool filled = false;
    std::vector<std::uint32_t> values;

    bool holds(std::uint64_t e) const noexcept { return filled && exp == e; }
};

// Keeps the last two tables. A pair (d, e) right after (e, d) swaps them
// instead of recomputing.
std::uint64_t table_roundtrip_failures(PowerTableBuilder& builder, const ExponentPair& pair, TaggedTable& enc,
                                       TaggedTable& dec) {
    if (dec.holds(pair.e) || enc.holds(pair.d)) std::swap(enc, dec);
    const auto refill = [&](TaggedTable& t, std::uint64_t exp) {
        builder.fill(exp, t.values);
        t.exp = exp;
        t.filled = true;
    };
    if (!enc.holds(pair.e)) refill(enc, pair.e);
    const std::vector<std::uint32_t>* d = &enc.values;
    if (pair.d != pair.e) {
        if (!dec.holds(pair.d)) refill(dec, pair.d);
        d = &dec.values;
    }

    const std::uint32_t n = builder.modulus();
    const auto& e = enc.values;
    std::uint64_t failures = 0;
    for (std::uint32_t m = 0; m < n; ++m) {
        failures += (*d)[e[m]] != m;
    }
    return failures;
}

}  // namespace

LetterCounts count_letters(std::string_view letters) noexcept {
    LetterCounts counts{};
    for (char c : letters) ++counts[c - 'A'];
    return counts;
}

int max_threads() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

ShiftScores score_shifts(const LetterCounts& counts, std::span<const double, kAlphabetSize> expected) {
    ShiftScores scores{};
    const std::uint64_t total = total_of(counts);
#pragma omp parallel for schedule(static)
    for (int s = 0; s < kAlphabetSize; ++s) {
        scores[s] = score_one_shift(counts, expected, total, s);
    }
    return scores;
}

std::vector<LetterCounts> column_counts(std::string_view letters, std::size_t key_length) {
    std::vector<LetterCounts> columns(key_length, LetterCounts{});
    const auto cols = static_cast<std::int64_t>(key_length);
#pragma omp parallel for schedule(static)
    for (std::int64_t j = 0; j < cols; ++j) {
        auto& col = columns[j];
        for (std::size_t i = j; i < letters.size(); i += key_length) ++col[letters[i] - 'A'];
    }
    return columns;
}

std::vector<std::uint64_t> divisibility_counts(std::span<const std::uint64_t> distances, std::size_t max_len) {
    std::vector<std::uint64_t> counts(max_len, 0);
    const auto lens = static_cast<std::int64_t>(max_len);
#pragma omp parallel for schedule(static)
    for (std::int64_t idx = 0; idx < lens; ++idx) {
        const auto len = static_cast<std::uint64_t>(idx + 1);
        std::uint64_t c = 0;
        for (auto d : distances) c += (d % len == 0);
        counts[idx] = c;
    }
    return counts;
}

std::uint64_t smallest_factor(std::uint64_t n, std::uint64_t limit) noexcept {
    if (n < 4) return 0;
    const std::uint64_t hi = std::min(limit, isqrt(n));
    if (hi < 2) return 0;
    if (n % 2 == 0) return 2;

    // Odd candidates 3, 5, 7, ... scanned in blocks so a small factor stops the
    // search early; the minimum within a block is unique, so the result does
    // not depend on thread count.
    constexpr std::uint64_t kBlock = std::uint64_t{1} << 15;
    for (std::uint64_t start = 3; start <= hi; start += 2 * kBlock) {
        const std::uint64_t stop = std::min(hi, start + 2 * kBlock - 2);
        const auto steps = static_cast<std::int64_t>((stop - start) / 2 + 1);
        std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
#pragma omp parallel for schedule(static) reduction(min : best)
        for (std::int64_t k = 0; k < steps; ++k) {
            const std::uint64_t d = start + 2 * static_cast<std::uint64_t>(k);
            if (n % d == 0 && d < best) best = d;
        }
        if (best != std::numeric_limits<std::uint64_t>::max()) return best;
    }
    return 0;
}

std::vector<std::uint32_t> power_table(std::uint32_t n, std::uint64_t exp) {
    std::vector<std::uint32_t> table;
    if (n == 0) return table;
    PowerTableBuilder builder(n);
    builder.fill(exp, table, true);
    return table;
}

std::vector<std::uint64_t> roundtrip_failures(std::uint32_t n, std::span<const ExponentPair> pairs) {
    std::vector<std::uint64_t> failures(pairs.size(), 0);
    if (n == 0) return failures;
    const PowerTableBuilder shared(n);
    const auto count = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel
    {
        PowerTableBuilder builder = shared;
        TaggedTable enc;
        TaggedTable dec;
#pragma omp for schedule(dynamic, 16)
        for (std::int64_t i = 0; i < count; ++i) {
            failures[i] = table_roundtrip_failures(builder, pairs[i], enc, dec);
        }
    }
    return failures;
}

namespace serial {

ShiftScores score_shifts(const LetterCounts& counts, std::span<const double, kAlphabetSize> expected) {
    ShiftScores scores{};
    const std::uint64_t total = total_of(counts);
    for (int s = 0; s < kAlphabetSize; ++s) scores[s] = score_one_shift(counts, expected, total, s);
    return scores;
}

std::vector<LetterCounts> column_counts(std::string_view letters, std::size_t key_length) {
    std::vector<LetterCounts> columns(key_length, LetterCounts{});
    for (std::size_t i = 0; i < letters.size(); ++i) ++columns[i % key_length][letters[i] - 'A'];
    return columns;
}

std::vector<std::uint64_t> divisibility_counts(std::span<const std::uint64_t> distances, std::size_t max_len) {
    std::vector<std::uint64_t> counts(max_len, 0);
    for (auto d : distances) {
        for (std::size_t len = 1; len <= max_len; ++len) counts[len - 1] += (d % len == 0);
    }
    return counts;
}

std::uint64_t smallest_factor(std::uint64_t n, std::uint64_t limit) noexcept {
    for (std::uint64_t d = 2; d <= limit && d <= n / d; ++d) {
        if (n % d == 0) return d;
    }
    return 0;
}

std::vector<std::uint32_t> power_table(std::uint32_t n, std::uint64_t exp) {
    std::vector<std::uint32_t> table(n, 0);
    for (std::uint32_t m = 0; m < n; ++m) table[m] = static_cast<std::uint32_t>(mod_pow_u64(m, exp, n));
    return table;
}

std::vector<std::uint64_t> roundtrip_failures(std::uint32_t n, std::span<const ExponentPair> pairs) {
    std::vector<std::uint64_t> failures(pairs.size(), 0);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::uint32_t m = 0; m < n; ++m) {
            const auto c = mod_pow_u64(m, pairs[i].e, n);
            failures[i] += mod_pow_u64(c, pairs[i].d, n) != m;
        }
    }
    return failures;
}

}  // namespace serial

}  // namespace cryptobench::kernels

#pragma once

// Data-parallel inner loops of the attacks. Each kernel has an OpenMP version
// (namespace kernels) and a plain serial version (namespace kernels::serial)
// that is kept as the reference for tests and benchmarks. Both produce
// identical results: every output element is computed independently and no
// floating-point reduction crosses a thread boundary.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "cryptobench/textcodec.hpp"

namespace cryptobench::kernels {

using LetterCounts = std::array<std::uint64_t, kAlphabetSize>;
using ShiftScores = std::array<double, kAlphabetSize>;

/// Public exponent and its claimed private inverse.
struct ExponentPair {
    std::uint64_t e;
    std::uint64_t d;
};

LetterCounts count_letters(std::string_view letters) noexcept;

/// Chi-squared of the text decrypted with each shift s, given the ciphertext
/// letter counts. Trial plaintext letter j has count counts[(j + s) mod 26].
/// Letters whose expected proportion is zero contribute nothing when unseen
/// and +inf when seen.
ShiftScores score_shifts(const LetterCounts& counts, std::span<const double, kAlphabetSize> expected);

/// Letter counts of each column j (positions i with i mod key_length == j).
std::vector<LetterCounts> column_counts(std::string_view letters, std::size_t key_length);

/// result[L - 1] = number of distances divisible by L, for L in 1..max_len.
std::vector<std::uint64_t> divisibility_counts(std::span<const std::uint64_t> distances, std::size_t max_len);

/// Smallest divisor of n in [2, limit] that is at most sqrt(n), or 0 if none.
std::uint64_t smallest_factor(std::uint64_t n, std::uint64_t limit) noexcept;

/// result[m] = m^exp mod n for m in [0, n).
std::vector<std::uint32_t> power_table(std::uint32_t n, std::uint64_t exp);

/// For each pair, the number of m in [0, n) with (m^e)^d mod n != m.
/// Listing (d, e) right after (e, d) lets the parallel version reuse both tables.
std::vector<std::uint64_t> roundtrip_failures(std::uint32_t n, std::span<const ExponentPair> pairs);

namespace serial {

ShiftScores score_shifts(const LetterCounts& counts, std::span<const double, kAlphabetSize> expected);
std::vector<LetterCounts> column_counts(std::string_view letters, std::size_t key_length);
std::vector<std::uint64_t> divisibility_counts(std::span<const std::uint64_t> distances, std::size_t max_len);
std::uint64_t smallest_factor(std::uint64_t n, std::uint64_t limit) noexcept;
std::vector<std::uint32_t> power_table(std::uint32_t n, std::uint64_t exp);
std::vector<std::uint64_t> roundtrip_failures(std::uint32_t n, std::span<const ExponentPair> pairs);

}  // namespace serial

/// Threads OpenMP will use for the parallel kernels (1 without OpenMP).
int max_threads() noexcept;

}  // namespace cryptobench::kernels

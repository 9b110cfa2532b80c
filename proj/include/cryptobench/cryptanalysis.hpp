#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cryptobench/caesar.hpp"
#include "cryptobench/rsa.hpp"
#include "cryptobench/textcodec.hpp"
#include "cryptobench/vigenere.hpp"

namespace cryptobench {

/// Letter proportions A..Z, summing to 1.
class FrequencyTable {
public:
    /// Average English letter distribution (percentages normalized to unit sum).
    static const FrequencyTable& english();

    /// Scales nonnegative weights to unit sum. Throws MalformedFrequencyTable
    /// if a weight is negative or not finite, or all are zero.
    static FrequencyTable from_weights(const std::array<double, kAlphabetSize>& weights);

    /// Parses 26 lines "<letter> <proportion>", one per letter in any order.
    /// Blank lines are ignored; proportions are normalized.
    static FrequencyTable parse(std::string_view text);

    double operator[](char letter) const { return proportions_[letter_to_index(letter, Indexing::ZeroBased)]; }
    std::span<const double, kAlphabetSize> proportions() const noexcept { return proportions_; }
    char most_common() const noexcept;

private:
    explicit FrequencyTable(const std::array<double, kAlphabetSize>& p) : proportions_(p) {}

    std::array<double, kAlphabetSize> proportions_{};
};

/// Ranked attack result. Candidates are sorted by ascending score (lower fits
/// English better) and candidates.front() is the best key.
template <typename Key>
struct CrackReport {
    struct Candidate {
        Key key;
        double score;
    };

    Key best_key;
    double score = 0.0;
    NormalizedText plaintext;
    std::vector<Candidate> candidates;
    /// Set when some scored sample has fewer letters than kReliableSampleLetters.
    bool low_confidence = false;
};

/// Below this many letters a chi-squared ranking is mostly noise.
inline constexpr std::size_t kReliableSampleLetters = 26;

/// Default modulus ceiling for break_rsa: trial division needs at most
/// sqrt(1e12) = 1e6 candidate divisors.
inline const BigInt kDefaultFactorBound{1'000'000'000'000ULL};

FrequencyTable observed_frequencies(const NormalizedText& text);

/// Pearson statistic over letter counts (proportion x length).
double chi_squared(const FrequencyTable& observed, const FrequencyTable& expected, std::size_t length);

/// Scores all 26 shifts; exactly 26 candidates, ties ordered by smaller shift.
CrackReport<CaesarKey> crack_caesar(const NormalizedText& cipher,
                                    const FrequencyTable& expected = FrequencyTable::english());

/// Candidate key lengths 1..max_len (capped at the text length), best first.
///
/// Kasiski examination: distances between consecutive occurrences of each
/// repeated trigram are collected (each distinct distance once). A length L
/// scores by how far the number of distances it divides exceeds the D/L a
/// random distance would give, as a z-score. Length 1 divides everything and
/// carries no evidence, so it is scored at kKasiskiThreshold: another length
/// must beat that to outrank it. With no repeated trigrams the ranking falls
/// back to mean column index of coincidence. Ties go to the smaller length.
std::vector<std::size_t> estimate_key_length(const NormalizedText& cipher, std::size_t max_len);

inline constexpr double kKasiskiThreshold = 3.0;

/// Distinct distances between consecutive repeats of each trigram, ascending.
std::vector<std::uint64_t> kasiski_distances(const NormalizedText& cipher);

/// Sum over letters of n_i (n_i - 1) / (N (N - 1)); 0 for N < 2.
double index_of_coincidence(std::span<const std::uint64_t, kAlphabetSize> counts);

/// Splits the ciphertext into key_length columns, cracks each as Caesar and
/// assembles the keyword. Score is the sum of column scores. Alternative
/// candidates swap one column to its second-best shift.
CrackReport<VigenereKey> crack_vigenere(const NormalizedText& cipher, std::size_t key_length,
                                        const FrequencyTable& expected = FrequencyTable::english());

/// (p, q) with p <= q, p * q == n and both prime. Throws NotSemiprime otherwise.
std::pair<BigInt, BigInt> factor_semiprime(const BigInt& n);

/// Recovers the least positive private exponent by factoring n. Throws
/// ModulusTooLarge when n exceeds `bound`.
RsaPrivateKey break_rsa(const RsaPublicKey& key, const BigInt& bound = kDefaultFactorBound);

}  // namespace cryptobench

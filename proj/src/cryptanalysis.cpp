#include "cryptobench/cryptanalysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "cryptobench/error.hpp"
#include "cryptobench/kernels.hpp"

namespace cryptobench {

namespace {

// Average letter distribution of English text, in percent.
constexpr std::array<double, kAlphabetSize> kEnglishPercent = {
    8.4966,   // A
    2.0720,   // B
    4.5388,   // C
    3.3844,   // D
    11.1607,  // E
    1.8121,   // F
    2.4705,   // G
    3.0034,   // H
    7.5448,   // I
    0.1965,   // J
    1.1016,   // K
    5.4893,   // L
    3.0129,   // M
    6.6544,   // N
    7.1635,   // O
    3.1671,   // P
    0.1962,   // Q
    7.5809,   // R
    5.7351,   // S
    6.9509,   // T
    3.6308,   // U
    1.0074,   // V
    1.2899,   // W
    0.2902,   // X
    1.7779,   // Y
    0.2722,   // Z
};

void require_nonempty(const NormalizedText& text) {
    if (text.empty()) throw CryptoError(ErrorCode::EmptyText, "text has no letters");
}

// Shifts ordered by ascending score, ties toward the smaller shift.
std::array<int, kAlphabetSize> rank_shifts(const kernels::ShiftScores& scores) {
    std::array<int, kAlphabetSize> order{};
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return scores[a] < scores[b]; });
    return order;
}

char shift_letter(int shift) { return index_to_letter(shift, Indexing::ZeroBased); }

std::vector<std::size_t> rank_by_ioc(const NormalizedText& cipher, std::size_t cap) {
    std::vector<std::pair<std::size_t, double>> scored;
    for (std::size_t len = 1; len <= cap; ++len) {
        const auto columns = kernels::column_counts(cipher.str(), len);
        double total = 0.0;
        for (const auto& col : columns) total += index_of_coincidence(col);
        scored.emplace_back(len, total / static_cast<double>(len));
    }
    std::stable_sort(scored.begin(), scored.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    std::vector<std::size_t> out;
    for (const auto& [len, ioc] : scored) out.push_back(len);
    return out;
}

}  // namespace

const FrequencyTable& FrequencyTable::english() {
    static const FrequencyTable table = from_weights(kEnglishPercent);
    return table;
}

FrequencyTable FrequencyTable::from_weights(const std::array<double, kAlphabetSize>& weights) {
    double sum = 0.0;
    for (double w : weights) {
        if (!std::isfinite(w) || w < 0.0) {
            throw CryptoError(ErrorCode::MalformedFrequencyTable, "weights must be finite and nonnegative");
        }
        sum += w;
    }
    if (sum <= 0.0) throw CryptoError(ErrorCode::MalformedFrequencyTable, "weights sum to zero");
    std::array<double, kAlphabetSize> p{};
    for (int i = 0; i < kAlphabetSize; ++i) p[i] = weights[i] / sum;
    return FrequencyTable(p);
}

FrequencyTable FrequencyTable::parse(std::string_view text) {
    std::array<double, kAlphabetSize> weights{};
    std::array<bool, kAlphabetSize> seen{};
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream fields(line);
        std::string letter;
        double value = 0.0;
        std::string extra;
        if (!(fields >> letter >> value) || (fields >> extra) || letter.size() != 1) {
            throw CryptoError(ErrorCode::MalformedFrequencyTable,
                              "line " + std::to_string(line_no) + ": expected '<letter> <proportion>'");
        }
        const NormalizedText norm = normalize(letter);
        if (norm.size() != 1) {
            throw CryptoError(ErrorCode::MalformedFrequencyTable,
                              "line " + std::to_string(line_no) + ": '" + letter + "' is not a letter");
        }
        const int idx = norm[0] - 'A';
        if (seen[idx]) {
            throw CryptoError(ErrorCode::MalformedFrequencyTable,
                              "line " + std::to_string(line_no) + ": duplicate letter " + norm.str());
        }
        seen[idx] = true;
        weights[idx] = value;
    }
    for (int i = 0; i < kAlphabetSize; ++i) {
        if (!seen[i]) {
            throw CryptoError(ErrorCode::MalformedFrequencyTable,
                              std::string("missing letter ") + shift_letter(i));
        }
    }
    return from_weights(weights);
}

char FrequencyTable::most_common() const noexcept {
    const auto it = std::max_element(proportions_.begin(), proportions_.end());
    return static_cast<char>('A' + (it - proportions_.begin()));
}

FrequencyTable observed_frequencies(const NormalizedText& text) {
    require_nonempty(text);
    const auto counts = kernels::count_letters(text.str());
    std::array<double, kAlphabetSize> weights{};
    for (int i = 0; i < kAlphabetSize; ++i) weights[i] = static_cast<double>(counts[i]);
    return FrequencyTable::from_weights(weights);
}

double chi_squared(const FrequencyTable& observed, const FrequencyTable& expected, std::size_t length) {
    const auto n = static_cast<double>(length);
    double score = 0.0;
    for (int i = 0; i < kAlphabetSize; ++i) {
        const double obs = observed.proportions()[i] * n;
        const double exp = expected.proportions()[i] * n;
        if (exp <= 0.0) {
            if (obs > 0.0) return std::numeric_limits<double>::infinity();
            continue;
        }
        score += (obs - exp) * (obs - exp) / exp;
    }
    return score;
}

CrackReport<CaesarKey> crack_caesar(const NormalizedText& cipher, const FrequencyTable& expected) {
    require_nonempty(cipher);
    const auto scores = kernels::score_shifts(kernels::count_letters(cipher.str()), expected.proportions());
    const auto order = rank_shifts(scores);

    std::vector<CrackReport<CaesarKey>::Candidate> candidates;
    candidates.reserve(kAlphabetSize);
    for (int shift : order) candidates.push_back({CaesarKey(shift), scores[shift]});

    const CaesarKey best = candidates.front().key;
    return {best, candidates.front().score, caesar_decrypt(cipher, best), std::move(candidates),
            cipher.size() < kReliableSampleLetters};
}

double index_of_coincidence(std::span<const std::uint64_t, kAlphabetSize> counts) {
    std::uint64_t total = 0;
    std::uint64_t pairs = 0;
    for (auto c : counts) {
        total += c;
        if (c > 1) pairs += c * (c - 1);
    }
    if (total < 2) return 0.0;
    return static_cast<double>(pairs) / (static_cast<double>(total) * static_cast<double>(total - 1));
}

std::vector<std::uint64_t> kasiski_distances(const NormalizedText& cipher) {
    constexpr std::size_t kTrigrams = kAlphabetSize * kAlphabetSize * kAlphabetSize;
    constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
    std::vector<std::size_t> last(kTrigrams, kUnseen);
    std::vector<std::uint64_t> distances;
    const std::string& s = cipher.str();
    for (std::size_t i = 0; i + 3 <= s.size(); ++i) {
        const std::size_t code = static_cast<std::size_t>(s[i] - 'A') * kAlphabetSize * kAlphabetSize +
                                 static_cast<std::size_t>(s[i + 1] - 'A') * kAlphabetSize +
                                 static_cast<std::size_t>(s[i + 2] - 'A');
        if (last[code] != kUnseen) distances.push_back(i - last[code]);
        last[code] = i;
    }
    std::sort(distances.begin(), distances.end());
    distances.erase(std::unique(distances.begin(), distances.end()), distances.end());
    return distances;
}

std::vector<std::size_t> estimate_key_length(const NormalizedText& cipher, std::size_t max_len) {
    if (cipher.size() < 3) {
        throw CryptoError(ErrorCode::TextTooShort,
                          "key length estimation needs at least 3 letters, got " + std::to_string(cipher.size()));
    }
    if (max_len == 0) throw CryptoError(ErrorCode::InvalidKeyLength, "max key length must be positive");
    const std::size_t cap = std::min(max_len, cipher.size());

    const auto distances = kasiski_distances(cipher);
    if (distances.empty()) return rank_by_ioc(cipher, cap);

    const auto divides = kernels::divisibility_counts(distances, cap);
    const auto total = static_cast<double>(distances.size());
    std::vector<std::pair<std::size_t, double>> scored;
    scored.emplace_back(1, kKasiskiThreshold);
    for (std::size_t len = 2; len <= cap; ++len) {
        const double chance = 1.0 / static_cast<double>(len);
        const double mean = total * chance;
        const double sd = std::sqrt(total * chance * (1.0 - chance));
        scored.emplace_back(len, (static_cast<double>(divides[len - 1]) - mean) / sd);
    }
    std::stable_sort(scored.begin(), scored.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    std::vector<std::size_t> out;
    out.reserve(scored.size());
    for (const auto& [len, z] : scored) out.push_back(len);
    return out;
}

CrackReport<VigenereKey> crack_vigenere(const NormalizedText& cipher, std::size_t key_length,
                                        const FrequencyTable& expected) {
    if (key_length == 0 || key_length > cipher.size()) {
        throw CryptoError(ErrorCode::InvalidKeyLength,
                          "key length " + std::to_string(key_length) + " must be in 1.." +
                              std::to_string(cipher.size()));
    }

    const auto columns = kernels::column_counts(cipher.str(), key_length);
    std::vector<std::array<int, kAlphabetSize>> ranked(key_length);
    std::vector<kernels::ShiftScores> scores(key_length);
    const auto cols = static_cast<std::int64_t>(key_length);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t j = 0; j < cols; ++j) {
        scores[j] = kernels::serial::score_shifts(columns[j], expected.proportions());
        ranked[j] = rank_shifts(scores[j]);
    }

    std::string keyword(key_length, 'A');
    double total = 0.0;
    for (std::size_t j = 0; j < key_length; ++j) {
        keyword[j] = shift_letter(ranked[j][0]);
        total += scores[j][ranked[j][0]];
    }
    const VigenereKey best(NormalizedText::from_letters(keyword));

    std::vector<CrackReport<VigenereKey>::Candidate> candidates{{best, total}};
    for (std::size_t j = 0; j < key_length; ++j) {
        std::string alt = keyword;
        const int second = ranked[j][1];
        alt[j] = shift_letter(second);
        candidates.push_back({VigenereKey(NormalizedText::from_letters(alt)),
                              total - scores[j][ranked[j][0]] + scores[j][second]});
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const auto& a, const auto& b) { return a.score < b.score; });

    // The shortest column has floor(size / key_length) letters.
    const bool low_confidence = cipher.size() / key_length < kReliableSampleLetters;
    return {best, total, vigenere_decrypt(cipher, best), std::move(candidates), low_confidence};
}

std::pair<BigInt, BigInt> factor_semiprime(const BigInt& n) {
    const auto not_semiprime = [&](const std::string& why) {
        return CryptoError(ErrorCode::NotSemiprime, n.str() + " " + why);
    };
    if (n < 4) throw not_semiprime("is below the smallest semiprime 4");

    BigInt p = 0;
    std::uint64_t small = 0;
    if (fits_u64(n, small)) {
        p = kernels::smallest_factor(small, std::numeric_limits<std::uint64_t>::max());
    } else {
        for (BigInt d = 2; d * d <= n; ++d) {
            if (n % d == 0) {
                p = d;
                break;
            }
        }
    }
    if (p == 0) throw not_semiprime("is prime");
    BigInt q = n / p;
    if (!is_prime(q)) throw not_semiprime("has more than two prime factors");
    return {std::move(p), std::move(q)};
}

RsaPrivateKey break_rsa(const RsaPublicKey& key, const BigInt& bound) {
    if (key.n > bound) {
        throw CryptoError(ErrorCode::ModulusTooLarge,
                          "n = " + key.n.str() + " exceeds the trial-division bound " + bound.str());
    }
    const auto [p, q] = factor_semiprime(key.n);
    const BigInt phi = totient_semiprime(p, q);
    return {mod_inverse(key.e, phi), key.n};
}

}  // namespace cryptobench

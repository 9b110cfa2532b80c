#include "cryptobench/textcodec.hpp"

#include "cryptobench/error.hpp"

#include <string>

namespace cryptobench {

bool is_upper_letter(char c) noexcept { return c >= 'A' && c <= 'Z'; }

NormalizedText NormalizedText::from_letters(std::string letters) {
    for (char c : letters) {
        if (!is_upper_letter(c)) {
            throw CryptoError(ErrorCode::InvalidLetter,
                              "'" + std::string(1, c) + "' is not an uppercase letter A-Z");
        }
    }
    return NormalizedText(std::move(letters), Unchecked{});
}

NormalizedText normalize(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (c >= 'a' && c <= 'z') {
            out.push_back(static_cast<char>(c - 'a' + 'A'));
        } else if (is_upper_letter(c)) {
            out.push_back(c);
        }
    }
    return NormalizedText(std::move(out), NormalizedText::Unchecked{});
}

int letter_to_index(char letter, Indexing indexing) {
    if (!is_upper_letter(letter)) {
        throw CryptoError(ErrorCode::InvalidLetter,
                          "'" + std::string(1, letter) + "' is not an uppercase letter A-Z");
    }
    const int zero_based = letter - 'A';
    return indexing == Indexing::ZeroBased ? zero_based : zero_based + 1;
}

char index_to_letter(int value, Indexing indexing) {
    if (indexing == Indexing::ZeroBased) {
        if (value < 0 || value >= kAlphabetSize) {
            throw CryptoError(ErrorCode::InvalidIndex,
                              std::to_string(value) + " is outside 0..25");
        }
        return static_cast<char>('A' + value);
    }
    if (value < 0 || value > kAlphabetSize) {
        throw CryptoError(ErrorCode::InvalidIndex, std::to_string(value) + " is outside 0..26");
    }
    // 26 ≡ 0 (mod 26): both name Z.
    return value == 0 ? 'Z' : static_cast<char>('A' + value - 1);
}

}  // namespace cryptobench

#include "cryptobench/vigenere.hpp"

#include <algorithm>

#include "cryptobench/error.hpp"

namespace cryptobench {

namespace {

NormalizedText require_nonempty(NormalizedText keyword) {
    if (keyword.empty()) {
        throw CryptoError(ErrorCode::EmptyKey, "Vigenère keyword must contain at least one letter");
    }
    return keyword;
}

std::vector<VigenereTraceRow> trace(const NormalizedText& text, const VigenereKey& key, bool decrypt) {
    std::vector<VigenereTraceRow> rows;
    rows.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char key_letter = key.keyword()[i % key.size()];
        const int k = letter_to_index(key_letter, kVigenereIndexing);
        const int v = letter_to_index(text[i], kVigenereIndexing);
        const int raw = decrypt ? v + (kAlphabetSize - k) : v + k;
        const int reduced = raw % kAlphabetSize;
        rows.push_back({key_letter, k, text[i], v, raw, reduced,
                        index_to_letter(reduced, kVigenereIndexing)});
    }
    return rows;
}

}  // namespace

VigenereKey::VigenereKey(std::string_view keyword) : keyword_(require_nonempty(normalize(keyword))) {}

VigenereKey::VigenereKey(NormalizedText keyword) : keyword_(require_nonempty(std::move(keyword))) {}

VigenereSquare::VigenereSquare() {
    std::array<char, kAlphabetSize> alphabet{};
    for (int i = 0; i < kAlphabetSize; ++i) alphabet[i] = static_cast<char>('A' + i);
    for (auto& r : cells_) {
        r = alphabet;
        std::rotate(alphabet.begin(), alphabet.begin() + 1, alphabet.end());
    }
}

char VigenereSquare::at(char row, char column) const {
    return cells_[letter_to_index(row, Indexing::ZeroBased)][letter_to_index(column, Indexing::ZeroBased)];
}

std::string VigenereSquare::row(char row) const {
    const auto& r = cells_[letter_to_index(row, Indexing::ZeroBased)];
    return {r.begin(), r.end()};
}

NormalizedText expand_key(const VigenereKey& key, std::size_t length) {
    TextBuilder out(length);
    for (std::size_t i = 0; i < length; ++i) out.push_back(key.keyword()[i % key.size()]);
    return std::move(out).finish();
}

NormalizedText vigenere_encrypt(const NormalizedText& plain, const VigenereKey& key) {
    TextBuilder out(plain.size());
    for (std::size_t i = 0; i < plain.size(); ++i) {
        const int p = letter_to_index(plain[i], kVigenereIndexing);
        out.push_back(index_to_letter((p + key.shift_at(i)) % kAlphabetSize, kVigenereIndexing));
    }
    return std::move(out).finish();
}

NormalizedText vigenere_decrypt(const NormalizedText& cipher, const VigenereKey& key) {
    TextBuilder out(cipher.size());
    for (std::size_t i = 0; i < cipher.size(); ++i) {
        const int c = letter_to_index(cipher[i], kVigenereIndexing);
        out.push_back(index_to_letter((c + (kAlphabetSize - key.shift_at(i))) % kAlphabetSize,
                                      kVigenereIndexing));
    }
    return std::move(out).finish();
}

std::vector<VigenereTraceRow> vigenere_encrypt_trace(const NormalizedText& plain, const VigenereKey& key) {
    return trace(plain, key, false);
}

std::vector<VigenereTraceRow> vigenere_decrypt_trace(const NormalizedText& cipher, const VigenereKey& key) {
    return trace(cipher, key, true);
}

const VigenereSquare& build_square() {
    static const VigenereSquare square;
    return square;
}

NormalizedText square_encrypt(const NormalizedText& plain, const VigenereKey& key) {
    const VigenereSquare& square = build_square();
    TextBuilder out(plain.size());
    for (std::size_t i = 0; i < plain.size(); ++i) {
        out.push_back(square.at(plain[i], key.keyword()[i % key.size()]));
    }
    return std::move(out).finish();
}

}  // namespace cryptobench

#include "cryptobench/caesar.hpp"

namespace cryptobench {

namespace {

int mod26(long long v) {
    const long long r = v % kAlphabetSize;
    return static_cast<int>(r < 0 ? r + kAlphabetSize : r);
}

std::vector<CaesarTraceRow> trace(const NormalizedText& text, int delta) {
    std::vector<CaesarTraceRow> rows;
    rows.reserve(text.size());
    for (char letter : text) {
        const int value = letter_to_index(letter, kCaesarIndexing);
        const int out = mod26(value + delta);
        rows.push_back({letter, value, out, index_to_letter(out, kCaesarIndexing)});
    }
    return rows;
}

NormalizedText shift_text(const NormalizedText& text, int delta) {
    TextBuilder out(text.size());
    for (char letter : text) {
        const int value = letter_to_index(letter, kCaesarIndexing);
        out.push_back(index_to_letter(mod26(value + delta), kCaesarIndexing));
    }
    return std::move(out).finish();
}

}  // namespace

CaesarKey::CaesarKey(long long shift) : shift_(mod26(shift)) {}

NormalizedText caesar_encrypt(const NormalizedText& plain, CaesarKey key) {
    return shift_text(plain, key.shift());
}

NormalizedText caesar_decrypt(const NormalizedText& cipher, CaesarKey key) {
    return shift_text(cipher, -key.shift());
}

std::vector<CaesarTraceRow> caesar_encrypt_trace(const NormalizedText& plain, CaesarKey key) {
    return trace(plain, key.shift());
}

std::vector<CaesarTraceRow> caesar_decrypt_trace(const NormalizedText& cipher, CaesarKey key) {
    return trace(cipher, -key.shift());
}

}  // namespace cryptobench

#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cryptobench/textcodec.hpp"

namespace cryptobench {

inline constexpr Indexing kVigenereIndexing = Indexing::ZeroBased;

/// Nonempty keyword. Construction normalizes the input; a keyword with no
/// letters throws EmptyKey.
class VigenereKey {
public:
    explicit VigenereKey(std::string_view keyword);
    explicit VigenereKey(NormalizedText keyword);

    const NormalizedText& keyword() const noexcept { return keyword_; }
    std::size_t size() const noexcept { return keyword_.size(); }
    /// ZeroBased shift of the keyword letter used at plaintext position i.
    int shift_at(std::size_t i) const { return keyword_[i % keyword_.size()] - 'A'; }

    friend bool operator==(const VigenereKey&, const VigenereKey&) = default;

private:
    NormalizedText keyword_;
};

/// The 26x26 tableau: row r is the alphabet rotated left by r.
class VigenereSquare {
public:
    VigenereSquare();

    char at(char row, char column) const;
    std::string row(char row) const;

private:
    std::array<std::array<char, kAlphabetSize>, kAlphabetSize> cells_{};
};

/// Rows of a worked table. `raw` is the value before reduction mod 26
/// (p + k when encrypting, c + (26 - k) when decrypting).
struct VigenereTraceRow {
    char key_letter;
    int key_value;
    char input;
    int input_value;
    int raw;
    int reduced;
    char output;
};

/// `key` repeated and cut to exactly `length` letters.
NormalizedText expand_key(const VigenereKey& key, std::size_t length);

NormalizedText vigenere_encrypt(const NormalizedText& plain, const VigenereKey& key);
NormalizedText vigenere_decrypt(const NormalizedText& cipher, const VigenereKey& key);

std::vector<VigenereTraceRow> vigenere_encrypt_trace(const NormalizedText& plain, const VigenereKey& key);
std::vector<VigenereTraceRow> vigenere_decrypt_trace(const NormalizedText& cipher, const VigenereKey& key);

const VigenereSquare& build_square();

/// Encrypts by looking each letter up in the tableau (plaintext row, key column).
/// Must agree with vigenere_encrypt everywhere.
NormalizedText square_encrypt(const NormalizedText& plain, const VigenereKey& key);

}  // namespace cryptobench

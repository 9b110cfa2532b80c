#pragma once

#include <vector>

#include "cryptobench/textcodec.hpp"

namespace cryptobench {

// Letters are numbered A=1..Z=26 here so traces show the same intermediate
// values a hand worked table would; residue 0 decodes to Z.
inline constexpr Indexing kCaesarIndexing = Indexing::OneBased;

class CaesarKey {
public:
    /// Any integer shift; stored reduced into 0..25.
    explicit CaesarKey(long long shift = 0);

    int shift() const noexcept { return shift_; }

    friend bool operator==(CaesarKey, CaesarKey) = default;

private:
    int shift_;
};

/// One row of a worked encryption or decryption: input letter, its value,
/// the reduced result value, output letter.
struct CaesarTraceRow {
    char input;
    int input_value;
    int output_value;
    char output;
};

NormalizedText caesar_encrypt(const NormalizedText& plain, CaesarKey key);
NormalizedText caesar_decrypt(const NormalizedText& cipher, CaesarKey key);

std::vector<CaesarTraceRow> caesar_encrypt_trace(const NormalizedText& plain, CaesarKey key);
std::vector<CaesarTraceRow> caesar_decrypt_trace(const NormalizedText& cipher, CaesarKey key);

}  // namespace cryptobench

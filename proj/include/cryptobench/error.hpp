#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cryptobench {

// Every failure the library reports. The CLI prints the enumerator name, so
// renaming one is a breaking change for scripts that grep diagnostics.
enum class ErrorCode {
    InvalidLetter,
    InvalidIndex,
    UndefinedGcd,
    NoInverse,
    InvalidModulus,
    NotPrime,
    DistinctPrimesRequired,
    EmptyKey,
    InvalidPublicExponent,
    InvalidPrivateExponent,
    MessageOutOfRange,
    LetterOutOfRange,
    DecodedValueNotALetter,
    EmptyText,
    TextTooShort,
    InvalidKeyLength,
    NotSemiprime,
    ModulusTooLarge,
    MalformedKeyFile,
    MalformedFrequencyTable,
    MalformedCipherStream,
};

std::string_view to_string(ErrorCode code) noexcept;

class CryptoError : public std::runtime_error {
public:
    CryptoError(ErrorCode code, const std::string& detail);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace cryptobench

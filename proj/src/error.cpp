#include "cryptobench/error.hpp"

namespace cryptobench {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidLetter: return "InvalidLetter";
        case ErrorCode::InvalidIndex: return "InvalidIndex";
        case ErrorCode::UndefinedGcd: return "UndefinedGcd";
        case ErrorCode::NoInverse: return "NoInverse";
        case ErrorCode::InvalidModulus: return "InvalidModulus";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::DistinctPrimesRequired: return "DistinctPrimesRequired";
        case ErrorCode::EmptyKey: return "EmptyKey";
        case ErrorCode::InvalidPublicExponent: return "InvalidPublicExponent";
        case ErrorCode::InvalidPrivateExponent: return "InvalidPrivateExponent";
        case ErrorCode::MessageOutOfRange: return "MessageOutOfRange";
        case ErrorCode::LetterOutOfRange: return "LetterOutOfRange";
        case ErrorCode::DecodedValueNotALetter: return "DecodedValueNotALetter";
        case ErrorCode::EmptyText: return "EmptyText";
        case ErrorCode::TextTooShort: return "TextTooShort";
        case ErrorCode::InvalidKeyLength: return "InvalidKeyLength";
        case ErrorCode::NotSemiprime: return "NotSemiprime";
        case ErrorCode::ModulusTooLarge: return "ModulusTooLarge";
        case ErrorCode::MalformedKeyFile: return "MalformedKeyFile";
        case ErrorCode::MalformedFrequencyTable: return "MalformedFrequencyTable";
        case ErrorCode::MalformedCipherStream: return "MalformedCipherStream";
    }
    return "Unknown";
}

CryptoError::CryptoError(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace cryptobench

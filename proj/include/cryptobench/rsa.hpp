#pragma once

// Textbook RSA: no padding, deterministic key generation from caller-chosen
// primes, and the letter-at-a-time encoding (A=1 .. Z=26) used for small demos.
// None of this is secure; the cryptanalysis module shows why.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cryptobench/numtheory.hpp"
#include "cryptobench/textcodec.hpp"

namespace cryptobench {

inline constexpr Indexing kRsaIndexing = Indexing::OneBased;

struct RsaPublicKey {
    BigInt e;
    BigInt n;
    friend bool operator==(const RsaPublicKey&, const RsaPublicKey&) = default;
};

struct RsaPrivateKey {
    BigInt d;
    BigInt n;
    friend bool operator==(const RsaPrivateKey&, const RsaPrivateKey&) = default;
};

struct RsaKeyPair {
    BigInt p;
    BigInt q;
    BigInt n;
    BigInt phi;
    RsaPublicKey public_key;
    RsaPrivateKey private_key;
};

/// Builds a key pair from two distinct primes.
///
/// When `e` is omitted the smallest e > 1 coprime to phi is chosen. When `d` is
/// omitted it is the least positive inverse of e mod phi; a supplied d is
/// accepted if e*d = 1 (mod phi), so any member of the residue class works.
RsaKeyPair generate_keypair(const BigInt& p, const BigInt& q,
                            std::optional<BigInt> e = std::nullopt,
                            std::optional<BigInt> d = std::nullopt);

/// Throws std::logic_error if any key pair invariant is violated.
void check_keypair(const RsaKeyPair& pair);

BigInt rsa_encrypt_value(const BigInt& m, const RsaPublicKey& key);
BigInt rsa_decrypt_value(const BigInt& c, const RsaPrivateKey& key);

/// Encrypts each letter's A=1..Z=26 value separately. Every value must be
/// below n, otherwise LetterOutOfRange.
std::vector<BigInt> rsa_encrypt_text(const NormalizedText& plain, const RsaPublicKey& key);
NormalizedText rsa_decrypt_text(const std::vector<BigInt>& cipher, const RsaPrivateKey& key);

// Key files are one line: "rsa-public <e> <n>\n" or "rsa-private <d> <n>\n".
std::string format_key_file(const RsaPublicKey& key);
std::string format_key_file(const RsaPrivateKey& key);
RsaPublicKey parse_public_key_file(std::string_view contents);
RsaPrivateKey parse_private_key_file(std::string_view contents);

// Ciphertext streams are decimal integers separated by single spaces.
std::string format_cipher_stream(const std::vector<BigInt>& values);
/// Accepts any run of ASCII whitespace between values.
std::vector<BigInt> parse_cipher_stream(std::string_view text);

}  // namespace cryptobench

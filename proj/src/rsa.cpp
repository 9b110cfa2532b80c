#include "cryptobench/rsa.hpp"

#include <stdexcept>

#include "cryptobench/error.hpp"

namespace cryptobench {

namespace {

void require_below_modulus(const BigInt& value, const BigInt& n) {
    if (value < 0 || value >= n) {
        throw CryptoError(ErrorCode::MessageOutOfRange,
                          value.str() + " is outside 0.." + BigInt(n - 1).str());
    }
}

bool is_decimal(std::string_view token) {
    if (token.empty()) return false;
    for (char c : token) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

BigInt parse_decimal(std::string_view token) { return BigInt(std::string(token)); }

// "<tag> <a> <b>" with single spaces and an optional trailing newline.
std::pair<BigInt, BigInt> parse_key_line(std::string_view contents, std::string_view tag) {
    std::string_view line = contents;
    if (!line.empty() && line.back() == '\n') line.remove_suffix(1);

    const auto malformed = [&](const std::string& why) {
        return CryptoError(ErrorCode::MalformedKeyFile,
                           "expected '" + std::string(tag) + " <int> <int>': " + why);
    };

    const auto first = line.find(' ');
    if (first == std::string_view::npos) throw malformed("missing fields");
    const auto second = line.find(' ', first + 1);
    if (second == std::string_view::npos) throw malformed("missing fields");

    const std::string_view head = line.substr(0, first);
    const std::string_view a = line.substr(first + 1, second - first - 1);
    const std::string_view b = line.substr(second + 1);
    if (head != tag) throw malformed("found tag '" + std::string(head) + "'");
    if (!is_decimal(a) || !is_decimal(b)) throw malformed("fields must be unsigned decimal integers");

    BigInt x = parse_decimal(a);
    BigInt n = parse_decimal(b);
    if (x < 1 || n < 2) throw malformed("exponent must be >= 1 and modulus >= 2");
    return {std::move(x), std::move(n)};
}

}  // namespace

RsaKeyPair generate_keypair(const BigInt& p, const BigInt& q, std::optional<BigInt> e,
                            std::optional<BigInt> d) {
    // totient_semiprime validates primality and distinctness.
    const BigInt phi = totient_semiprime(p, q);
    const BigInt n = p * q;

    BigInt chosen_e;
    if (e) {
        if (*e <= 1 || *e >= phi || gcd(*e, phi) != 1) {
            throw CryptoError(ErrorCode::InvalidPublicExponent,
                              "e = " + e->str() + " must satisfy 1 < e < " + phi.str() +
                                  " and gcd(e, " + phi.str() + ") = 1");
        }
        chosen_e = *e;
    } else {
        for (BigInt candidate = 2; candidate < phi; ++candidate) {
            if (gcd(candidate, phi) == 1) {
                chosen_e = candidate;
                break;
            }
        }
        if (chosen_e == 0) {
            throw CryptoError(ErrorCode::InvalidPublicExponent,
                              "no e with 1 < e < " + phi.str() + " exists for p = " + p.str() +
                                  ", q = " + q.str());
        }
    }

    BigInt chosen_d;
    if (d) {
        if (*d < 1 || (chosen_e * *d) % phi != 1) {
            throw CryptoError(ErrorCode::InvalidPrivateExponent,
                              "d = " + d->str() + " does not satisfy e*d = 1 (mod " + phi.str() + ")");
        }
        chosen_d = *d;
    } else {
        chosen_d = mod_inverse(chosen_e, phi);
    }

    RsaKeyPair pair{p, q, n, phi, {chosen_e, n}, {chosen_d, n}};
    check_keypair(pair);
    return pair;
}

void check_keypair(const RsaKeyPair& pair) {
    const auto fail = [](const char* what) { throw std::logic_error(std::string("RSA key pair: ") + what); };
    if (pair.n != pair.p * pair.q) fail("n != p*q");
    if (pair.phi != (pair.p - 1) * (pair.q - 1)) fail("phi != (p-1)(q-1)");
    const BigInt& e = pair.public_key.e;
    if (!(e > 1 && e < pair.phi)) fail("e outside (1, phi)");
    if (gcd(e, pair.phi) != 1) fail("gcd(e, phi) != 1");
    if (pair.private_key.d < 1 || (e * pair.private_key.d) % pair.phi != 1) fail("e*d != 1 mod phi");
    if (pair.public_key.n != pair.n || pair.private_key.n != pair.n) fail("key modulus mismatch");
}

BigInt rsa_encrypt_value(const BigInt& m, const RsaPublicKey& key) {
    require_below_modulus(m, key.n);
    return mod_pow(m, key.e, key.n);
}

BigInt rsa_decrypt_value(const BigInt& c, const RsaPrivateKey& key) {
    require_below_modulus(c, key.n);
    return mod_pow(c, key.d, key.n);
}

std::vector<BigInt> rsa_encrypt_text(const NormalizedText& plain, const RsaPublicKey& key) {
    std::vector<BigInt> out;
    out.reserve(plain.size());
    for (char letter : plain) {
        const int value = letter_to_index(letter, kRsaIndexing);
        if (value >= key.n) {
            throw CryptoError(ErrorCode::LetterOutOfRange,
                              "letter '" + std::string(1, letter) + "' has value " +
                                  std::to_string(value) + ", which is not below n = " + key.n.str());
        }
        out.push_back(rsa_encrypt_value(value, key));
    }
    return out;
}

NormalizedText rsa_decrypt_text(const std::vector<BigInt>& cipher, const RsaPrivateKey& key) {
    TextBuilder out(cipher.size());
    for (const BigInt& c : cipher) {
        const BigInt m = rsa_decrypt_value(c, key);
        if (m < 1 || m > kAlphabetSize) {
            throw CryptoError(ErrorCode::DecodedValueNotALetter,
                              c.str() + " decrypts to " + m.str() + ", outside 1..26");
        }
        out.push_back(index_to_letter(static_cast<int>(m), kRsaIndexing));
    }
    return std::move(out).finish();
}

std::string format_key_file(const RsaPublicKey& key) {
    return "rsa-public " + key.e.str() + " " + key.n.str() + "\n";
}

std::string format_key_file(const RsaPrivateKey& key) {
    return "rsa-private " + key.d.str() + " " + key.n.str() + "\n";
}

RsaPublicKey parse_public_key_file(std::string_view contents) {
    auto [e, n] = parse_key_line(contents, "rsa-public");
    return {std::move(e), std::move(n)};
}

RsaPrivateKey parse_private_key_file(std::string_view contents) {
    auto [d, n] = parse_key_line(contents, "rsa-private");
    return {std::move(d), std::move(n)};
}

std::string format_cipher_stream(const std::vector<BigInt>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) out.push_back(' ');
        out += values[i].str();
    }
    return out;
}

std::vector<BigInt> parse_cipher_stream(std::string_view text) {
    std::vector<BigInt> values;
    std::size_t i = 0;
    const auto is_space = [](char c) { return c == ' ' || c == '\n' || c == '\t' || c == '\r'; };
    while (i < text.size()) {
        while (i < text.size() && is_space(text[i])) ++i;
        const std::size_t start = i;
        while (i < text.size() && !is_space(text[i])) ++i;
        if (start == i) break;
        const std::string_view token = text.substr(start, i - start);
        if (!is_decimal(token)) {
            throw CryptoError(ErrorCode::MalformedCipherStream,
                              "'" + std::string(token) + "' is not an unsigned decimal integer");
        }
        values.push_back(parse_decimal(token));
    }
    return values;
}

}  // namespace cryptobench

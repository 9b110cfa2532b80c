#include <gtest/gtest.h>

#include <random>

#include "cryptobench/rsa.hpp"
#include "support/expect_error.hpp"
#include "support/oracles.hpp"

using namespace cryptobench;

TEST(Keygen, WorkedExample) {
    const auto pair = generate_keypair(2, 7, BigInt(5), BigInt(11));
    EXPECT_EQ(pair.n, 14);
    EXPECT_EQ(pair.phi, 6);
    EXPECT_EQ(pair.public_key, (RsaPublicKey{5, 14}));
    EXPECT_EQ(pair.private_key, (RsaPrivateKey{11, 14}));
}

TEST(Keygen, LeastInverseWhenDOmitted) {
    EXPECT_EQ(generate_keypair(2, 7, BigInt(5)).private_key.d, 5);
}

TEST(Keygen, SmallestValidExponentWhenEOmitted) {
    const auto pair = generate_keypair(3, 11);
    EXPECT_EQ(pair.phi, 20);
    EXPECT_EQ(pair.public_key.e, 3);
    EXPECT_EQ(pair.private_key.d, 7);
    EXPECT_EQ(generate_keypair(2, 7).public_key.e, 5);
}

TEST(Keygen, Errors) {
    EXPECT_CRYPTO_ERROR(generate_keypair(4, 7), ErrorCode::NotPrime);
    EXPECT_CRYPTO_ERROR(generate_keypair(7, 7), ErrorCode::DistinctPrimesRequired);
    EXPECT_CRYPTO_ERROR(generate_keypair(2, 7, BigInt(3)), ErrorCode::InvalidPublicExponent);
    EXPECT_CRYPTO_ERROR(generate_keypair(2, 7, BigInt(1)), ErrorCode::InvalidPublicExponent);
    EXPECT_CRYPTO_ERROR(generate_keypair(2, 7, BigInt(7)), ErrorCode::InvalidPublicExponent);
    EXPECT_CRYPTO_ERROR(generate_keypair(2, 7, BigInt(5), BigInt(7)), ErrorCode::InvalidPrivateExponent);
    EXPECT_CRYPTO_ERROR(generate_keypair(2, 7, BigInt(5), BigInt(0)), ErrorCode::InvalidPrivateExponent);
    EXPECT_CRYPTO_ERROR(generate_keypair(2, 3), ErrorCode::InvalidPublicExponent);
}

TEST(Keygen, InterchangeablePrivateExponents) {
    for (int d : {5, 11, 17}) {
        const auto pair = generate_keypair(2, 7, BigInt(5), BigInt(d));
        for (int m = 0; m < 14; ++m) {
            EXPECT_EQ(rsa_decrypt_value(rsa_encrypt_value(m, pair.public_key), pair.private_key), m) << "d=" << d;
        }
    }
}

TEST(RsaValue, WorkedExamples) {
    const RsaPublicKey pub{5, 14};
    EXPECT_EQ(rsa_encrypt_value(2, pub), 4);
    EXPECT_EQ(BigInt(32) % 14, 4);
    EXPECT_EQ(rsa_decrypt_value(4, RsaPrivateKey{11, 14}), 2);
    EXPECT_EQ(BigInt(4194304) % 14, 2);
    EXPECT_EQ(rsa_decrypt_value(4, RsaPrivateKey{5, 14}), 2);
    EXPECT_EQ(rsa_encrypt_value(9, pub), 59049 % 14);
    EXPECT_EQ(rsa_encrypt_value(9, pub), 11);
    EXPECT_EQ(rsa_encrypt_value(0, pub), 0);
    EXPECT_EQ(rsa_encrypt_value(1, pub), 1);
    EXPECT_EQ(rsa_decrypt_value(0, RsaPrivateKey{11, 14}), 0);
}

TEST(RsaValue, OutOfRange) {
    EXPECT_CRYPTO_ERROR(rsa_encrypt_value(14, RsaPublicKey{5, 14}), ErrorCode::MessageOutOfRange);
    EXPECT_CRYPTO_ERROR(rsa_encrypt_value(-1, RsaPublicKey{5, 14}), ErrorCode::MessageOutOfRange);
    EXPECT_CRYPTO_ERROR(rsa_decrypt_value(20, RsaPrivateKey{11, 14}), ErrorCode::MessageOutOfRange);
}

TEST(RsaText, Examples) {
    const RsaPublicKey pub{5, 14};
    const RsaPrivateKey priv{11, 14};
    EXPECT_EQ(rsa_encrypt_text(normalize("B"), pub), std::vector<BigInt>{4});
    EXPECT_TRUE(rsa_encrypt_text(normalize(""), pub).empty());
    EXPECT_EQ(rsa_encrypt_text(normalize("AB"), pub), (std::vector<BigInt>{1, 4}));
    EXPECT_EQ(rsa_decrypt_text({4}, priv).str(), "B");
    EXPECT_TRUE(rsa_decrypt_text({}, priv).empty());
    EXPECT_EQ(rsa_decrypt_text({1, 4}, priv).str(), "AB");
}

TEST(RsaText, Errors) {
    EXPECT_CRYPTO_ERROR(rsa_encrypt_text(normalize("Z"), RsaPublicKey{5, 14}), ErrorCode::LetterOutOfRange);
    EXPECT_CRYPTO_ERROR(rsa_encrypt_text(normalize("N"), RsaPublicKey{5, 14}), ErrorCode::LetterOutOfRange);
    EXPECT_CRYPTO_ERROR(rsa_decrypt_text({0}, RsaPrivateKey{11, 14}), ErrorCode::DecodedValueNotALetter);
    // n = 33: ciphertext of 30 decodes to a value above 26.
    const auto pair = generate_keypair(3, 11);
    const BigInt c = rsa_encrypt_value(30, pair.public_key);
    EXPECT_CRYPTO_ERROR(rsa_decrypt_text({c}, pair.private_key), ErrorCode::DecodedValueNotALetter);
}

TEST(RsaText, WholeAlphabetRoundtripWithLargerModulus) {
    const auto pair = generate_keypair(61, 53, BigInt(17));
    const auto plain = normalize("The quick brown fox jumps over the lazy dog");
    EXPECT_EQ(rsa_decrypt_text(rsa_encrypt_text(plain, pair.public_key), pair.private_key), plain);
}

TEST(RsaProperty, RoundtripAllMessagesSampledPrimePairs) {
    const auto primes = oracle::primes_up_to(1000);
    std::mt19937_64 rng(808);
    std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
    int checked = 0;
    while (checked < 40) {
        const std::uint64_t p = primes[pick(rng)], q = primes[pick(rng)];
        if (p == q || p * q > 1'000'000 || p * q < 6) continue;
        const auto pair = generate_keypair(p, q);
        const std::uint64_t n = p * q;
        const std::uint64_t e = static_cast<std::uint64_t>(pair.public_key.e);
        const std::uint64_t d = static_cast<std::uint64_t>(pair.private_key.d);
        for (std::uint64_t m = 0; m < n; ++m) {
            ASSERT_EQ(mod_pow_u64(mod_pow_u64(m, e, n), d, n), m) << "n=" << n << " m=" << m;
        }
        // BigInt path on a sample of the same messages.
        for (std::uint64_t m = 0; m < n; m += n / 50 + 1) {
            ASSERT_EQ(rsa_decrypt_value(rsa_encrypt_value(m, pair.public_key), pair.private_key), m);
        }
        ++checked;
    }
}

TEST(RsaProperty, KeygenInvariantsOverManyPairs) {
    const auto primes = oracle::primes_up_to(200);
    for (std::size_t i = 0; i < primes.size(); ++i) {
        for (std::size_t j = i + 1; j < primes.size(); ++j) {
            if (primes[i] == 2 && primes[j] == 3) continue;
            const auto pair = generate_keypair(primes[i], primes[j]);
            EXPECT_NO_THROW(check_keypair(pair));
            EXPECT_EQ((pair.public_key.e * pair.private_key.d) % pair.phi, 1);
        }
    }
}

TEST(CheckKeypair, DetectsTampering) {
    auto pair = generate_keypair(2, 7, BigInt(5), BigInt(11));
    pair.private_key.d = 7;
    EXPECT_THROW(check_keypair(pair), std::logic_error);
    pair = generate_keypair(2, 7, BigInt(5), BigInt(11));
    pair.public_key.n = 15;
    EXPECT_THROW(check_keypair(pair), std::logic_error);
}

TEST(KeyFile, FormatAndParse) {
    EXPECT_EQ(format_key_file(RsaPublicKey{5, 14}), "rsa-public 5 14\n");
    EXPECT_EQ(format_key_file(RsaPrivateKey{11, 14}), "rsa-private 11 14\n");
    EXPECT_EQ(parse_public_key_file("rsa-public 5 14\n"), (RsaPublicKey{5, 14}));
    EXPECT_EQ(parse_public_key_file("rsa-public 5 14"), (RsaPublicKey{5, 14}));
    EXPECT_EQ(parse_private_key_file("rsa-private 11 14\n"), (RsaPrivateKey{11, 14}));
    const BigInt big("123456789012345678901234567890");
    EXPECT_EQ(parse_public_key_file(format_key_file(RsaPublicKey{65537, big})), (RsaPublicKey{65537, big}));
}

TEST(KeyFile, Malformed) {
    for (const char* bad : {"", "rsa-public", "rsa-public 5", "rsa-public 5 14 1", "rsa-public  5 14",
                            "rsa-public 5 14 \n", "rsa-public -5 14", "rsa-public 5 x", "rsa-public 0 14",
                            "rsa-public 5 1", "rsa-private 5 14", "rsa-public 5 14\r\n", "RSA-PUBLIC 5 14"}) {
        EXPECT_CRYPTO_ERROR(parse_public_key_file(bad), ErrorCode::MalformedKeyFile) << "'" << bad << "'";
    }
    EXPECT_CRYPTO_ERROR(parse_private_key_file("rsa-public 5 14\n"), ErrorCode::MalformedKeyFile);
}

TEST(CipherStream, FormatAndParse) {
    EXPECT_EQ(format_cipher_stream({1, 4, 13}), "1 4 13");
    EXPECT_EQ(format_cipher_stream({}), "");
    EXPECT_EQ(parse_cipher_stream("1 4 13"), (std::vector<BigInt>{1, 4, 13}));
    EXPECT_EQ(parse_cipher_stream("  1\n4\t 13\n"), (std::vector<BigInt>{1, 4, 13}));
    EXPECT_TRUE(parse_cipher_stream("  \n").empty());
    EXPECT_CRYPTO_ERROR(parse_cipher_stream("1 x 3"), ErrorCode::MalformedCipherStream);
    EXPECT_CRYPTO_ERROR(parse_cipher_stream("1 -3"), ErrorCode::MalformedCipherStream);
    EXPECT_CRYPTO_ERROR(parse_cipher_stream("1,3"), ErrorCode::MalformedCipherStream);
}

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "cryptobench/numtheory.hpp"
#include "support/expect_error.hpp"
#include "support/oracles.hpp"

using namespace cryptobench;

TEST(EuclidChain, QuotientChainForWorkedExample) {
    const auto steps = euclid_chain(270, 192);
    ASSERT_EQ(steps.size(), 4u);
    const int expected[4][4] = {{270, 192, 1, 78}, {192, 78, 2, 36}, {78, 36, 2, 6}, {36, 6, 6, 0}};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(steps[i].dividend, expected[i][0]);
        EXPECT_EQ(steps[i].divisor, expected[i][1]);
        EXPECT_EQ(steps[i].quotient, expected[i][2]);
        EXPECT_EQ(steps[i].remainder, expected[i][3]);
    }
}

TEST(EuclidChain, SmallerFirstArgumentSwapsInOneStep) {
    const auto steps = euclid_chain(192, 270);
    ASSERT_FALSE(steps.empty());
    EXPECT_EQ(steps.front().quotient, 0);
    EXPECT_EQ(steps.front().remainder, 192);
    EXPECT_EQ(steps.back().divisor, 6);
}

TEST(EuclidChain, ZeroDivisorIsEmpty) {
    EXPECT_TRUE(euclid_chain(9, 0).empty());
    EXPECT_CRYPTO_ERROR(euclid_chain(0, 0), ErrorCode::UndefinedGcd);
}

TEST(Gcd, Examples) {
    EXPECT_EQ(gcd(270, 192), 6);
    EXPECT_EQ(gcd(18, 35), 1);
    EXPECT_EQ(gcd(17, 0), 17);
    EXPECT_EQ(gcd(0, 17), 17);
    EXPECT_CRYPTO_ERROR(gcd(0, 0), ErrorCode::UndefinedGcd);
}

TEST(Gcd, NegativeInputRejected) { EXPECT_THROW(gcd(-4, 6), std::domain_error); }

TEST(Gcd, MatchesExhaustiveSearch) {
    for (std::uint64_t a = 0; a <= 60; ++a) {
        for (std::uint64_t b = 0; b <= 60; ++b) {
            if (a == 0 && b == 0) continue;
            EXPECT_EQ(gcd(a, b), oracle::naive_gcd(a, b)) << a << "," << b;
        }
    }
}

TEST(ExtendedGcd, Examples) {
    const auto t = extended_gcd(270, 192);
    EXPECT_EQ(t.g, 6);
    EXPECT_EQ(270 * t.x + 192 * t.y, 6);

    const auto u = extended_gcd(5, 6);
    EXPECT_EQ(u.g, 1);
    EXPECT_EQ(5 * u.x + 6 * u.y, 1);

    const auto v = extended_gcd(1, 0);
    EXPECT_EQ(v.g, 1);
    EXPECT_EQ(v.x, 1);
    EXPECT_EQ(v.y, 0);

    EXPECT_CRYPTO_ERROR(extended_gcd(0, 0), ErrorCode::UndefinedGcd);
}

TEST(ExtendedGcd, BezoutIdentityRandom) {
    std::mt19937_64 rng(0xB0u);
    std::uniform_int_distribution<std::uint64_t> dist(0, 1'000'000'000'000ULL);
    for (int i = 0; i < 2000; ++i) {
        const BigInt a = dist(rng), b = dist(rng);
        if (a == 0 && b == 0) continue;
        const auto t = extended_gcd(a, b);
        EXPECT_EQ(a * t.x + b * t.y, t.g);
        EXPECT_EQ(t.g, gcd(a, b));
    }
}

TEST(ExtendedGcd, BezoutIdentityBeyond64Bits) {
    const BigInt a("340282366920938463463374607431768211507");
    const BigInt b("18446744073709551629");
    const auto t = extended_gcd(a, b);
    EXPECT_EQ(a * t.x + b * t.y, t.g);
}

TEST(ModInverse, Examples) {
    EXPECT_EQ(mod_inverse(5, 6), 5);
    EXPECT_EQ(mod_inverse(1, 97), 1);
    EXPECT_EQ(mod_inverse(7, 40), 23);
    EXPECT_EQ(mod_inverse(47, 40), 23);
}

TEST(ModInverse, Errors) {
    EXPECT_CRYPTO_ERROR(mod_inverse(4, 6), ErrorCode::NoInverse);
    EXPECT_CRYPTO_ERROR(mod_inverse(6, 6), ErrorCode::NoInverse);
    EXPECT_CRYPTO_ERROR(mod_inverse(3, 1), ErrorCode::InvalidModulus);
    EXPECT_CRYPTO_ERROR(mod_inverse(3, 0), ErrorCode::InvalidModulus);
}

TEST(ModInverse, MatchesBruteForce) {
    for (std::uint64_t m = 2; m <= 120; ++m) {
        for (std::uint64_t e = 1; e < m; ++e) {
            const auto want = oracle::brute_inverse(e, m);
            if (want == 0) {
                EXPECT_CRYPTO_ERROR(mod_inverse(e, m), ErrorCode::NoInverse);
            } else {
                EXPECT_EQ(mod_inverse(e, m), want) << e << " mod " << m;
            }
        }
    }
}

TEST(ModInverse, AlternativeExponentsShareResidueClass) {
    for (int d : {5, 11, 17}) EXPECT_EQ((5 * d) % 6, 1);
}

TEST(ModPow, Examples) {
    EXPECT_EQ(mod_pow(2, 5, 14), 4);
    EXPECT_EQ(mod_pow(4, 11, 14), 2);
    EXPECT_EQ(mod_pow(123, 0, 7), 1);
    EXPECT_EQ(mod_pow(123, 0, 1), 0);
    EXPECT_EQ(mod_pow(0, 0, 5), 1);
    EXPECT_CRYPTO_ERROR(mod_pow(2, 3, 0), ErrorCode::InvalidModulus);
}

TEST(ModPow, MatchesNaiveOnSmallGrid) {
    for (std::uint64_t b = 0; b <= 12; ++b) {
        for (std::uint64_t e = 0; e <= 12; ++e) {
            for (std::uint64_t m = 1; m <= 100; ++m) {
                ASSERT_EQ(mod_pow(b, e, m), oracle::naive_pow_mod(b, e, m)) << b << "^" << e << " mod " << m;
            }
        }
    }
}

TEST(ModPow, LargeOperands) {
    // Fermat: a^(p-1) = 1 mod p for the Mersenne prime 2^127 - 1.
    const BigInt p = (BigInt(1) << 127) - 1;
    EXPECT_EQ(mod_pow(3, p - 1, p), 1);
    EXPECT_EQ(mod_pow(BigInt(4), 11, BigInt(14)), 4194304 % 14);
}

TEST(ModPowU64, AgreesWithBigInt) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 3000; ++i) {
        const std::uint64_t b = rng(), e = rng() % 100000, m = rng() | 1;
        EXPECT_EQ(BigInt(mod_pow_u64(b, e, m)), mod_pow(b, e, m));
    }
}

TEST(MulModU64, NoOverflow) {
    const std::uint64_t m = 0xFFFFFFFFFFFFFFC5ULL;
    const std::uint64_t a = m - 1, b = m - 2;
    EXPECT_EQ(BigInt(mul_mod_u64(a, b, m)), (BigInt(a) * b) % m);
}

TEST(Totient, Examples) {
    EXPECT_EQ(totient_semiprime(2, 7), 6);
    EXPECT_EQ(totient_semiprime(3, 5), 8);
    EXPECT_EQ(totient_semiprime(2, 3), 2);
    EXPECT_CRYPTO_ERROR(totient_semiprime(4, 7), ErrorCode::NotPrime);
    EXPECT_CRYPTO_ERROR(totient_semiprime(7, 1), ErrorCode::NotPrime);
    EXPECT_CRYPTO_ERROR(totient_semiprime(7, 7), ErrorCode::DistinctPrimesRequired);
}

TEST(Totient, MatchesCoprimeCount) {
    const auto primes = oracle::primes_up_to(500);
    for (std::size_t i = 0; i < primes.size(); ++i) {
        for (std::size_t j = i + 1; j < primes.size() && primes[i] * primes[j] <= 1000; ++j) {
            const std::uint64_t n = std::uint64_t{primes[i]} * primes[j];
            EXPECT_EQ(totient_semiprime(primes[i], primes[j]), oracle::coprime_count_below(n));
        }
    }
}

TEST(IsPrime, Examples) {
    EXPECT_TRUE(is_prime(7));
    EXPECT_FALSE(is_prime(14));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(0));
    EXPECT_TRUE(is_prime(2));
}

TEST(IsPrime, MatchesSieve) {
    const auto composite = oracle::sieve(100'000);
    for (std::uint32_t n = 0; n <= 100'000; ++n) {
        ASSERT_EQ(is_prime(n), !composite[n]) << n;
        ASSERT_EQ(is_prime_u64(n), !composite[n]) << n;
    }
}

TEST(IsPrime, LargerValues) {
    EXPECT_TRUE(is_prime(BigInt(1'000'000'007)));
    EXPECT_FALSE(is_prime(BigInt(1'000'000'007) * 3));
    EXPECT_TRUE(is_prime_u64(999'999'999'989ULL));
    EXPECT_FALSE(is_prime_u64(999'983ULL * 999'979ULL));
    EXPECT_FALSE(is_prime(BigInt(999'983) * 999'979));
}

TEST(Coprime, Examples) {
    EXPECT_TRUE(are_coprime(18, 35));
    EXPECT_TRUE(are_coprime(5, 6));
    EXPECT_FALSE(are_coprime(4, 6));
    EXPECT_THROW(are_coprime(0, 6), std::domain_error);
}

TEST(FitsU64, Boundaries) {
    std::uint64_t v = 0;
    EXPECT_TRUE(fits_u64(BigInt(0), v));
    EXPECT_EQ(v, 0u);
    EXPECT_TRUE(fits_u64(BigInt(UINT64_MAX), v));
    EXPECT_EQ(v, UINT64_MAX);
    EXPECT_FALSE(fits_u64(BigInt(UINT64_MAX) + 1, v));
    EXPECT_FALSE(fits_u64(BigInt(-1), v));
}

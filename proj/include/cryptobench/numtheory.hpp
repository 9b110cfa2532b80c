#pragma once

// Integer kernel behind RSA. All public entry points take arbitrary-precision
// integers; the *_u64 variants exist for the hot loops in kernels.hpp and the
// exhaustive sweeps in the test suites.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cryptobench {

using BigInt = boost::multiprecision::cpp_int;

/// One line of the Euclidean remainder chain: dividend = divisor * quotient + remainder.
struct EuclidStep {
    BigInt dividend;
    BigInt divisor;
    BigInt quotient;
    BigInt remainder;
};

/// a*x + b*y == g, g == gcd(a, b).
struct BezoutTriple {
    BigInt g;
    BigInt x;
    BigInt y;
};

/// Every division step of gcd(a, b), ending with the zero remainder.
/// Empty when b == 0. Throws UndefinedGcd for (0, 0).
std::vector<EuclidStep> euclid_chain(const BigInt& a, const BigInt& b);

BigInt gcd(const BigInt& a, const BigInt& b);

BezoutTriple extended_gcd(const BigInt& a, const BigInt& b);

/// Least positive d with (e * d) mod m == 1. Throws NoInverse when gcd(e, m) != 1
/// and InvalidModulus when m < 2.
BigInt mod_inverse(const BigInt& e, const BigInt& m);

/// base^exp mod m by left-to-right square-and-multiply; never forms base^exp.
BigInt mod_pow(const BigInt& base, const BigInt& exp, const BigInt& m);

/// (p-1)(q-1) for distinct primes p, q.
BigInt totient_semiprime(const BigInt& p, const BigInt& q);

/// Deterministic trial division up to sqrt(n).
bool is_prime(const BigInt& n);

bool are_coprime(const BigInt& a, const BigInt& b);

// Fixed-width helpers. m must be nonzero.
std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t mod_pow_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;
bool is_prime_u64(std::uint64_t n) noexcept;

/// True and stores the value when n is nonnegative and fits in 64 bits.
bool fits_u64(const BigInt& n, std::uint64_t& out) noexcept;

}  // namespace cryptobench

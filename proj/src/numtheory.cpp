#include "cryptobench/numtheory.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "cryptobench/error.hpp"

namespace cryptobench {

namespace {

__extension__ typedef unsigned __int128 u128;

void require_nonnegative(const BigInt& v, const char* what) {
    if (v < 0) {
        throw std::domain_error(std::string(what) + " must be nonnegative");
    }
}

void require_not_both_zero(const BigInt& a, const BigInt& b) {
    if (a == 0 && b == 0) {
        throw CryptoError(ErrorCode::UndefinedGcd, "gcd(0, 0) is undefined");
    }
}

}  // namespace

std::vector<EuclidStep> euclid_chain(const BigInt& a, const BigInt& b) {
    require_nonnegative(a, "a");
    require_nonnegative(b, "b");
    require_not_both_zero(a, b);

    std::vector<EuclidStep> steps;
    BigInt dividend = a;
    BigInt divisor = b;
    while (divisor != 0) {
        EuclidStep step{dividend, divisor, 0, 0};
        boost::multiprecision::divide_qr(dividend, divisor, step.quotient, step.remainder);
        dividend = divisor;
        divisor = step.remainder;
        steps.push_back(std::move(step));
    }
    return steps;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    require_nonnegative(a, "a");
    require_nonnegative(b, "b");
    require_not_both_zero(a, b);

    BigInt x = a;
    BigInt y = b;
    while (y != 0) {
        BigInt r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

BezoutTriple extended_gcd(const BigInt& a, const BigInt& b) {
    require_nonnegative(a, "a");
    require_nonnegative(b, "b");
    require_not_both_zero(a, b);

    // Invariants: old_r = a*old_x + b*old_y and r = a*x + b*y.
    BigInt old_r = a, r = b;
    BigInt old_x = 1, x = 0;
    BigInt old_y = 0, y = 1;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt t = old_r - q * r;
        old_r = std::move(r);
        r = std::move(t);
        t = old_x - q * x;
        old_x = std::move(x);
        x = std::move(t);
        t = old_y - q * y;
        old_y = std::move(y);
        y = std::move(t);
    }
    return {old_r, old_x, old_y};
}

BigInt mod_inverse(const BigInt& e, const BigInt& m) {
    if (m < 2) {
        throw CryptoError(ErrorCode::InvalidModulus, "modulus must be at least 2, got " + m.str());
    }
    require_nonnegative(e, "e");
    const BigInt reduced = e % m;
    if (reduced == 0) {
        throw CryptoError(ErrorCode::NoInverse, e.str() + " has no inverse modulo " + m.str());
    }
    BezoutTriple t = extended_gcd(reduced, m);
    if (t.g != 1) {
        throw CryptoError(ErrorCode::NoInverse,
                          "gcd(" + e.str() + ", " + m.str() + ") = " + t.g.str() + ", no inverse");
    }
    BigInt d = t.x % m;
    if (d < 0) d += m;
    return d;
}

BigInt mod_pow(const BigInt& base, const BigInt& exp, const BigInt& m) {
    if (m <= 0) {
        throw CryptoError(ErrorCode::InvalidModulus, "modulus must be positive, got " + m.str());
    }
    require_nonnegative(base, "base");
    require_nonnegative(exp, "exponent");
    if (m == 1) return 0;

    const BigInt b = base % m;
    BigInt result = 1;
    const auto bits = exp == 0 ? 0u : boost::multiprecision::msb(exp) + 1;
    for (auto i = bits; i-- > 0;) {
        result = (result * result) % m;
        if (boost::multiprecision::bit_test(exp, i)) {
            result = (result * b) % m;
        }
    }
    return result;
}

BigInt totient_semiprime(const BigInt& p, const BigInt& q) {
    if (!is_prime(p)) throw CryptoError(ErrorCode::NotPrime, p.str() + " is not prime");
    if (!is_prime(q)) throw CryptoError(ErrorCode::NotPrime, q.str() + " is not prime");
    if (p == q) {
        throw CryptoError(ErrorCode::DistinctPrimesRequired,
                          "(p-1)(q-1) only counts units of p*q for p != q; got p = q = " + p.str());
    }
    return (p - 1) * (q - 1);
}

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    std::uint64_t small = 0;
    if (fits_u64(n, small)) return is_prime_u64(small);

    if (!boost::multiprecision::bit_test(n, 0)) return false;
    for (BigInt d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

bool are_coprime(const BigInt& a, const BigInt& b) {
    if (a < 1 || b < 1) {
        throw std::domain_error("are_coprime expects positive integers");
    }
    return gcd(a, b) == 1;
}

std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t mod_pow_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp != 0) {
        if (exp & 1u) result = mul_mod_u64(result, base, m);
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime_u64(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::uint64_t d = 5; d <= n / d; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

bool fits_u64(const BigInt& n, std::uint64_t& out) noexcept {
    if (n < 0 || n > std::numeric_limits<std::uint64_t>::max()) return false;
    out = static_cast<std::uint64_t>(n);
    return true;
}

}  // namespace cryptobench

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace gkc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Fixed seed for every randomized routine in the library.
inline constexpr std::uint64_t kArtifactSeed = 0x6b6c65696e65ULL;

bool is_prime(const Integer& n);
bool is_prime(std::uint64_t n);

/// Primes in [lo, hi], ascending.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

/// Trial-division factorization of |n| (n != 0); returns (prime, exponent).
std::vector<std::pair<std::uint64_t, unsigned>> factor_small(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// Multiplicative order of a modulo m; requires gcd(a, m) = 1 and m >= 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

/// Kronecker symbol (a | n).
int kronecker(const Integer& a, const Integer& n);

/// Squarefree part of a nonzero integer, keeping the sign.
Integer squarefree_part(const Integer& n);

/// Discriminant of Q(sqrt(d)) for d nonzero and not a square.
Integer quadratic_field_discriminant(const Integer& d);

/// Returns k with n = p^k, or -1 when n is not a positive power of p.
long p_adic_power(const Integer& n, std::uint64_t p);

/// p-adic valuation of a nonzero integer.
unsigned long valuation(const Integer& n, std::uint64_t p);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);
/// Reduces an arbitrary-precision integer into [0, m).
std::uint64_t reduce_mod(const Integer& a, std::uint64_t m);

}  // namespace gkc

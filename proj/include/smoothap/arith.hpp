#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace smoothap {

using Factorization = std::vector<std::pair<std::uint64_t, unsigned>>;

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

// (a * b) mod m without overflow for any 64-bit operands.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Trial-division factorization; fine for the moduli used here (q <= 10^6).
Factorization factorize(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t ipow(std::uint64_t base, unsigned exp);

// p-adic valuation of n (n > 0).
unsigned valuation(std::uint64_t n, std::uint64_t p);

// Primes <= limit by the sieve of Eratosthenes.
std::vector<std::uint32_t> primes_up_to(std::uint64_t limit);

// Overflow-checked multiply; returns false if a*b does not fit.
bool checked_mul(std::uint64_t a, std::uint64_t b, std::uint64_t& out);

}  // namespace smoothap

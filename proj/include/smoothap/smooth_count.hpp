#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "smoothap/factor_table.hpp"

namespace smoothap {

// Psi(x, y) = #{1 <= n <= x : P(n) <= y}. n = 1 is always counted.
std::uint64_t psi(std::uint64_t x, std::uint64_t y, const FactorTable& table);

// Psi_q(x, y): y-smooth n <= x with gcd(n, q) = 1. q >= 1.
std::uint64_t psi_coprime(std::uint64_t x, std::uint64_t y, std::uint64_t q, const FactorTable& table);

// Psi(x, y; q, a): y-smooth n <= x with n = a (mod q). Requires q >= 1, 0 <= a < q.
std::uint64_t psi_progression(std::uint64_t x, std::uint64_t y, std::uint64_t q, std::uint64_t a,
                              const FactorTable& table);

// Psi(x + z, y) - Psi(x, y).
std::uint64_t psi_short_interval(std::uint64_t x, std::uint64_t z, std::uint64_t y, const FactorTable& table);

// All y-smooth n in [1, x], ascending.
std::vector<std::uint32_t> smooth_numbers(std::uint64_t x, std::uint64_t y, const FactorTable& table);

// Per-residue counts of y-smooth n <= x modulo q: counts[r] = Psi(x, y; q, r).
std::vector<std::uint64_t> residue_counts(std::span<const std::uint32_t> smooth, std::uint64_t q);

// n = m * cofactor, obtained by peeling the prime factors of n (with
// multiplicity, largest first) into m until m exceeds the threshold.
struct SmoothSplit {
    std::uint64_t m = 0;
    std::uint64_t cofactor = 0;
    std::uint32_t least_of_m = 0;  // p_1(m), the last prime peeled

    friend bool operator==(const SmoothSplit&, const SmoothSplit&) = default;
};

// Dyadic index i of m and lambda-adic index j of p_1(m):
//   2^i * threshold < m <= 2^(i+1) * threshold
//   y / lambda^(j+1) < p_1(m) <= y / lambda^j,   lambda = 1 + 1/(1000 log x)
struct SplitBucket {
    unsigned i = 0;
    std::uint64_t j = 0;

    friend bool operator==(const SplitBucket&, const SplitBucket&) = default;
};

// Returns std::nullopt when n <= threshold (nothing to split).
// Throws DomainError for n == 0 or threshold == 0; CapacityError past the table.
std::optional<SmoothSplit> smooth_split(std::uint64_t n, std::uint64_t threshold, const FactorTable& table);

// Throws DomainError unless threshold < m <= y * threshold and p_1(m) <= y.
SplitBucket bucket_split(const SmoothSplit& split, std::uint64_t x, std::uint64_t y, std::uint64_t threshold);

double bucket_lambda(std::uint64_t x);

}  // namespace smoothap

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "smoothap/characters.hpp"
#include "smoothap/factor_table.hpp"

namespace smoothap {

// Psi(x, y; chi) = sum_{n <= x, P(n) <= y} chi(n), summed in ascending n.
ComplexValue psi_char(std::uint64_t x, std::uint64_t y, const DirichletCharacter& chi, const FactorTable& table);

// Psi(x, y; chi) for every character of the group, indexed like
// CharacterGroup::character(i). Counts smooth n per residue class first and
// then transforms, so each sum is sum_r count[r] chi(r) in ascending r.
std::vector<ComplexValue> psi_char_all(std::span<const std::uint64_t> residue_counts, const CharacterGroup& group);
std::vector<ComplexValue> psi_char_all(std::uint64_t x, std::uint64_t y, const CharacterGroup& group,
                                       const FactorTable& table);

// (1/phi(q)) sum_chi conj(chi(a)) Psi(x, y; chi). Throws DomainError when gcd(a, q) > 1.
double reconstruct_progression(std::uint64_t x, std::uint64_t y, std::uint64_t a, const CharacterGroup& group,
                               const FactorTable& table);
// Same, from precomputed psi_char_all output.
double reconstruct_progression(std::span<const ComplexValue> char_sums, std::uint64_t a,
                               const CharacterGroup& group);

// L(s, chi; y) = prod_{p <= y} (1 - chi(p) p^-s)^-1 for Re s > 0.
ComplexValue l_smooth(ComplexValue s, const DirichletCharacter& chi, std::uint64_t y);

// sum_{n <= z} Lambda(n) chi(n) / n^(sigma + i t). Prime powers are read off the table.
ComplexValue mangoldt_char_sum(std::uint64_t z, const DirichletCharacter& chi, double sigma, double t,
                               const FactorTable& table);

// sum_{p <= y, p not dividing q} (1 - Re(chi(p) p^-it)) / p^alpha  (>= 0).
double rational_distance_sum(std::uint64_t y, const DirichletCharacter& chi, double alpha, double t);

// Psi(x, y; chi) - Psi(threshold, y; chi) re-assembled through the split
// n = m * cofactor: sum over y-smooth n in (threshold, x] of chi(m) chi(cofactor).
ComplexValue split_character_sum(std::uint64_t x, std::uint64_t y, std::uint64_t threshold,
                                 const DirichletCharacter& chi, const FactorTable& table);

}  // namespace smoothap

#include "smoothap/character_sums.hpp"

#include <cmath>

#include "smoothap/arith.hpp"
#include "smoothap/errors.hpp"
#include "smoothap/smooth_count.hpp"

namespace smoothap {

ComplexValue psi_char(std::uint64_t x, std::uint64_t y, const DirichletCharacter& chi, const FactorTable& table) {
    table.require(x, "psi_char");
    const auto largest = table.largest_array();
    const auto exps = chi.exponent_table();
    const std::uint64_t q = chi.modulus();
    const auto& group = chi.group();
    ComplexValue sum{0, 0};
    for (std::uint64_t n = 1; n <= x; ++n) {
        if (largest[n] > y) continue;
        const auto k = exps[n % q];
        if (k >= 0) sum += group.root(static_cast<std::uint64_t>(k));
    }
    return sum;
}

std::vector<ComplexValue> psi_char_all(std::span<const std::uint64_t> residue_counts, const CharacterGroup& group) {
    if (residue_counts.size() != group.modulus()) throw DomainError("psi_char_all: counts must have q entries");
    const auto units = group.units();
    const auto comps = group.components();
    const std::uint64_t big = group.exponent();

    std::vector<std::uint64_t> scale(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) scale[i] = big / comps[i].order;

    std::vector<ComplexValue> out(group.size());
    for (std::uint64_t idx = 0; idx < group.size(); ++idx) {
        const auto chi = group.character(idx);
        const auto e = chi.exponents();
        ComplexValue sum{0, 0};
        for (std::size_t u = 0; u < units.size(); ++u) {
            const std::uint64_t c = residue_counts[units[u]];
            if (c == 0) continue;
            const auto logs = group.unit_logs(u);
            std::uint64_t k = 0;
            for (std::size_t i = 0; i < comps.size(); ++i) k += e[i] * logs[i] % comps[i].order * scale[i];
            sum += static_cast<double>(c) * group.root(k % big);
        }
        out[idx] = sum;
    }
    return out;
}

std::vector<ComplexValue> psi_char_all(std::uint64_t x, std::uint64_t y, const CharacterGroup& group,
                                       const FactorTable& table) {
    const auto smooth = smooth_numbers(x, y, table);
    const auto counts = residue_counts(smooth, group.modulus());
    return psi_char_all(counts, group);
}

double reconstruct_progression(std::span<const ComplexValue> char_sums, std::uint64_t a,
                               const CharacterGroup& group) {
    if (char_sums.size() != group.size()) throw DomainError("reconstruct_progression: one sum per character");
    if (gcd(a, group.modulus()) != 1) throw DomainError("reconstruct_progression: gcd(a, q) must be 1");
    ComplexValue total{0, 0};
    for (std::uint64_t i = 0; i < group.size(); ++i)
        total += std::conj(group.character(i).value(a)) * char_sums[i];
    return total.real() / static_cast<double>(group.size());
}

double reconstruct_progression(std::uint64_t x, std::uint64_t y, std::uint64_t a, const CharacterGroup& group,
                               const FactorTable& table) {
    if (gcd(a, group.modulus()) != 1) throw DomainError("reconstruct_progression: gcd(a, q) must be 1");
    return reconstruct_progression(psi_char_all(x, y, group, table), a, group);
}

ComplexValue l_smooth(ComplexValue s, const DirichletCharacter& chi, std::uint64_t y) {
    if (!(s.real() > 0)) throw DomainError("l_smooth: Re(s) must be positive");
    if (y < 2) throw DomainError("l_smooth: y must be >= 2");
    ComplexValue product{1, 0};
    for (std::uint32_t p : primes_up_to(y)) {
        const ComplexValue v = chi.value(p);
        if (v == ComplexValue{0, 0}) continue;
        product /= ComplexValue{1, 0} - v * std::exp(-s * std::log(static_cast<double>(p)));
    }
    return product;
}

ComplexValue mangoldt_char_sum(std::uint64_t z, const DirichletCharacter& chi, double sigma, double t,
                               const FactorTable& table) {
    table.require(z, "mangoldt_char_sum");
    ComplexValue sum{0, 0};
    for (std::uint64_t n = 2; n <= z; ++n) {
        if (!table.is_prime_power(n)) continue;
        const ComplexValue v = chi.value(n);
        if (v == ComplexValue{0, 0}) continue;
        const double log_n = std::log(static_cast<double>(n));
        const double log_p = std::log(static_cast<double>(table.smallest(n)));
        sum += log_p * v * std::exp(ComplexValue{-sigma * log_n, -t * log_n});
    }
    return sum;
}

double rational_distance_sum(std::uint64_t y, const DirichletCharacter& chi, double alpha, double t) {
    if (!(alpha > 0)) throw DomainError("rational_distance_sum: alpha must be positive");
    double sum = 0;
    for (std::uint32_t p : primes_up_to(y)) {
        const ComplexValue v = chi.value(p);
        if (v == ComplexValue{0, 0}) continue;
        const double log_p = std::log(static_cast<double>(p));
        const double re = (v * std::polar(1.0, -t * log_p)).real();
        sum += (1 - re) * std::exp(-alpha * log_p);
    }
    return sum;
}

ComplexValue split_character_sum(std::uint64_t x, std::uint64_t y, std::uint64_t threshold,
                                 const DirichletCharacter& chi, const FactorTable& table) {
    table.require(x, "split_character_sum");
    ComplexValue sum{0, 0};
    for (std::uint64_t n = threshold + 1; n <= x; ++n) {
        if (!table.is_smooth(n, y)) continue;
        const auto split = smooth_split(n, threshold, table);
        sum += chi.value(split->m) * chi.value(split->cofactor);
    }
    return sum;
}

}  // namespace smoothap

#include "smoothap/smooth_count.hpp"

#include <cmath>
#include <string>

#include "smoothap/arith.hpp"
#include "smoothap/errors.hpp"

namespace smoothap {

std::uint64_t psi(std::uint64_t x, std::uint64_t y, const FactorTable& table) {
    table.require(x, "psi");
    if (y >= x) return x;
    const auto largest = table.largest_array();
    std::uint64_t count = 0;
    for (std::uint64_t n = 1; n <= x; ++n) count += largest[n] <= y;
    return count;
}

std::uint64_t psi_coprime(std::uint64_t x, std::uint64_t y, std::uint64_t q, const FactorTable& table) {
    table.require(x, "psi_coprime");
    if (q == 0) throw DomainError("psi_coprime: q must be >= 1");
    if (q == 1) return psi(x, y, table);
    const auto largest = table.largest_array();
    std::uint64_t count = 0;
    for (std::uint64_t n = 1; n <= x; ++n)
        if (largest[n] <= y && gcd(n, q) == 1) ++count;
    return count;
}

std::uint64_t psi_progression(std::uint64_t x, std::uint64_t y, std::uint64_t q, std::uint64_t a,
                              const FactorTable& table) {
    table.require(x, "psi_progression");
    if (q == 0) throw DomainError("psi_progression: q must be >= 1");
    if (a >= q) throw DomainError("psi_progression: residue must satisfy 0 <= a < q");
    const auto largest = table.largest_array();
    std::uint64_t count = 0;
    // Smallest n >= 1 in the class.
    for (std::uint64_t n = (a == 0 ? q : a); n <= x; n += q) count += largest[n] <= y;
    return count;
}

std::uint64_t psi_short_interval(std::uint64_t x, std::uint64_t z, std::uint64_t y, const FactorTable& table) {
    if (x + z < x) throw DomainError("psi_short_interval: x + z overflows");
    table.require(x + z, "psi_short_interval");
    const auto largest = table.largest_array();
    std::uint64_t count = 0;
    for (std::uint64_t n = x + 1; n <= x + z; ++n) count += largest[n] <= y;
    return count;
}

std::vector<std::uint32_t> smooth_numbers(std::uint64_t x, std::uint64_t y, const FactorTable& table) {
    table.require(x, "smooth_numbers");
    const auto largest = table.largest_array();
    std::vector<std::uint32_t> out;
    for (std::uint64_t n = 1; n <= x; ++n)
        if (largest[n] <= y) out.push_back(static_cast<std::uint32_t>(n));
    return out;
}

std::vector<std::uint64_t> residue_counts(std::span<const std::uint32_t> smooth, std::uint64_t q) {
    if (q == 0) throw DomainError("residue_counts: q must be >= 1");
    std::vector<std::uint64_t> counts(q, 0);
    for (std::uint32_t n : smooth) ++counts[n % q];
    return counts;
}

std::optional<SmoothSplit> smooth_split(std::uint64_t n, std::uint64_t threshold, const FactorTable& table) {
    if (n == 0) throw DomainError("smooth_split: n must be positive");
    if (threshold == 0) throw DomainError("smooth_split: threshold must be >= 1");
    if (n <= threshold) return std::nullopt;
    table.require(n, "smooth_split");

    std::uint64_t m = 1;
    std::uint64_t rest = n;
    std::uint32_t p = 0;
    while (m <= threshold) {
        // rest > 1 here, since m * rest = n > threshold >= m.
        p = table.largest(rest);
        m *= p;
        rest /= p;
    }
    return SmoothSplit{m, rest, p};
}

double bucket_lambda(std::uint64_t x) {
    if (x < 2) throw DomainError("bucket_lambda: x must be >= 2");
    return 1.0 + 1.0 / (1000.0 * std::log(static_cast<double>(x)));
}

SplitBucket bucket_split(const SmoothSplit& split, std::uint64_t x, std::uint64_t y, std::uint64_t threshold) {
    if (threshold == 0) throw DomainError("bucket_split: threshold must be >= 1");
    std::uint64_t top = 0;
    if (!checked_mul(y, threshold, top)) throw DomainError("bucket_split: y * threshold overflows");
    if (split.m <= threshold || split.m > top)
        throw DomainError("bucket_split: m outside (threshold, y * threshold]");
    if (split.least_of_m == 0 || split.least_of_m > y)
        throw DomainError("bucket_split: p_1(m) must lie in [2, y]");

    SplitBucket b;
    // Smallest i with m <= 2^(i+1) * threshold.
    unsigned __int128 edge = static_cast<unsigned __int128>(threshold) * 2;
    while (split.m > edge) {
        edge *= 2;
        ++b.i;
    }

    const double log_lambda = std::log(bucket_lambda(x));
    const double ratio = std::log(static_cast<double>(y) / split.least_of_m);
    auto j = static_cast<std::uint64_t>(std::max(0.0, std::floor(ratio / log_lambda)));
    // Repair floating-point drift at the bucket edges: need y/lambda^(j+1) < p1 <= y/lambda^j,
    // i.e. j*log(lambda) <= log(y/p1) < (j+1)*log(lambda).
    while (j > 0 && static_cast<double>(j) * log_lambda > ratio) --j;
    while (static_cast<double>(j + 1) * log_lambda <= ratio) ++j;
    b.j = j;
    return b;
}

}  // namespace smoothap

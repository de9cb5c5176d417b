#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace smoothap {

// Largest supported table limit. Two u32 arrays cost 8 bytes per entry,
// so the ceiling corresponds to about 1.6 GB of resident memory.
inline constexpr std::uint64_t kMaxTableLimit = 200'000'000;

// Largest and smallest prime factor of every n in [1, limit].
//
// Entry 1 holds the sentinel 1 in both arrays; entry 0 is unused and zero.
// Immutable after construction, so one table can be shared by any number of
// concurrent readers.
class FactorTable {
public:
    FactorTable() = default;

    std::uint64_t limit() const { return limit_; }

    // P(n): greatest prime factor. Requires 1 <= n <= limit().
    std::uint32_t largest(std::uint64_t n) const { return largest_[n]; }
    // p_1(n): least prime factor. Requires 1 <= n <= limit().
    std::uint32_t smallest(std::uint64_t n) const { return smallest_[n]; }

    bool is_smooth(std::uint64_t n, std::uint64_t y) const { return largest_[n] <= y; }
    bool is_prime(std::uint64_t n) const { return n >= 2 && largest_[n] == n; }
    // n = p^k for some prime p and k >= 1.
    bool is_prime_power(std::uint64_t n) const {
        return n >= 2 && largest_[n] == smallest_[n];
    }

    // Raw arrays, indexed 0..limit.
    std::span<const std::uint32_t> largest_array() const { return largest_; }
    std::span<const std::uint32_t> smallest_array() const { return smallest_; }

    // Throws CapacityError when x is not covered.
    void require(std::uint64_t x, const char* what) const;

    // Adopts arrays produced elsewhere (the cache loader); validates sizes.
    static FactorTable from_arrays(std::uint64_t limit, std::vector<std::uint32_t> largest,
                                   std::vector<std::uint32_t> smallest);

private:
    friend FactorTable build_factor_table(std::uint64_t limit, unsigned threads);

    std::uint64_t limit_ = 0;
    std::vector<std::uint32_t> largest_;
    std::vector<std::uint32_t> smallest_;
};

// Segmented sieve over [2, limit]. Each segment keeps a running cofactor per
// entry; every prime up to sqrt(limit) strikes its multiples once and divides
// out its full power, and whatever cofactor survives is the one prime factor
// above sqrt(limit). Segments are independent and may be processed by
// `threads` workers. Throws CapacityError outside [2, kMaxTableLimit].
FactorTable build_factor_table(std::uint64_t limit, unsigned threads = 1);

// Binary cache, all fields little-endian:
//   bytes 0..3   magic "SMFT"
//   bytes 4..7   u32 format version (kFactorCacheVersion)
//   bytes 8..15  u64 limit
//   then limit u32 values largest[1..limit], then limit u32 values smallest[1..limit]
inline constexpr std::uint32_t kFactorCacheVersion = 1;

void save_factor_table(const FactorTable& table, const std::filesystem::path& path);
FactorTable load_factor_table(const std::filesystem::path& path);

}  // namespace smoothap

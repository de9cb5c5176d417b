#include "smoothap/factor_table.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <string>

#include "smoothap/arith.hpp"
#include "smoothap/errors.hpp"
#include "smoothap/parallel.hpp"

namespace smoothap {

namespace {

constexpr std::uint64_t kSegment = 1u << 18;
constexpr std::array<char, 4> kMagic{'S', 'M', 'F', 'T'};

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

void sieve_segment(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint32_t> base_primes,
                   std::uint32_t* largest, std::uint32_t* smallest) {
    std::vector<std::uint32_t> cofactor(hi - lo);
    for (std::uint64_t n = lo; n < hi; ++n) cofactor[n - lo] = static_cast<std::uint32_t>(n);

    for (std::uint32_t p : base_primes) {
        if (static_cast<std::uint64_t>(p) * p >= hi) break;
        std::uint64_t start = (lo + p - 1) / p * p;
        for (std::uint64_t m = start; m < hi; m += p) {
            auto& c = cofactor[m - lo];
            if (smallest[m] == 0) smallest[m] = p;
            largest[m] = p;
            do {
                c /= p;
            } while (c % p == 0);
        }
    }
    for (std::uint64_t n = lo; n < hi; ++n) {
        const std::uint32_t c = cofactor[n - lo];
        if (c > 1) {
            // Cofactor left after all primes <= sqrt(hi) is a single large prime.
            largest[n] = c;
            if (smallest[n] == 0) smallest[n] = c;
        }
    }
}

void put_u32(std::ostream& out, std::uint32_t v) {
    std::array<char, 4> b{};
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(b.data(), 4);
}

void put_u64(std::ostream& out, std::uint64_t v) {
    put_u32(out, static_cast<std::uint32_t>(v));
    put_u32(out, static_cast<std::uint32_t>(v >> 32));
}

std::uint64_t get_le(const unsigned char* p, int bytes) {
    std::uint64_t v = 0;
    for (int i = bytes - 1; i >= 0; --i) v = (v << 8) | p[i];
    return v;
}

void write_array(std::ostream& out, std::span<const std::uint32_t> values) {
    std::vector<char> buf;
    constexpr std::size_t kChunk = 1 << 16;
    for (std::size_t i = 1; i < values.size(); i += kChunk) {
        const std::size_t end = std::min(values.size(), i + kChunk);
        buf.resize((end - i) * 4);
        for (std::size_t k = i; k < end; ++k) {
            const std::uint32_t v = values[k];
            for (int b = 0; b < 4; ++b) buf[(k - i) * 4 + b] = static_cast<char>((v >> (8 * b)) & 0xff);
        }
        out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    }
}

std::vector<std::uint32_t> read_array(std::istream& in, std::uint64_t limit,
                                      const std::filesystem::path& path) {
    std::vector<std::uint32_t> values(limit + 1, 0);
    std::vector<unsigned char> buf;
    constexpr std::uint64_t kChunk = 1 << 16;
    for (std::uint64_t i = 1; i <= limit; i += kChunk) {
        const std::uint64_t end = std::min(limit + 1, i + kChunk);
        buf.resize((end - i) * 4);
        in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
        if (!in) throw IoError("factor cache truncated: " + path.string());
        for (std::uint64_t k = i; k < end; ++k)
            values[k] = static_cast<std::uint32_t>(get_le(&buf[(k - i) * 4], 4));
    }
    return values;
}

}  // namespace

void FactorTable::require(std::uint64_t x, const char* what) const {
    if (x > limit_) {
        throw CapacityError(std::string(what) + ": argument " + std::to_string(x) +
                            " exceeds factor table limit " + std::to_string(limit_));
    }
}

FactorTable FactorTable::from_arrays(std::uint64_t limit, std::vector<std::uint32_t> largest,
                                     std::vector<std::uint32_t> smallest) {
    if (limit < 2 || limit > kMaxTableLimit) throw CapacityError("factor table limit out of range");
    if (largest.size() != limit + 1 || smallest.size() != limit + 1)
        throw DomainError("factor table arrays do not match limit");
    if (largest[1] != 1 || smallest[1] != 1) throw DomainError("factor table sentinel at n=1 missing");
    FactorTable t;
    t.limit_ = limit;
    t.largest_ = std::move(largest);
    t.smallest_ = std::move(smallest);
    return t;
}

FactorTable build_factor_table(std::uint64_t limit, unsigned threads) {
    if (limit < 2 || limit > kMaxTableLimit) {
        throw CapacityError("build_factor_table: limit " + std::to_string(limit) +
                            " outside [2, " + std::to_string(kMaxTableLimit) + "]");
    }
    FactorTable t;
    t.limit_ = limit;
    t.largest_.assign(limit + 1, 0);
    t.smallest_.assign(limit + 1, 0);
    t.largest_[1] = t.smallest_[1] = 1;

    const auto base_primes = primes_up_to(isqrt(limit));
    const std::uint64_t segments = (limit - 1 + kSegment - 1) / kSegment;
    parallel_for(segments, threads, [&](std::size_t s) {
        const std::uint64_t lo = 2 + s * kSegment;
        const std::uint64_t hi = std::min(limit + 1, lo + kSegment);
        sieve_segment(lo, hi, base_primes, t.largest_.data(), t.smallest_.data());
    });
    return t;
}

void save_factor_table(const FactorTable& table, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open factor cache for writing: " + path.string());
    out.write(kMagic.data(), 4);
    put_u32(out, kFactorCacheVersion);
    put_u64(out, table.limit());
    write_array(out, table.largest_array());
    write_array(out, table.smallest_array());
    if (!out) throw IoError("failed writing factor cache: " + path.string());
}

FactorTable load_factor_table(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open factor cache: " + path.string());
    std::array<unsigned char, 16> header{};
    in.read(reinterpret_cast<char*>(header.data()), 16);
    if (!in) throw IoError("factor cache header truncated: " + path.string());
    if (!std::equal(kMagic.begin(), kMagic.end(), header.begin(),
                    [](char a, unsigned char b) { return static_cast<unsigned char>(a) == b; }))
        throw IoError("bad factor cache magic: " + path.string());
    const auto version = static_cast<std::uint32_t>(get_le(&header[4], 4));
    if (version != kFactorCacheVersion)
        throw IoError("unsupported factor cache version " + std::to_string(version) + ": " + path.string());
    const std::uint64_t limit = get_le(&header[8], 8);
    if (limit < 2 || limit > kMaxTableLimit)
        throw CapacityError("factor cache limit out of range: " + path.string());
    auto largest = read_array(in, limit, path);
    auto smallest = read_array(in, limit, path);
    return FactorTable::from_arrays(limit, std::move(largest), std::move(smallest));
}

}  // namespace smoothap

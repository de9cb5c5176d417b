#pragma once

#include <cstdint>
#include <random>

namespace smoothap {

// mt19937_64 with explicit conversions; the standard distributions are not
// portable across library implementations, and seeded runs must be.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t bits() { return engine_(); }
    // Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    // Uniform integer on [lo, hi] by rejection.
    std::uint64_t integer(std::uint64_t lo, std::uint64_t hi) {
        const std::uint64_t span = hi - lo + 1;
        if (span == 0) return engine_();
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return lo + v % span;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace smoothap

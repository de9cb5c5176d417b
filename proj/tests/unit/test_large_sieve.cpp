#include <doctest.h>

#include <cmath>

#include "../oracles.hpp"
#include "shared.hpp"
#include "smoothap/errors.hpp"
#include "smoothap/large_sieve.hpp"
#include "smoothap/random.hpp"

using namespace smoothap;

namespace {

const CharacterGroups& groups() {
    static const CharacterGroups g(60);
    return g;
}

// Gallagher's sum for Q <= 5 with the primitive characters written out by
// hand: mod 3 (Legendre), mod 4 (odd), mod 5 (three, generated by 2).
double lhs_small_oracle(std::uint64_t Q, const CoefficientWindow& w) {
    auto sum = [&](auto chi) {
        ComplexValue s = 0;
        for (std::size_t i = 0; i < w.values.size(); ++i) s += w.values[i] * chi(w.offset + 1 + i);
        return std::norm(s);
    };
    double total = sum([](std::uint64_t) { return ComplexValue{1, 0}; });
    if (Q >= 3)
        total += 1.5 * sum([](std::uint64_t n) { return ComplexValue{n % 3 == 1 ? 1.0 : n % 3 == 2 ? -1.0 : 0.0}; });
    if (Q >= 4)
        total += 2.0 * sum([](std::uint64_t n) { return ComplexValue{n % 4 == 1 ? 1.0 : n % 4 == 3 ? -1.0 : 0.0}; });
    if (Q >= 5) {
        const int log2[5] = {-1, 0, 1, 3, 2};  // 2^k mod 5
        for (int j = 1; j < 4; ++j)
            total += 1.25 * sum([&](std::uint64_t n) {
                const int r = int(n % 5);
                return r == 0 ? ComplexValue{0, 0} : std::polar(1.0, 2 * std::numbers::pi * j * log2[r] / 4);
            });
    }
    return total;
}

}  // namespace

TEST_CASE("large sieve examples") {
    CoefficientWindow one{0, {ComplexValue{1, 0}}};
    CHECK(large_sieve_lhs(2, one, groups()) == doctest::Approx(1.0));
    const auto r = large_sieve_check(2, one, groups());
    CHECK(r.lhs == doctest::Approx(1.0));
    CHECK(r.rhs == doctest::Approx(13.0));
    CHECK(r.ok);
    CoefficientWindow zeros{5, std::vector<ComplexValue>(40, 0.0)};
    const auto z = large_sieve_check(10, zeros, groups());
    CHECK(z.lhs == 0);
    CHECK(z.rhs == 0);
    CHECK(z.ok);
    Rng rng(5);
    const auto w = random_window(rng, 300, 1000);
    ComplexValue s = 0;
    for (auto v : w.values) s += v;
    CHECK(large_sieve_lhs(1, w, groups()) == doctest::Approx(std::norm(s)).epsilon(1e-12));
    CHECK_THROWS_AS(large_sieve_lhs(0, w, groups()), DomainError);
}

TEST_CASE("large sieve lhs against hand-built characters") {
    Rng rng(17);
    for (int k = 0; k < 40; ++k) {
        const auto w = random_window(rng, 200, 5000);
        for (std::uint64_t Q = 1; Q <= 5; ++Q)
            CHECK(large_sieve_lhs(Q, w, groups()) == doctest::Approx(lhs_small_oracle(Q, w)).epsilon(1e-10));
    }
}

TEST_CASE("reduction route and direct route agree") {
    Rng rng(23);
    for (int k = 0; k < 30; ++k) {
        const auto w = random_window(rng, 500, 10'000);
        const auto Q = rng.integer(1, 40);
        const double a = large_sieve_lhs(Q, w, groups()), b = large_sieve_lhs_direct(Q, w, groups());
        CHECK(std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)));
    }
}

TEST_CASE("scaling by a constant") {
    Rng rng(29);
    const auto w = random_window(rng, 400, 100);
    auto scaled = w;
    const ComplexValue c{1.5, -2.0};
    for (auto& v : scaled.values) v *= c;
    const auto a = large_sieve_check(20, w, groups()), b = large_sieve_check(20, scaled, groups());
    CHECK(b.lhs == doctest::Approx(a.lhs * std::norm(c)).epsilon(1e-10));
    CHECK(b.rhs == doctest::Approx(a.rhs * std::norm(c)).epsilon(1e-12));
}

TEST_CASE("random and adversarial windows never violate the inequality") {
    Rng rng(31);
    double worst = 0;
    for (int k = 0; k < 100; ++k) {
        const auto w = random_window(rng, 2000, 100'000);
        const auto r = large_sieve_check(rng.integer(1, 50), w, groups());
        CHECK(r.ok);
        worst = std::max(worst, r.ratio());
    }
    for (const auto& nw : adversarial_catalog(50, 2000, groups(), shared_table())) {
        const auto r = large_sieve_check(nw.Q, nw.window, groups());
        CHECK_MESSAGE(r.ok, nw.name);
        CHECK(nw.Q <= 50);
        CHECK(nw.window.length() <= 2000);
        worst = std::max(worst, r.ratio());
    }
    MESSAGE("max lhs/rhs " << worst);
}

TEST_CASE("window generators") {
    const auto p = progression_window(10, 30, 6, 1);
    for (std::size_t i = 0; i < p.values.size(); ++i)
        CHECK(p.values[i] == ComplexValue{(p.offset + 1 + i) % 6 == 1 ? 1.0 : 0.0, 0});
    const auto s = smooth_window(0, 100, 3, shared_table());
    double count = 0;
    for (auto v : s.values) count += v.real();
    CHECK(count == 20);
    CHECK(s.energy() == 20);
    Rng a(99), b(99);
    const auto wa = random_window(a, 100, 100), wb = random_window(b, 100, 100);
    CHECK(wa.offset == wb.offset);
    CHECK(wa.values == wb.values);
}

TEST_CASE("conductor buckets") {
    const CharacterGroups g(100);
    const auto b = conductor_buckets(1'000'000, 1000, 100, 0.25, g);
    // y^eta = 5.62, exp(eta sqrt(log x)) = 2.53
    CHECK(b.small_cutoff == doctest::Approx(std::exp(0.25 * std::sqrt(std::log(1e6)))));
    CHECK(b.small_cutoff == doctest::Approx(2.53).epsilon(1e-3));
    CHECK(b.large_cutoff == doctest::Approx(31.6227766));
    std::uint64_t total = 0;
    double mass = 0;
    std::uint64_t by_range[3] = {0, 0, 0};
    for (std::uint64_t r = 2; r <= 100; ++r) {
        const auto n = g.primitive_indices(r).size();
        total += n;
        mass += double(n) / double(oracle::phi(r));
        by_range[double(r) <= b.small_cutoff ? 0 : double(r) <= b.large_cutoff ? 1 : 2] += n;
    }
    CHECK(b.total() == total);
    for (int i = 0; i < 3; ++i) CHECK(b.count[i] == by_range[i]);
    CHECK(b.mass[0] + b.mass[1] + b.mass[2] == doctest::Approx(mass));

    const auto low = conductor_buckets(1'000'000, 1000, 2, 0.25, g);
    CHECK(low.count[1] == 0);
    CHECK(low.count[2] == 0);
    const auto tiny = conductor_buckets(100, 1000, 50, 0.1, g);  // x^eta < 2
    CHECK(tiny.large_degenerate);
    CHECK(tiny.count[1] == 0);
    CHECK_THROWS_AS(conductor_buckets(100, 10, 5, 1.0, g), DomainError);
}

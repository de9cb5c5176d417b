#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "../oracles.hpp"
#include "shared.hpp"
#include "smoothap/character_sums.hpp"
#include "smoothap/characters.hpp"
#include "smoothap/errors.hpp"
#include "smoothap/saddle.hpp"
#include "smoothap/smooth_count.hpp"

using namespace smoothap;

namespace {

bool near(ComplexValue a, ComplexValue b, double tol = 1e-9) { return std::abs(a - b) <= tol; }

const DirichletCharacter& odd_mod4() {
    static const CharacterGroup g(4);
    static const DirichletCharacter chi = g.character(1);
    return chi;
}

}  // namespace

TEST_CASE("group sizes and small examples") {
    CHECK(CharacterGroup(4).size() == 2);
    const CharacterGroup g1(1);
    CHECK(g1.size() == 1);
    for (std::uint64_t n = 1; n < 50; ++n) CHECK(g1.character(0).value(n) == ComplexValue{1, 0});
    const CharacterGroup g8(8);
    CHECK(g8.size() == 4);
    for (const auto& chi : g8.characters()) {
        CHECK(chi.is_real());
        for (std::uint64_t n = 0; n < 8; ++n) CHECK(std::abs(chi.value(n).imag()) == 0.0);
    }
    CHECK_THROWS_AS(CharacterGroup(0), DomainError);
    CHECK_THROWS_AS(CharacterGroup(kMaxCharacterModulus + 1), CapacityError);
    CHECK_THROWS_AS(g8.character(4), DomainError);
    for (std::uint64_t q = 1; q <= 300; ++q) CHECK(CharacterGroup(q).size() == oracle::phi(q));
}

TEST_CASE("char_value examples") {
    CHECK(char_value(odd_mod4(), 3) == ComplexValue{-1, 0});
    CHECK(odd_mod4().parity() == -1);
    for (std::uint64_t q : {1, 5, 12, 17, 64}) {
        for (const auto& chi : CharacterGroup(q).characters()) CHECK(chi.value(1) == ComplexValue{1, 0});
    }
    const CharacterGroup g5(5);
    for (const auto& chi : g5.characters()) {
        if (chi.order() != 4) continue;
        const auto v = chi.value(2);
        CHECK(std::abs(v) == doctest::Approx(1.0));
        CHECK(near(std::pow(v, 4), 1.0));
        // quarter turns are exact
        CHECK((v == ComplexValue{0, 1} || v == ComplexValue{0, -1}));
    }
}

TEST_CASE("values match a brute-force character table") {
    // The library fixes generators, the oracle finds all homomorphisms; the
    // value tables must agree as multisets.
    for (std::uint64_t q = 1; q <= 60; ++q) {
        const CharacterGroup g(q);
        auto brute = oracle::all_characters(q);
        REQUIRE(brute.size() == g.size());
        std::vector<char> used(brute.size(), 0);
        for (const auto& chi : g.characters()) {
            bool found = false;
            for (std::size_t b = 0; b < brute.size() && !found; ++b) {
                if (used[b]) continue;
                bool same = true;
                for (std::uint64_t n = 0; n < q && same; ++n) same = near(chi.value(n), brute[b](n), 1e-9);
                if (same) used[b] = found = true;
            }
            CHECK_MESSAGE(found, "q=" << q << " index=" << chi.index());
        }
    }
}

TEST_CASE("periodicity, zeros, roots of unity, multiplicativity") {
    std::mt19937_64 rng(11);
    for (std::uint64_t q : {3, 8, 9, 15, 16, 24, 35, 63, 97, 120, 128, 199}) {
        const CharacterGroup g(q);
        for (const auto& chi : g.characters()) {
            for (std::uint64_t n = 0; n < 2 * q; ++n) {
                const auto v = chi.value(n);
                CHECK(near(v, chi.value(n + q)));
                if (oracle::gcd(n, q) > 1) {
                    CHECK(v == ComplexValue{0, 0});
                    CHECK_FALSE(chi.value_exponent(n));
                } else {
                    CHECK(std::abs(v) == doctest::Approx(1.0));
                    CHECK(near(std::pow(v, double(g.size())), 1.0, 1e-8));
                }
            }
            for (int k = 0; k < 10'000 / 12; ++k) {
                const std::uint64_t m = rng() % 1'000'000, n = rng() % 1'000'000;
                REQUIRE(near(chi.value(m * n), chi.value(m) * chi.value(n)));
            }
        }
    }
    // 10^4 pairs against a single character of each tested modulus
    for (std::uint64_t q : {7, 44, 105}) {
        const auto chi = CharacterGroup(q).character(CharacterGroup(q).size() - 1);
        for (int k = 0; k < 10'000; ++k) {
            std::uint64_t m, n;
            do m = rng() % 100'000;
            while (oracle::gcd(m, q) != 1);
            do n = rng() % 100'000;
            while (oracle::gcd(n, q) != 1);
            REQUIRE(near(chi.value(m * n), chi.value(m) * chi.value(n)));
        }
    }
}

TEST_CASE("conductor examples") {
    const CharacterGroup g4(4), g8(8), g5(5);
    for (std::uint64_t q : {1, 7, 12, 100}) CHECK(CharacterGroup(q).principal().conductor() == 1);
    // the mod-8 character agreeing with the odd mod-4 character
    int found = 0;
    for (const auto& chi : g8.characters()) {
        bool agrees = true;
        for (std::uint64_t n = 1; n < 8; n += 2) agrees = agrees && near(chi.value(n), g4.character(1).value(n));
        if (agrees) {
            CHECK(conductor(chi) == 4);
            ++found;
        }
    }
    CHECK(found == 1);
    std::multiset<std::uint64_t> conds;
    for (const auto& chi : g5.characters()) conds.insert(chi.conductor());
    CHECK(conds == std::multiset<std::uint64_t>{1, 5, 5, 5});
}

TEST_CASE("conductor minimality exhaustive for q <= 200") {
    for (std::uint64_t q = 1; q <= 200; ++q) {
        const CharacterGroup g(q);
        for (const auto& chi : g.characters()) {
            oracle::Character c;
            c.q = q;
            for (std::uint64_t n = 0; n < q; ++n) c.values.push_back(chi.value(n));
            if (q == 1) c.values[0] = 1.0;
            REQUIRE_MESSAGE(chi.conductor() == oracle::conductor(c), "q=" << q << " index=" << chi.index());
        }
    }
}

TEST_CASE("induced_from") {
    for (std::uint64_t q = 1; q <= 120; ++q) {
        const CharacterGroup g(q);
        for (const auto& chi : g.characters()) {
            const auto star = induced_from(chi);
            REQUIRE(star.modulus() == chi.conductor());
            REQUIRE(star.is_primitive());
            for (std::uint64_t n = 0; n < 2 * q; ++n) {
                const ComplexValue want = oracle::gcd(n, q) == 1 ? star.value(n) : ComplexValue{0, 0};
                REQUIRE(near(chi.value(n), want));
            }
            if (chi.is_primitive()) CHECK(star.exponents().size() == chi.exponents().size());
        }
    }
    const auto trivial = induced_from(CharacterGroup(30).principal());
    CHECK(trivial.modulus() == 1);
    // mod-12 characters coming from mod 3
    const CharacterGroup g12(12), g3(3);
    for (const auto& chi : g12.characters()) {
        if (chi.conductor() != 3) continue;
        const auto star = induced_from(chi);
        for (std::uint64_t n = 1; n < 12; ++n)
            if (oracle::gcd(n, 12) == 1) CHECK(near(chi.value(n), g3.character(star.index()).value(n)));
    }
}

TEST_CASE("primitive index lists") {
    const CharacterGroups groups(100);
    for (std::uint64_t q = 1; q <= 100; ++q) {
        std::uint64_t count = 0;
        for (const auto& chi : groups.at(q).characters()) count += chi.is_primitive();
        CHECK(groups.primitive_indices(q).size() == count);
    }
    CHECK(groups.primitive_indices(1).size() == 1);
    CHECK(groups.primitive_indices(2).empty());
    CHECK(groups.primitive_indices(6).empty());
    CHECK_THROWS_AS(groups.at(101), CapacityError);
}

TEST_CASE("psi_char") {
    const auto& t = shared_table();
    CHECK(near(psi_char(20, 3, odd_mod4(), t), 1.0));
    for (std::uint64_t q : {3, 10, 16}) {
        const CharacterGroup g(q);
        CHECK(near(psi_char(5000, 7, g.principal(), t), double(psi_coprime(5000, 7, q, t))));
        for (const auto& chi : g.characters()) {
            CHECK(std::abs(psi_char(5000, 7, chi, t)) <= double(psi(5000, 7, t)) + 1e-9);
            // direct sum over trial-division smooth numbers
            ComplexValue want = 0;
            for (std::uint64_t n = 1; n <= 5000; ++n)
                if (oracle::smooth(n, 7)) want += chi.value(n);
            CHECK(near(psi_char(5000, 7, chi, t), want, 1e-8));
        }
        const auto all = psi_char_all(5000, 7, g, t);
        for (std::uint64_t k = 0; k < g.size(); ++k) CHECK(near(all[k], psi_char(5000, 7, g.character(k), t), 1e-8));
    }
}

TEST_CASE("reconstruct_progression") {
    const auto& t = shared_table();
    const CharacterGroup g4(4);
    CHECK(reconstruct_progression(20, 3, 1, g4, t) == doctest::Approx(2.0));
    CHECK(reconstruct_progression(20, 3, 3, g4, t) == doctest::Approx(1.0));
    CHECK(reconstruct_progression(777, 5, 0, CharacterGroup(1), t) == doctest::Approx(double(psi(777, 5, t))));
    CHECK_THROWS_AS(reconstruct_progression(20, 3, 2, g4, t), DomainError);
    for (std::uint64_t q : {7, 30, 64, 99}) {
        const CharacterGroup g(q);
        for (std::uint64_t a = 1; a < q; ++a) {
            if (oracle::gcd(a, q) != 1) continue;
            const double want = double(psi_progression(20'000, 30, q, a, t));
            CHECK(std::abs(reconstruct_progression(20'000, 30, a, g, t) - want) <= 1e-6 * std::max(want, 1.0));
        }
    }
}

TEST_CASE("l_smooth") {
    CHECK(near(l_smooth({1, 0}, CharacterGroup(1).principal(), 3), 3.0));
    CHECK(near(l_smooth({1, 0}, odd_mod4(), 3), 0.75));
    CHECK_THROWS_AS(l_smooth({0, 1}, odd_mod4(), 3), DomainError);
    CHECK_THROWS_AS(l_smooth({1, 0}, odd_mod4(), 1), DomainError);
    // principal character: zeta(s, y) with factors at p | q removed
    const auto chi0 = CharacterGroup(6).principal();
    CHECK(l_smooth({0.7, 0}, chi0, 50).real() ==
          doctest::Approx(zeta_smooth(0.7, 50) * (1 - std::pow(2, -0.7)) * (1 - std::pow(3, -0.7))));
    const CharacterGroup g(13);
    for (const auto& chi : g.characters())
        for (double tt : {-30.0, -1.0, 0.0, 2.5, 100.0})
            CHECK(std::abs(l_smooth({0.6, tt}, chi, 100)) <= l_smooth({0.6, 0}, g.principal(), 100).real() * (1 + 1e-12));
}

TEST_CASE("mangoldt_char_sum") {
    const auto& t = shared_table();
    CHECK(mangoldt_char_sum(10, odd_mod4(), 0, 0, t).real() == doctest::Approx(std::log(5.0) - std::log(7.0)));
    CHECK(mangoldt_char_sum(10, odd_mod4(), 0, 0, t).real() == doctest::Approx(-0.33647).epsilon(1e-4));
    CHECK(mangoldt_char_sum(1, odd_mod4(), 0.5, 3, t) == ComplexValue{0, 0});
    double cheb = 0;
    for (std::uint64_t n = 2; n <= 10; ++n)
        if (oracle::smallest_prime_factor(n) == oracle::largest_prime_factor(n))
            cheb += std::log(double(oracle::smallest_prime_factor(n)));
    CHECK(mangoldt_char_sum(10, CharacterGroup(1).principal(), 0, 0, t).real() == doctest::Approx(cheb));
    // twisted and weighted, against a direct sum
    const auto chi = CharacterGroup(7).character(2);
    ComplexValue want = 0;
    for (std::uint64_t n = 2; n <= 3000; ++n) {
        const auto p = oracle::smallest_prime_factor(n);
        if (p != oracle::largest_prime_factor(n)) continue;
        want += std::log(double(p)) * chi.value(n) * std::pow(double(n), ComplexValue{-0.3, -4.0});
    }
    CHECK(near(mangoldt_char_sum(3000, chi, 0.3, 4.0, t), want, 1e-8));
}

TEST_CASE("rational_distance_sum and the product bound") {
    CHECK(rational_distance_sum(1000, CharacterGroup(9).principal(), 0.7, 0) == 0.0);
    CHECK(rational_distance_sum(3, odd_mod4(), 1, 0) == doctest::Approx(2.0 / 3));
    CHECK_THROWS_AS(rational_distance_sum(3, odd_mod4(), 0, 0), DomainError);
    std::mt19937_64 rng(3);
    for (std::uint64_t q : {1, 4, 11, 24, 50}) {
        const CharacterGroup g(q);
        for (int k = 0; k < 30; ++k) {
            const auto chi = g.character(rng() % g.size());
            const double tt = std::uniform_real_distribution<double>(-200, 200)(rng);
            const double a = std::uniform_real_distribution<double>(0.3, 1.2)(rng);
            const double s = rational_distance_sum(500, chi, a, tt);
            CHECK(s >= 0);
            const double lhs = std::abs(l_smooth({a, tt}, chi, 500));
            const double rhs = l_smooth({a, 0}, g.principal(), 500).real() * std::exp(-s);
            CHECK(lhs <= rhs * (1 + 1e-12));
        }
    }
}

TEST_CASE("split_character_sum bridge") {
    const auto& t = shared_table();
    for (std::uint64_t q : {1, 4, 5, 12}) {
        const CharacterGroup g(q);
        for (const auto& chi : g.characters()) {
            const auto want = psi_char(30'000, 20, chi, t) - psi_char(31, 20, chi, t);
            CHECK(near(split_character_sum(30'000, 20, 31, chi, t), want, 1e-8));
        }
    }
}

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "smoothap/characters.hpp"
#include "smoothap/factor_table.hpp"
#include "smoothap/random.hpp"

namespace smoothap {

// Coefficients a_n for n = offset + 1, ..., offset + values.size().
struct CoefficientWindow {
    std::uint64_t offset = 0;
    std::vector<ComplexValue> values;

    std::uint64_t length() const { return values.size(); }
    double energy() const;  // sum |a_n|^2
};

// sum_{q <= Q} q/phi(q) sum_{chi primitive mod q} |sum_n a_n chi(n)|^2.
// Reduces the window to per-residue sums modulo q before pairing with each character.
double large_sieve_lhs(std::uint64_t Q, const CoefficientWindow& w, const CharacterGroups& groups);
// Same quantity by evaluating every sum_n a_n chi(n) term by term.
double large_sieve_lhs_direct(std::uint64_t Q, const CoefficientWindow& w, const CharacterGroups& groups);

struct LargeSieveResult {
    double lhs = 0;
    double rhs = 0;  // (N + 3 Q^2) sum |a_n|^2
    bool ok = true;
    double ratio() const { return rhs > 0 ? lhs / rhs : 0.0; }
};

LargeSieveResult large_sieve_check(std::uint64_t Q, const CoefficientWindow& w, const CharacterGroups& groups);

// Windows for tightness probing.
CoefficientWindow random_window(Rng& rng, std::uint64_t max_length, std::uint64_t max_offset);
// a_n = 1 on n = residue (mod modulus), 0 elsewhere.
CoefficientWindow progression_window(std::uint64_t offset, std::uint64_t length, std::uint64_t modulus,
                                     std::uint64_t residue);
// a_n = conj(chi(n)).
CoefficientWindow character_window(std::uint64_t offset, std::uint64_t length, const DirichletCharacter& chi);
// a_n = 1 when n is y-smooth.
CoefficientWindow smooth_window(std::uint64_t offset, std::uint64_t length, std::uint64_t y,
                                const FactorTable& table);

struct NamedWindow {
    std::string name;
    std::uint64_t Q = 1;
    CoefficientWindow window;
};

// Fixed catalogue: progression-supported, single-character-correlated and
// smooth-indicator windows at a few (Q, N) shapes, all with Q <= max_Q and N <= max_N.
std::vector<NamedWindow> adversarial_catalog(std::uint64_t max_Q, std::uint64_t max_N, const CharacterGroups& groups,
                                             const FactorTable& table);

// Conductor trichotomy: (i) cond <= min{y^eta, e^(eta sqrt(log x))},
// (ii) up to x^eta, (iii) above x^eta.
struct ConductorBuckets {
    std::uint64_t x = 0, y = 0, Q = 0;
    double eta = 0;
    double small_cutoff = 0;  // min{y^eta, exp(eta sqrt(log x))}
    double large_cutoff = 0;  // x^eta
    std::uint64_t count[3] = {0, 0, 0};
    double mass[3] = {0, 0, 0};  // sum of 1/phi(r) over the primitive characters in the bucket
    // A cutoff below 2 makes a range unable to hold any conductor > 1.
    bool small_degenerate = false;
    bool large_degenerate = false;

    std::uint64_t total() const { return count[0] + count[1] + count[2]; }
};

ConductorBuckets conductor_buckets(std::uint64_t x, std::uint64_t y, std::uint64_t Q, double eta,
                                   const CharacterGroups& groups);

}  // namespace smoothap

#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "smoothap/arith.hpp"

namespace smoothap {

using ComplexValue = std::complex<double>;

inline constexpr std::uint64_t kMaxCharacterModulus = 1'000'000;

// One cyclic factor of (Z/qZ)^*. Odd prime powers contribute one factor each;
// 4 contributes <-1>; 2^k with k >= 3 contributes <-1> x <5>.
struct CyclicComponent {
    enum class Kind { odd, two_sign, two_five };

    Kind kind = Kind::odd;
    std::uint64_t prime = 0;
    std::uint64_t prime_power = 0;       // the p^e dividing q exactly
    std::uint64_t order = 0;
    std::uint64_t generator = 0;         // modulo prime_power
    std::uint64_t lifted_generator = 0;  // modulo q: = generator mod p^e, = 1 mod q/p^e
};

class DirichletCharacter;

// The group of Dirichlet characters modulo q, realised through discrete logs
// against fixed generators: the least primitive root for odd prime powers,
// and -1, 5 for powers of two. Cheap to copy; the tables are shared.
class CharacterGroup {
public:
    explicit CharacterGroup(std::uint64_t q);

    std::uint64_t modulus() const;
    // phi(q): the number of characters.
    std::uint64_t size() const;
    // Exponent of the group, lcm of the component orders. Every character
    // value is an exact root of unity e(k / exponent()).
    std::uint64_t exponent() const;
    const Factorization& factorization() const;
    std::span<const CyclicComponent> components() const;

    // Residues in [1, q) (or {0} for q = 1) coprime to q, ascending.
    std::span<const std::uint32_t> units() const;
    // Component discrete logs of units()[u], one per component.
    std::span<const std::uint32_t> unit_logs(std::size_t u) const;
    // Position of n mod q in units(), or nullopt when gcd(n, q) > 1.
    std::optional<std::size_t> unit_index(std::uint64_t n) const;

    // exp(2 pi i k / exponent()), with exact values at multiples of a quarter turn.
    ComplexValue root(std::uint64_t k) const;

    // Characters are indexed 0..size()-1 by the mixed-radix value of their
    // exponent vector (first component varies fastest); 0 is principal.
    DirichletCharacter character(std::uint64_t index) const;
    DirichletCharacter from_exponents(std::vector<std::uint64_t> exponents) const;
    DirichletCharacter principal() const;
    std::vector<DirichletCharacter> characters() const;

    friend bool operator==(const CharacterGroup& a, const CharacterGroup& b) { return a.data_ == b.data_; }

private:
    struct Data;
    std::shared_ptr<const Data> data_;
};

class DirichletCharacter {
public:
    const CharacterGroup& group() const { return group_; }
    std::uint64_t modulus() const { return group_.modulus(); }
    std::span<const std::uint64_t> exponents() const { return exponents_; }
    std::uint64_t index() const { return index_; }

    // k with chi(n) = e(k / group().exponent()), or nullopt when gcd(n, q) > 1.
    std::optional<std::uint64_t> value_exponent(std::uint64_t n) const;
    ComplexValue value(std::uint64_t n) const;
    ComplexValue operator()(std::uint64_t n) const { return value(n); }

    // value_exponent for every residue 0..q-1, with -1 where gcd(r, q) > 1.
    std::vector<std::int64_t> exponent_table() const;

    std::uint64_t order() const { return order_; }
    std::uint64_t conductor() const { return conductor_; }
    bool is_principal() const { return order_ == 1; }
    bool is_real() const { return order_ <= 2; }
    bool is_primitive() const { return conductor_ == modulus(); }
    // chi(-1) = +1 (even) or -1 (odd).
    int parity() const;

private:
    friend class CharacterGroup;
    DirichletCharacter(CharacterGroup group, std::vector<std::uint64_t> exponents);

    CharacterGroup group_;
    std::vector<std::uint64_t> exponents_;
    std::uint64_t index_ = 0;
    std::uint64_t order_ = 1;
    std::uint64_t conductor_ = 1;
};

ComplexValue char_value(const DirichletCharacter& chi, std::uint64_t n);
std::uint64_t conductor(const DirichletCharacter& chi);

// The primitive character chi* modulo cond(chi) with chi(n) = chi*(n) [gcd(n, q) = 1].
DirichletCharacter induced_from(const DirichletCharacter& chi);

// Groups for every modulus 1..max_modulus, with their primitive characters.
class CharacterGroups {
public:
    explicit CharacterGroups(std::uint64_t max_modulus);

    std::uint64_t max_modulus() const { return groups_.size(); }
    const CharacterGroup& at(std::uint64_t q) const;
    // Indices (within at(q)) of the primitive characters modulo q.
    std::span<const std::uint64_t> primitive_indices(std::uint64_t q) const;

private:
    std::vector<CharacterGroup> groups_;
    std::vector<std::vector<std::uint64_t>> primitive_;
};

}  // namespace smoothap

#include "smoothap/characters.hpp"

#include <numbers>
#include <tuple>
#include <string>

#include "smoothap/errors.hpp"

namespace smoothap {

namespace {

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    // Extended Euclid on signed values; m <= 10^6 so no overflow.
    std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t quot = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - quot * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - quot * s);
    }
    const auto mm = static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(((old_s % mm) + mm) % mm);
}

// n = g (mod pe), n = 1 (mod q / pe).
std::uint64_t crt_lift(std::uint64_t g, std::uint64_t pe, std::uint64_t q) {
    const std::uint64_t rest = q / pe;
    if (rest == 1) return g % q;
    const std::uint64_t t = mulmod((g + pe - 1) % pe, inverse_mod(rest % pe, pe), pe);
    return (1 + rest * t) % q;
}

std::uint64_t least_primitive_root(std::uint64_t p, std::uint64_t pe, std::uint64_t order) {
    const auto order_primes = factorize(order);
    for (std::uint64_t g = 2; g < pe; ++g) {
        if (g % p == 0) continue;
        bool generates = true;
        for (const auto& [l, e] : order_primes) {
            if (powmod(g, order / l, pe) == 1) {
                generates = false;
                break;
            }
        }
        if (generates) return g;
    }
    throw SolverError("least_primitive_root: none found mod " + std::to_string(pe));
}

// Discrete logs of g^k mod m for k in [0, order): table[g^k] = k, -1 elsewhere.
std::vector<std::int64_t> power_log_table(std::uint64_t g, std::uint64_t order, std::uint64_t m) {
    std::vector<std::int64_t> table(m, -1);
    std::uint64_t v = 1 % m;
    for (std::uint64_t k = 0; k < order; ++k) {
        table[v] = static_cast<std::int64_t>(k);
        v = v * g % m;
    }
    return table;
}

}  // namespace

struct CharacterGroup::Data {
    std::uint64_t q = 1;
    std::uint64_t phi = 1;
    std::uint64_t exponent = 1;
    Factorization factorization;
    std::vector<CyclicComponent> components;
    std::vector<std::uint32_t> units;
    std::vector<std::uint32_t> logs;           // units.size() x components.size()
    std::vector<std::int32_t> unit_position;   // q entries, -1 for non-units
    std::vector<ComplexValue> roots;           // exponent entries
};

CharacterGroup::CharacterGroup(std::uint64_t q) {
    if (q == 0) throw DomainError("CharacterGroup: modulus must be >= 1");
    if (q > kMaxCharacterModulus)
        throw CapacityError("CharacterGroup: modulus " + std::to_string(q) + " exceeds " +
                            std::to_string(kMaxCharacterModulus));
    auto d = std::make_shared<Data>();
    d->q = q;
    d->factorization = q == 1 ? Factorization{} : factorize(q);
    d->phi = euler_phi(q);

    // Per-component log tables over residues modulo the component's prime power.
    std::vector<std::vector<std::int64_t>> log_tables;
    for (const auto& [p, e] : d->factorization) {
        const std::uint64_t pe = ipow(p, e);
        if (p != 2) {
            const std::uint64_t order = pe / p * (p - 1);
            const std::uint64_t g = least_primitive_root(p, pe, order);
            d->components.push_back({CyclicComponent::Kind::odd, p, pe, order, g, crt_lift(g, pe, q)});
            log_tables.push_back(power_log_table(g, order, pe));
        } else if (e == 2) {
            d->components.push_back({CyclicComponent::Kind::two_sign, 2, 4, 2, 3, crt_lift(3, 4, q)});
            log_tables.push_back({-1, 0, -1, 1});
        } else if (e >= 3) {
            d->components.push_back({CyclicComponent::Kind::two_sign, 2, pe, 2, pe - 1, crt_lift(pe - 1, pe, q)});
            std::vector<std::int64_t> sign(pe, -1);
            for (std::uint64_t r = 1; r < pe; r += 2) sign[r] = (r % 4 == 3) ? 1 : 0;
            log_tables.push_back(std::move(sign));

            const std::uint64_t order = pe / 4;
            d->components.push_back({CyclicComponent::Kind::two_five, 2, pe, order, 5, crt_lift(5, pe, q)});
            auto five = power_log_table(5, order, pe);
            // Residues = 3 (mod 4) are -5^k.
            for (std::uint64_t r = 3; r < pe; r += 4) five[r] = five[pe - r];
            log_tables.push_back(std::move(five));
        }
        // p = 2, e = 1: (Z/2)^* is trivial and contributes no component.
    }

    d->exponent = 1;
    for (const auto& c : d->components) d->exponent = lcm(d->exponent, c.order);

    const std::size_t k = d->components.size();
    d->unit_position.assign(q, -1);
    for (std::uint64_t r = 0; r < q; ++r) {
        if (gcd(r, q) != 1) continue;
        d->unit_position[r] = static_cast<std::int32_t>(d->units.size());
        d->units.push_back(static_cast<std::uint32_t>(r));
        for (std::size_t c = 0; c < k; ++c) {
            const auto log = log_tables[c][r % d->components[c].prime_power];
            d->logs.push_back(static_cast<std::uint32_t>(log));
        }
    }

    d->roots.resize(d->exponent);
    for (std::uint64_t j = 0; j < d->exponent; ++j) {
        if ((4 * j) % d->exponent == 0) {
            static constexpr ComplexValue quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
            d->roots[j] = quarter[4 * j / d->exponent];
        } else {
            d->roots[j] = std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(j) /
                                              static_cast<double>(d->exponent));
        }
    }
    data_ = std::move(d);
}

std::uint64_t CharacterGroup::modulus() const { return data_->q; }
std::uint64_t CharacterGroup::size() const { return data_->phi; }
std::uint64_t CharacterGroup::exponent() const { return data_->exponent; }
const Factorization& CharacterGroup::factorization() const { return data_->factorization; }
std::span<const CyclicComponent> CharacterGroup::components() const { return data_->components; }
std::span<const std::uint32_t> CharacterGroup::units() const { return data_->units; }

std::span<const std::uint32_t> CharacterGroup::unit_logs(std::size_t u) const {
    const std::size_t k = data_->components.size();
    return {data_->logs.data() + u * k, k};
}

std::optional<std::size_t> CharacterGroup::unit_index(std::uint64_t n) const {
    const auto pos = data_->unit_position[n % data_->q];
    if (pos < 0) return std::nullopt;
    return static_cast<std::size_t>(pos);
}

ComplexValue CharacterGroup::root(std::uint64_t k) const { return data_->roots[k % data_->exponent]; }

DirichletCharacter CharacterGroup::character(std::uint64_t index) const {
    if (index >= size()) throw DomainError("character index out of range");
    std::vector<std::uint64_t> e;
    e.reserve(data_->components.size());
    for (const auto& c : data_->components) {
        e.push_back(index % c.order);
        index /= c.order;
    }
    return DirichletCharacter(*this, std::move(e));
}

DirichletCharacter CharacterGroup::from_exponents(std::vector<std::uint64_t> exponents) const {
    if (exponents.size() != data_->components.size())
        throw DomainError("from_exponents: wrong number of exponents");
    for (std::size_t i = 0; i < exponents.size(); ++i) exponents[i] %= data_->components[i].order;
    return DirichletCharacter(*this, std::move(exponents));
}

DirichletCharacter CharacterGroup::principal() const { return character(0); }

std::vector<DirichletCharacter> CharacterGroup::characters() const {
    std::vector<DirichletCharacter> out;
    out.reserve(size());
    for (std::uint64_t i = 0; i < size(); ++i) out.push_back(character(i));
    return out;
}

DirichletCharacter::DirichletCharacter(CharacterGroup group, std::vector<std::uint64_t> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
    const auto comps = group_.components();
    std::uint64_t stride = 1;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto& c = comps[i];
        const std::uint64_t e = exponents_[i];
        index_ += e * stride;
        stride *= c.order;
        const std::uint64_t part_order = c.order / gcd(e, c.order);
        order_ = lcm(order_, part_order);
    }

    // Conductor, one prime at a time. The 2-adic sign and five parts share a prime.
    std::uint64_t two_part = 1;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto& c = comps[i];
        const std::uint64_t d = c.order / gcd(exponents_[i], c.order);
        switch (c.kind) {
            case CyclicComponent::Kind::odd:
                // Trivial on {n = 1 mod p^f} iff d | (p-1) p^(f-1).
                if (d > 1) conductor_ *= ipow(c.prime, 1 + valuation(d, c.prime));
                break;
            case CyclicComponent::Kind::two_sign:
                if (d > 1) two_part = std::max<std::uint64_t>(two_part, 4);
                break;
            case CyclicComponent::Kind::two_five:
                // d = 2^k; trivial on {n = 1 mod 2^f} = <5^(2^(f-2))> iff 2^k | 2^(f-2).
                if (d > 1) two_part = std::max<std::uint64_t>(two_part, d * 4);
                break;
        }
    }
    conductor_ *= two_part;
}

std::optional<std::uint64_t> DirichletCharacter::value_exponent(std::uint64_t n) const {
    const auto u = group_.unit_index(n);
    if (!u) return std::nullopt;
    const auto logs = group_.unit_logs(*u);
    const auto comps = group_.components();
    const std::uint64_t big = group_.exponent();
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < comps.size(); ++i)
        k = (k + exponents_[i] * logs[i] % comps[i].order * (big / comps[i].order)) % big;
    return k;
}

ComplexValue DirichletCharacter::value(std::uint64_t n) const {
    const auto k = value_exponent(n);
    return k ? group_.root(*k) : ComplexValue{0, 0};
}

std::vector<std::int64_t> DirichletCharacter::exponent_table() const {
    const std::uint64_t q = modulus();
    std::vector<std::int64_t> out(q, -1);
    for (std::uint64_t r = 0; r < q; ++r)
        if (auto k = value_exponent(r)) out[r] = static_cast<std::int64_t>(*k);
    return out;
}

int DirichletCharacter::parity() const {
    const std::uint64_t q = modulus();
    const auto k = value_exponent(q - 1 + (q == 1 ? 1 : 0));
    return (*k == 0) ? 1 : -1;
}

ComplexValue char_value(const DirichletCharacter& chi, std::uint64_t n) { return chi.value(n); }

std::uint64_t conductor(const DirichletCharacter& chi) { return chi.conductor(); }

DirichletCharacter induced_from(const DirichletCharacter& chi) {
    const std::uint64_t f = chi.conductor();
    const std::uint64_t q = chi.modulus();
    if (f == q) return chi;
    CharacterGroup target(f);
    const std::uint64_t big = chi.group().exponent();
    std::vector<std::uint64_t> e;
    for (const auto& c : target.components()) {
        // Any n = g (mod f) coprime to q sees the same chi value.
        std::uint64_t n = c.lifted_generator;
        while (gcd(n, q) != 1) n += f;
        const std::uint64_t k = *chi.value_exponent(n);
        if ((k * c.order) % big != 0) throw SolverError("induced_from: value order inconsistent with conductor");
        e.push_back(k * c.order / big);
    }
    return target.from_exponents(std::move(e));
}

CharacterGroups::CharacterGroups(std::uint64_t max_modulus) {
    if (max_modulus == 0) throw DomainError("CharacterGroups: need max_modulus >= 1");
    groups_.reserve(max_modulus);
    primitive_.resize(max_modulus);
    for (std::uint64_t q = 1; q <= max_modulus; ++q) {
        groups_.emplace_back(q);
        for (std::uint64_t i = 0; i < groups_.back().size(); ++i)
            if (groups_.back().character(i).is_primitive()) primitive_[q - 1].push_back(i);
    }
}

const CharacterGroup& CharacterGroups::at(std::uint64_t q) const {
    if (q == 0 || q > groups_.size())
        throw CapacityError("CharacterGroups: modulus " + std::to_string(q) + " outside [1, " +
                            std::to_string(groups_.size()) + "]");
    return groups_[q - 1];
}

std::span<const std::uint64_t> CharacterGroups::primitive_indices(std::uint64_t q) const {
    at(q);
    return primitive_[q - 1];
}

}  // namespace smoothap

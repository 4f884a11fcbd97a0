#include "cyclomat/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cyclomat/ntheory.hpp"

namespace cyclomat::characters {

using ntheory::mod_reduce;

// ---------------------------------------------------------------------------
// CharacterValue

CharacterValue CharacterValue::root(long numerator, long denominator) {
    if (denominator < 1)
        throw std::domain_error("CharacterValue: denominator must be >= 1");
    CharacterValue v;
    long num = mod_reduce(numerator, denominator);
    long g = std::gcd(num, denominator);
    if (num == 0) g = denominator;
    v.num_ = num / g;
    v.den_ = denominator / g;
    return v;
}

CharacterValue CharacterValue::operator*(const CharacterValue& rhs) const {
    if (is_zero() || rhs.is_zero()) return zero();
    long common = std::lcm(den_, rhs.den_);
    return root(num_ * (common / den_) + rhs.num_ * (common / rhs.den_), common);
}

CharacterValue CharacterValue::conj() const {
    if (is_zero()) return zero();
    return root(-num_, den_);
}

std::complex<double> CharacterValue::to_complex() const {
    if (is_zero()) return {0.0, 0.0};
    if (is_one()) return {1.0, 0.0};
    if (is_minus_one()) return {-1.0, 0.0};
    double angle = 2.0 * std::numbers::pi * static_cast<double>(num_) /
                   static_cast<double>(den_);
    return {std::cos(angle), std::sin(angle)};
}

cyclotomic::RootTerm CharacterValue::to_root_term() const {
    if (is_zero())
        throw std::domain_error("CharacterValue: zero has no root-of-unity form");
    return {num_, den_};
}

// ---------------------------------------------------------------------------
// UnitGroupBasis

namespace {

long pow_mod(long base, long exp, long mod) {
    long long result = 1 % mod;
    long long b = mod_reduce(base, mod);
    while (exp > 0) {
        if (exp & 1) result = result * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<long>(result);
}

long element_order(long g, long pe, long phi) {
    long order = phi;
    for (auto [p, e] : ntheory::factorize(phi)) {
        (void)e;
        while (order % p == 0 && pow_mod(g, order / p, pe) == 1) order /= p;
    }
    return order;
}

// smallest generator of the cyclic group of units mod an odd prime power
long smallest_primitive_root(long pe, long phi) {
    for (long g = 2; g < pe; ++g) {
        if (std::gcd(g, pe) != 1) continue;
        if (element_order(g, pe, phi) == phi) return g;
    }
    throw std::logic_error("no primitive root mod " + std::to_string(pe));
}

// CRT lift: residue == r mod pe, == 1 mod n/pe.
long crt_lift(long r, long pe, long n) {
    long m = n / pe;
    if (m == 1) return mod_reduce(r, n);
    // x = r + pe * t with x == 1 mod m
    long t = mod_reduce(static_cast<long long>(ntheory::mod_inverse(pe, m)) *
                            mod_reduce(1 - r, m),
                        m);
    return mod_reduce(static_cast<long long>(r) + static_cast<long long>(pe) * t,
                      n);
}

} // namespace

UnitGroupBasis::UnitGroupBasis(long n) : n_(n) {
    phi_ = ntheory::euler_phi(n);
    exponent_ = 1;

    for (auto [p, e] : ntheory::factorize(n)) {
        long pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;

        Component comp;
        comp.prime_power = pe;
        comp.first_factor = factor_orders_.size();

        std::vector<long> gens, orders;
        if (p == 2) {
            if (e == 2) {
                gens = {3};
                orders = {2};
            } else if (e >= 3) {
                gens = {pe - 1, 5};
                orders = {2, pe / 4};
            }
            // 2^1: trivial group, no factors
        } else {
            long phi_pe = pe / p * (p - 1);
            gens = {smallest_primitive_root(pe, phi_pe)};
            orders = {phi_pe};
        }

        comp.factor_count = gens.size();
        comp.table.assign(static_cast<std::size_t>(pe) * std::max<std::size_t>(
                              comp.factor_count, 1),
                          -1);

        // fill the dlog table by walking every exponent tuple
        std::vector<long> exps(comp.factor_count, 0);
        bool done = gens.empty();
        while (!done) {
            long residue = 1;
            for (std::size_t j = 0; j < gens.size(); ++j)
                residue = static_cast<long>(
                    static_cast<long long>(residue) *
                    pow_mod(gens[j], exps[j], pe) % pe);
            for (std::size_t j = 0; j < gens.size(); ++j)
                comp.table[static_cast<std::size_t>(residue) * comp.factor_count +
                           j] = static_cast<std::int32_t>(exps[j]);
            // odometer
            std::size_t j = gens.size();
            while (j-- > 0) {
                if (++exps[j] < orders[j]) break;
                exps[j] = 0;
                if (j == 0) done = true;
            }
        }

        for (std::size_t j = 0; j < gens.size(); ++j) {
            factor_orders_.push_back(orders[j]);
            factor_generators_.push_back(crt_lift(gens[j], pe, n));
            exponent_ = std::lcm(exponent_, orders[j]);
        }
        components_.push_back(std::move(comp));
    }
}

std::shared_ptr<const UnitGroupBasis> UnitGroupBasis::create(long n) {
    if (n < 1)
        throw std::domain_error("UnitGroupBasis: modulus must be >= 1, got " +
                                std::to_string(n));
    return std::shared_ptr<const UnitGroupBasis>(new UnitGroupBasis(n));
}

bool UnitGroupBasis::is_unit(long long x) const {
    return std::gcd(static_cast<long long>(mod_reduce(x, n_)),
                    static_cast<long long>(n_)) == 1;
}

std::vector<long> UnitGroupBasis::dlog(long long x) const {
    long r = mod_reduce(x, n_);
    if (std::gcd(static_cast<long long>(r), static_cast<long long>(n_)) != 1)
        throw std::domain_error("dlog: " + std::to_string(x) +
                                " is not a unit mod " + std::to_string(n_));
    std::vector<long> exps;
    exps.reserve(factor_orders_.size());
    for (const Component& comp : components_) {
        long local = r % comp.prime_power;
        for (std::size_t j = 0; j < comp.factor_count; ++j)
            exps.push_back(comp.table[static_cast<std::size_t>(local) *
                                          comp.factor_count +
                                      j]);
    }
    return exps;
}

// ---------------------------------------------------------------------------
// DirichletCharacter

DirichletCharacter::DirichletCharacter(
    std::shared_ptr<const UnitGroupBasis> basis, std::vector<long> exponents)
    : basis_(std::move(basis)), exponents_(std::move(exponents)),
      conductor_cache_(0) {
    if (!basis_) throw std::invalid_argument("DirichletCharacter: null basis");
    if (exponents_.size() != basis_->factor_count())
        throw std::invalid_argument(
            "DirichletCharacter: exponent vector has wrong length");
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        exponents_[i] = mod_reduce(exponents_[i], basis_->factor_orders()[i]);
    odd_ = (*this)(-1).is_minus_one();
}

DirichletCharacter::DirichletCharacter(const DirichletCharacter& other)
    : basis_(other.basis_), exponents_(other.exponents_), odd_(other.odd_),
      conductor_cache_(other.conductor_cache_.load(std::memory_order_relaxed)) {}

DirichletCharacter&
DirichletCharacter::operator=(const DirichletCharacter& other) {
    basis_ = other.basis_;
    exponents_ = other.exponents_;
    odd_ = other.odd_;
    conductor_cache_.store(
        other.conductor_cache_.load(std::memory_order_relaxed),
        std::memory_order_relaxed);
    return *this;
}

CharacterValue DirichletCharacter::operator()(long long k) const {
    long n = basis_->modulus();
    long r = mod_reduce(k, n);
    if (std::gcd(static_cast<long long>(r), static_cast<long long>(n)) != 1)
        return CharacterValue::zero();
    std::vector<long> exps = basis_->dlog(r);
    long common = basis_->group_exponent();
    long long num = 0;
    const std::vector<long>& orders = basis_->factor_orders();
    for (std::size_t i = 0; i < exps.size(); ++i) {
        long long term = static_cast<long long>(exponents_[i]) * exps[i] %
                         orders[i];
        num += term * (common / orders[i]);
    }
    return CharacterValue::root(static_cast<long>(num % common), common);
}

bool DirichletCharacter::is_principal() const {
    return std::all_of(exponents_.begin(), exponents_.end(),
                       [](long e) { return e == 0; });
}

long DirichletCharacter::conductor() const {
    long cached = conductor_cache_.load(std::memory_order_relaxed);
    if (cached != 0) return cached;
    long n = basis_->modulus();
    long found = n;
    for (long d : ntheory::divisors(n)) {
        bool trivial_on_kernel = true;
        for (long k = 1; k <= n && trivial_on_kernel; k += d) {
            // k runs over residues == 1 mod d
            if (!basis_->is_unit(k)) continue;
            if (!(*this)(k).is_one()) trivial_on_kernel = false;
        }
        if (trivial_on_kernel) {
            found = d;
            break;
        }
    }
    conductor_cache_.store(found, std::memory_order_relaxed);
    return found;
}

DirichletCharacter DirichletCharacter::conjugate() const {
    std::vector<long> exps(exponents_.size());
    const std::vector<long>& orders = basis_->factor_orders();
    for (std::size_t i = 0; i < exps.size(); ++i)
        exps[i] = exponents_[i] == 0 ? 0 : orders[i] - exponents_[i];
    return DirichletCharacter(basis_, std::move(exps));
}

DirichletCharacter DirichletCharacter::primitive_part() const {
    long n = basis_->modulus();
    long f = conductor();
    auto fbasis = UnitGroupBasis::create(f);
    std::vector<long> exps(fbasis->factor_count(), 0);
    for (std::size_t i = 0; i < fbasis->factor_count(); ++i) {
        long g = fbasis->factor_generator(i);
        long order = fbasis->factor_orders()[i];
        // lift g to a unit mod n congruent to g mod f
        long lift = -1;
        for (long l = g; l <= g + n; l += f) {
            if (std::gcd(l, n) == 1) {
                lift = l;
                break;
            }
        }
        if (lift < 0)
            throw std::logic_error("primitive_part: no coprime lift found");
        CharacterValue v = (*this)(lift);
        // v is a root of unity of order dividing the factor order
        if (order % v.denominator() != 0)
            throw std::logic_error("primitive_part: value order does not divide "
                                   "factor order");
        exps[i] = mod_reduce(static_cast<long long>(v.numerator()) *
                                 (order / v.denominator()),
                             order);
    }
    return DirichletCharacter(fbasis, std::move(exps));
}

// ---------------------------------------------------------------------------
// free functions

std::shared_ptr<const UnitGroupBasis> unit_group_basis(long n) {
    if (n < 3)
        throw std::domain_error("unit_group_basis: n must be >= 3, got " +
                                std::to_string(n));
    return UnitGroupBasis::create(n);
}

std::vector<DirichletCharacter> enumerate_characters(long n) {
    auto basis = unit_group_basis(n);
    const std::vector<long>& orders = basis->factor_orders();
    std::vector<DirichletCharacter> chars;
    chars.reserve(static_cast<std::size_t>(basis->group_order()));
    std::vector<long> exps(orders.size(), 0);
    while (true) {
        chars.emplace_back(basis, exps);
        // lexicographic successor: last position varies fastest
        std::size_t j = exps.size();
        while (j > 0) {
            --j;
            if (++exps[j] < orders[j]) break;
            exps[j] = 0;
            if (j == 0) return chars;
        }
        if (exps.empty()) return chars;   // trivial group: single character
    }
}

DirichletCharacter principal_character(long n) {
    auto basis = UnitGroupBasis::create(n);
    return DirichletCharacter(basis,
                              std::vector<long>(basis->factor_count(), 0));
}

DirichletCharacter induced_character(const DirichletCharacter& base, long n) {
    long q = base.modulus();
    if (n < 1 || n % q != 0)
        throw std::domain_error("induced_character: " + std::to_string(q) +
                                " does not divide " + std::to_string(n));
    auto basis = UnitGroupBasis::create(n);
    std::vector<long> exps(basis->factor_count(), 0);
    for (std::size_t i = 0; i < basis->factor_count(); ++i) {
        long g = basis->factor_generator(i);
        long order = basis->factor_orders()[i];
        CharacterValue v = base(g);
        if (v.is_zero() || order % v.denominator() != 0)
            throw std::logic_error("induced_character: incompatible value");
        exps[i] = mod_reduce(static_cast<long long>(v.numerator()) *
                                 (order / v.denominator()),
                             order);
    }
    return DirichletCharacter(basis, std::move(exps));
}

} // namespace cyclomat::characters

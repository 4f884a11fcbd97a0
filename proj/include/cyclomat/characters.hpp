#pragma once

#include <atomic>
#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "cyclomat/cyclotomic.hpp"
#include "cyclomat/types.hpp"

// The Dirichlet character group mod n. Characters are exponent vectors over a
// fixed basis of the unit group; values are exact points on the unit circle so
// that orthogonality and conductor computations need no tolerances.
//
// Basis conventions (fixed so enumeration order is reproducible):
//   * odd prime power p^e: one cyclic factor, generated by the smallest
//     primitive root mod p^e;
//   * 4: one factor of order 2, generated by 3;
//   * 2^e, e >= 3: the factor pair {2^e - 1, 5} of orders {2, 2^(e-2)};
//   * 2: no factors.
// Components are ordered by prime, factors within a component as above.

namespace cyclomat::characters {

// e^(2*pi*i * numerator/denominator) in lowest terms, or the zero value taken
// on arguments sharing a factor with the modulus.
class CharacterValue {
public:
    static CharacterValue zero() { return CharacterValue(); }
    static CharacterValue one() { return root(0, 1); }
    static CharacterValue root(long numerator, long denominator);

    bool is_zero() const { return den_ == 0; }
    bool is_one() const { return num_ == 0 && den_ == 1; }
    bool is_minus_one() const { return num_ == 1 && den_ == 2; }

    long numerator() const { return num_; }
    long denominator() const { return den_; }

    CharacterValue operator*(const CharacterValue& rhs) const;
    CharacterValue conj() const;
    bool operator==(const CharacterValue& rhs) const = default;

    std::complex<double> to_complex() const;
    cyclotomic::RootTerm to_root_term() const;   // requires !is_zero()

private:
    CharacterValue() : num_(0), den_(0) {}
    long num_, den_;
};

class UnitGroupBasis {
public:
    // Accepts any n >= 1; moduli 1 and 2 carry the trivial group and exist
    // for conductor/primitive-part bookkeeping.
    static std::shared_ptr<const UnitGroupBasis> create(long n);

    long modulus() const { return n_; }
    long group_order() const { return phi_; }
    long group_exponent() const { return exponent_; }

    std::size_t factor_count() const { return factor_orders_.size(); }
    const std::vector<long>& factor_orders() const { return factor_orders_; }
    // Generator of factor i, lifted to a residue mod n that is 1 in every
    // other component.
    long factor_generator(std::size_t i) const { return factor_generators_[i]; }

    bool is_unit(long long x) const;
    // Exponent vector of a unit over the factors; inverse of exponentiation.
    std::vector<long> dlog(long long x) const;

private:
    explicit UnitGroupBasis(long n);

    struct Component {
        long prime_power;
        std::size_t first_factor;           // index into factor_orders_
        std::size_t factor_count;
        std::vector<std::int32_t> table;    // residue * factor_count + j -> exponent
    };

    long n_;
    long phi_;
    long exponent_;
    std::vector<long> factor_orders_;
    std::vector<long> factor_generators_;
    std::vector<Component> components_;
};

class DirichletCharacter {
public:
    DirichletCharacter(std::shared_ptr<const UnitGroupBasis> basis,
                       std::vector<long> exponents);

    DirichletCharacter(const DirichletCharacter& other);
    DirichletCharacter& operator=(const DirichletCharacter& other);

    long modulus() const { return basis_->modulus(); }
    const std::vector<long>& exponents() const { return exponents_; }
    const UnitGroupBasis& basis() const { return *basis_; }

    // chi(k); the zero value when gcd(k, n) > 1. Any integer argument.
    CharacterValue operator()(long long k) const;

    bool is_principal() const;
    bool is_odd() const { return odd_; }
    Parity parity() const { return odd_ ? Parity::odd : Parity::even; }

    // Smallest divisor d of the modulus with chi trivial on units == 1 mod d.
    // Brute-force by definition; cached after the first call.
    long conductor() const;
    bool is_primitive() const { return conductor() == modulus(); }

    DirichletCharacter conjugate() const;

    // The primitive character mod conductor() inducing this one.
    DirichletCharacter primitive_part() const;

    bool operator==(const DirichletCharacter& rhs) const {
        return modulus() == rhs.modulus() && exponents_ == rhs.exponents_;
    }

private:
    std::shared_ptr<const UnitGroupBasis> basis_;
    std::vector<long> exponents_;
    bool odd_;
    mutable std::atomic<long> conductor_cache_;   // 0 = not yet computed
};

std::shared_ptr<const UnitGroupBasis> unit_group_basis(long n);   // n >= 3

// All phi(n) characters mod n, ordered lexicographically by exponent vector.
// Exactly half are odd. n >= 3.
std::vector<DirichletCharacter> enumerate_characters(long n);

DirichletCharacter principal_character(long n);

// Lift a character mod q to modulus n, q | n: values agree on residues that
// are units for both moduli. Inverse of primitive_part when q is the
// conductor.
DirichletCharacter induced_character(const DirichletCharacter& base, long n);

} // namespace cyclomat::characters

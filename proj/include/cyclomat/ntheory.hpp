#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

// Elementary number-theoretic primitives and the residue bookkeeping the
// matrix modules depend on. Everything here is a pure function; factorization
// is plain trial division, which is ample at desk scale (n up to ~1e5).

namespace cyclomat::ntheory {

// Reduce x into [0, n).
long mod_reduce(long long x, long n);

// (prime, multiplicity) pairs, primes ascending.
std::vector<std::pair<long, int>> factorize(long n);

long euler_phi(long n);
int moebius(long n);
bool is_squarefree(long n);
std::vector<long> divisors(long n);

// k* in [1, n-1] with k * k* == 1 (mod n). Throws std::domain_error when
// gcd(k, n) != 1.
long mod_inverse(long long k, long n);

// The canonical ordered half-system of units mod n:
//   {l : 1 <= l <= n/2, gcd(l, n) = 1}, ascending.
// Exactly one of +-k is congruent to a member, for every unit k.
class RepresentativeSet {
public:
    explicit RepresentativeSet(long n);   // n >= 3

    long modulus() const { return n_; }
    const std::vector<long>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    long at(std::size_t i) const { return members_[i]; }

    // Position of l in members(), if present.
    std::optional<std::size_t> index_of(long l) const;

private:
    long n_;
    std::vector<long> members_;
    std::vector<std::int32_t> position_;   // residue -> index + 1, 0 = absent
};

RepresentativeSet representative_set(long n);

// x == sign * representative (mod n), with the representative in the set.
struct CanonicalResidue {
    int sign;              // +1 or -1
    long representative;
};

// Throws std::domain_error when gcd(x, n) != 1.
CanonicalResidue canonical_residue(long long x, const RepresentativeSet& reps);

// |{q : q >= 3, q | n, k == 1 (mod q)}| -- the divisor count that weights the
// closed-form inverse coefficients. Defined only for gcd(k, n) = 1.
long residue_one_divisor_count(long long k, long n);

} // namespace cyclomat::ntheory

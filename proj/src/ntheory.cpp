#include "cyclomat/ntheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cyclomat::ntheory {

namespace {

void require_positive(long n, const char* who) {
    if (n <= 0)
        throw std::domain_error(std::string(who) + ": n must be positive, got " +
                                std::to_string(n));
}

} // namespace

long mod_reduce(long long x, long n) {
    require_positive(n, "mod_reduce");
    long long r = x % n;
    if (r < 0) r += n;
    return static_cast<long>(r);
}

std::vector<std::pair<long, int>> factorize(long n) {
    require_positive(n, "factorize");
    std::vector<std::pair<long, int>> factors;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        factors.emplace_back(p, e);
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

long euler_phi(long n) {
    require_positive(n, "euler_phi");
    long phi = 1;
    for (auto [p, e] : factorize(n)) {
        long pe = 1;
        for (int i = 1; i < e; ++i) pe *= p;
        phi *= pe * (p - 1);
    }
    return phi;
}

int moebius(long n) {
    require_positive(n, "moebius");
    int parity = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        parity = -parity;
    }
    return parity;
}

bool is_squarefree(long n) { return moebius(n) != 0; }

std::vector<long> divisors(long n) {
    require_positive(n, "divisors");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

long mod_inverse(long long k, long n) {
    require_positive(n, "mod_inverse");
    long a = mod_reduce(k, n);
    // extended Euclid on (a, n)
    long old_r = a, r = n;
    long old_s = 1, s = 0;
    while (r != 0) {
        long q = old_r / r;
        long tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1)
        throw std::domain_error("mod_inverse: gcd(" + std::to_string(k) + ", " +
                                std::to_string(n) + ") = " + std::to_string(old_r) +
                                " != 1");
    return mod_reduce(old_s, n);
}

RepresentativeSet::RepresentativeSet(long n) : n_(n) {
    if (n < 3)
        throw std::domain_error("representative_set: n must be >= 3, got " +
                                std::to_string(n));
    position_.assign(static_cast<std::size_t>(n), 0);
    for (long l = 1; 2 * l <= n; ++l) {
        if (std::gcd(l, n) != 1) continue;
        members_.push_back(l);
        position_[static_cast<std::size_t>(l)] =
            static_cast<std::int32_t>(members_.size());
    }
}

std::optional<std::size_t> RepresentativeSet::index_of(long l) const {
    if (l < 1 || l >= n_) return std::nullopt;
    std::int32_t pos = position_[static_cast<std::size_t>(l)];
    if (pos == 0) return std::nullopt;
    return static_cast<std::size_t>(pos - 1);
}

RepresentativeSet representative_set(long n) { return RepresentativeSet(n); }

CanonicalResidue canonical_residue(long long x, const RepresentativeSet& reps) {
    long n = reps.modulus();
    long r = mod_reduce(x, n);
    if (std::gcd(r, n) != 1)
        throw std::domain_error("canonical_residue: gcd(" + std::to_string(x) +
                                ", " + std::to_string(n) + ") != 1");
    if (reps.index_of(r)) return {+1, r};
    return {-1, n - r};
}

long residue_one_divisor_count(long long k, long n) {
    require_positive(n, "residue_one_divisor_count");
    long r = mod_reduce(k, n);
    if (std::gcd(r, n) != 1)
        throw std::domain_error("residue_one_divisor_count: gcd(" +
                                std::to_string(k) + ", " + std::to_string(n) +
                                ") != 1");
    long count = 0;
    for (long q : divisors(n))
        if (q >= 3 && r % q == 1) ++count;
    return count;
}

} // namespace cyclomat::ntheory

#include "cyclomat/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "cyclomat/ntheory.hpp"

namespace cyclomat::cyclotomic {

namespace {

using Poly = std::vector<long long>;   // ascending degree, integer coefficients

// Exact quotient q = a / b for monic b dividing a exactly.
Poly divide_exact(Poly a, const Poly& b) {
    if (a.size() < b.size()) throw std::logic_error("divide_exact: degree");
    Poly q(a.size() - b.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
        long long c = a[i + b.size() - 1];
        q[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            a[i + j] -= c * b[j];
    }
    return q;
}

Poly compute_cyclotomic(long m) {
    // x^m - 1 divided by the cyclotomic polynomials of all proper divisors
    Poly poly(static_cast<std::size_t>(m) + 1, 0);
    poly[0] = -1;
    poly[static_cast<std::size_t>(m)] = 1;
    for (long d : ntheory::divisors(m)) {
        if (d == m) continue;
        poly = divide_exact(poly, cyclotomic_polynomial(d));
    }
    return poly;
}

std::mutex cache_mutex;
std::map<long, Poly> cache;

} // namespace

std::vector<long long> cyclotomic_polynomial(long m) {
    if (m < 1) throw std::domain_error("cyclotomic_polynomial: m must be >= 1");
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }
    Poly poly = compute_cyclotomic(m);
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(m, std::move(poly)).first->second;
}

std::optional<long long> integer_sum(const std::vector<RootTerm>& terms) {
    long common = 1;
    for (const RootTerm& t : terms) {
        if (t.order < 1 || t.numerator < 0 || t.numerator >= t.order)
            throw std::domain_error("integer_sum: malformed term");
        common = std::lcm(common, t.order);
    }

    // counts of zeta_common^a over all terms
    Poly poly(static_cast<std::size_t>(common), 0);
    for (const RootTerm& t : terms)
        poly[static_cast<std::size_t>(t.numerator * (common / t.order))] += 1;

    // reduce modulo the common-order cyclotomic polynomial
    Poly modulus = cyclotomic_polynomial(common);
    std::size_t deg = modulus.size() - 1;
    for (std::size_t i = poly.size(); i-- > deg;) {
        long long c = poly[i];
        if (c == 0) continue;
        poly[i] = 0;
        for (std::size_t j = 0; j < deg; ++j)
            poly[i - deg + j] -= c * modulus[j];
    }
    for (std::size_t i = 1; i < std::min(poly.size(), deg); ++i)
        if (poly[i] != 0) return std::nullopt;
    return poly.empty() ? 0 : poly[0];
}

} // namespace cyclomat::cyclotomic

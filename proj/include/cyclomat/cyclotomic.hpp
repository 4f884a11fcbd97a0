#pragma once

#include <cstdint>
#include <optional>
#include <vector>

// Exact arithmetic support for sums of roots of unity. A sum of e^(2*pi*i*a/m)
// terms equals a rational integer exactly when the associated polynomial is
// congruent to that integer modulo the m-th cyclotomic polynomial; this is how
// the character orthogonality relations are checked without tolerances.

namespace cyclomat::cyclotomic {

// Coefficients of the m-th cyclotomic polynomial, ascending degree.
std::vector<long long> cyclotomic_polynomial(long m);

// One exact unit-circle term e^(2*pi*i * numerator / order).
struct RootTerm {
    long numerator;   // reduced, 0 <= numerator < order
    long order;       // >= 1
};

// Exact integer value of the sum of the given terms, or nullopt when the sum
// is not a rational integer.
std::optional<long long> integer_sum(const std::vector<RootTerm>& terms);

} // namespace cyclomat::cyclotomic

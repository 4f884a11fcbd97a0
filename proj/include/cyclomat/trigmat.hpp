#pragma once

#include <vector>

#include "cyclomat/linalg.hpp"
#include "cyclomat/ntheory.hpp"
#include "cyclomat/types.hpp"

// The sine and cosine matrices over the canonical half-system of units, their
// invertibility criterion, and the closed-form inverses with exact rational
// coefficients (integer numerators over the fixed denominator n).

namespace cyclomat::trigmat {

// 2*sin(2*pi*k/n) or 2*cos(2*pi*k/n).
double trig_value(MatrixKind kind, long long k, long n);

// Additive constant in every cosine inverse coefficient: 2 for odd n, 4 for
// even n.
long cosine_offset(long n);

// One matrix entry: sign * base value of the representative index. Cosine
// entries always carry sign +1. For a hatted matrix the value is the inverse
// basis value instead.
struct TrigEntry {
    int sign;
    long index;     // member of the representative set
    double value;
};

class TrigMatrix {
public:
    TrigMatrix(MatrixKind kind, long n, bool hatted);

    MatrixKind kind() const { return kind_; }
    long modulus() const { return n_; }
    bool hatted() const { return hatted_; }
    const ntheory::RepresentativeSet& representatives() const { return reps_; }
    std::size_t dim() const { return reps_.size(); }

    const TrigEntry& at(std::size_t row, std::size_t col) const {
        return entries_[row * dim() + col];
    }
    TrigEntry& at(std::size_t row, std::size_t col) {
        return entries_[row * dim() + col];
    }

    linalg::RMatrix values() const;

private:
    MatrixKind kind_;
    long n_;
    bool hatted_;
    ntheory::RepresentativeSet reps_;
    std::vector<TrigEntry> entries_;
};

// The phi(n)/2-dimensional matrix with entry (j, k) determined by j * k^-1
// mod n. n >= 3.
TrigMatrix build_matrix(long n, MatrixKind kind);

// sine: n square-free or n = 4; cosine: n square-free.
bool is_invertible(long n, MatrixKind kind);

// Exact expansion of each inverse basis value over the plain basis values:
// row l, column m holds the integer numerator of the coefficient of the m-th
// basis value, all over the common denominator n.
class SymbolicInverse {
public:
    SymbolicInverse(MatrixKind kind, long n);

    MatrixKind kind() const { return kind_; }
    long modulus() const { return n_; }
    long denominator() const { return n_; }
    const ntheory::RepresentativeSet& representatives() const { return reps_; }
    std::size_t dim() const { return reps_.size(); }

    long numerator(std::size_t row, std::size_t col) const {
        return numerators_[row * dim() + col];
    }
    std::vector<long> row(std::size_t r) const;

    // Float value of the inverse basis element for representative index l.
    double value_at(std::size_t row) const;

private:
    friend SymbolicInverse inverse_coefficients(long, MatrixKind);
    MatrixKind kind_;
    long n_;
    ntheory::RepresentativeSet reps_;
    std::vector<long> numerators_;
};

// Throws singular_error (naming the offending squared divisor) when the
// (n, kind) pair fails the invertibility criterion.
SymbolicInverse inverse_coefficients(long n, MatrixKind kind);

// The inverse matrix assembled from the symbolic coefficients; it carries the
// same sign/index tags as build_matrix, with hatted values.
TrigMatrix explicit_inverse(long n, MatrixKind kind);

// Inverse basis value for an arbitrary coprime k, via the canonical residue:
// odd symmetry for sine, even symmetry for cosine.
double inverse_entry_value(long long k, long n, MatrixKind kind);

} // namespace cyclomat::trigmat

#include "cyclomat/trigmat.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace cyclomat::trigmat {

using ntheory::CanonicalResidue;
using ntheory::RepresentativeSet;

double trig_value(MatrixKind kind, long long k, long n) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                   static_cast<double>(n);
    return 2.0 * (kind == MatrixKind::sine ? std::sin(angle) : std::cos(angle));
}

long cosine_offset(long n) { return n % 2 == 1 ? 2 : 4; }

TrigMatrix::TrigMatrix(MatrixKind kind, long n, bool hatted)
    : kind_(kind), n_(n), hatted_(hatted), reps_(n),
      entries_(reps_.size() * reps_.size()) {}

linalg::RMatrix TrigMatrix::values() const {
    linalg::RMatrix m(dim(), dim());
    for (std::size_t r = 0; r < dim(); ++r)
        for (std::size_t c = 0; c < dim(); ++c)
            m(r, c) = at(r, c).value;
    return m;
}

TrigMatrix build_matrix(long n, MatrixKind kind) {
    TrigMatrix m(kind, n, /*hatted=*/false);
    const RepresentativeSet& reps = m.representatives();
    for (std::size_t col = 0; col < reps.size(); ++col) {
        long k_inv = ntheory::mod_inverse(reps.at(col), n);
        for (std::size_t row = 0; row < reps.size(); ++row) {
            CanonicalResidue cr = ntheory::canonical_residue(
                static_cast<long long>(reps.at(row)) * k_inv, reps);
            TrigEntry& e = m.at(row, col);
            e.index = cr.representative;
            if (kind == MatrixKind::sine) {
                e.sign = cr.sign;
                e.value = cr.sign * trig_value(kind, cr.representative, n);
            } else {
                e.sign = +1;   // cosine is even in its index
                e.value = trig_value(kind, cr.representative, n);
            }
        }
    }
    return m;
}

bool is_invertible(long n, MatrixKind kind) {
    if (n < 3) throw std::domain_error("is_invertible: n must be >= 3");
    if (ntheory::is_squarefree(n)) return true;
    return kind == MatrixKind::sine && n == 4;
}

namespace {

// Smallest prime whose square divides n; 0 if square-free.
long squared_divisor(long n) {
    for (auto [p, e] : ntheory::factorize(n))
        if (e >= 2) return p;
    return 0;
}

void require_invertible(long n, MatrixKind kind) {
    if (is_invertible(n, kind)) return;
    long p = squared_divisor(n);
    std::string msg = std::string(to_string(kind)) + " matrix mod " +
                      std::to_string(n) + " is singular: " + std::to_string(n) +
                      " is divisible by " + std::to_string(p) + "^2";
    if (n == 4)
        msg += " (the n=4 exception applies only to the sine matrix)";
    throw singular_error(msg);
}

} // namespace

SymbolicInverse::SymbolicInverse(MatrixKind kind, long n)
    : kind_(kind), n_(n), reps_(n), numerators_(reps_.size() * reps_.size(), 0) {}

std::vector<long> SymbolicInverse::row(std::size_t r) const {
    std::vector<long> out(dim());
    for (std::size_t c = 0; c < dim(); ++c) out[c] = numerator(r, c);
    return out;
}

double SymbolicInverse::value_at(std::size_t row) const {
    double sum = 0.0;
    for (std::size_t m = 0; m < dim(); ++m)
        sum += static_cast<double>(numerator(row, m)) *
               trig_value(kind_, reps_.at(m), n_);
    return sum / static_cast<double>(n_);
}

SymbolicInverse inverse_coefficients(long n, MatrixKind kind) {
    require_invertible(n, kind);
    SymbolicInverse inv(kind, n);
    const RepresentativeSet& reps = inv.representatives();
    const long rho = cosine_offset(n);
    for (std::size_t row = 0; row < reps.size(); ++row) {
        long l = reps.at(row);
        for (std::size_t col = 0; col < reps.size(); ++col) {
            long long ml = static_cast<long long>(reps.at(col)) * l;
            long plus = ntheory::residue_one_divisor_count(ml, n);
            long minus = ntheory::residue_one_divisor_count(-ml, n);
            inv.numerators_[row * reps.size() + col] =
                kind == MatrixKind::sine ? plus - minus : plus + minus + rho;
        }
    }
    return inv;
}

TrigMatrix explicit_inverse(long n, MatrixKind kind) {
    SymbolicInverse coeffs = inverse_coefficients(n, kind);
    TrigMatrix m(kind, n, /*hatted=*/true);
    const RepresentativeSet& reps = m.representatives();

    std::vector<double> hat_values(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i)
        hat_values[i] = coeffs.value_at(i);

    for (std::size_t col = 0; col < reps.size(); ++col) {
        long k_inv = ntheory::mod_inverse(reps.at(col), n);
        for (std::size_t row = 0; row < reps.size(); ++row) {
            CanonicalResidue cr = ntheory::canonical_residue(
                static_cast<long long>(reps.at(row)) * k_inv, reps);
            std::size_t idx = *reps.index_of(cr.representative);
            TrigEntry& e = m.at(row, col);
            e.index = cr.representative;
            if (kind == MatrixKind::sine) {
                e.sign = cr.sign;
                e.value = cr.sign * hat_values[idx];
            } else {
                e.sign = +1;
                e.value = hat_values[idx];
            }
        }
    }
    return m;
}

double inverse_entry_value(long long k, long n, MatrixKind kind) {
    SymbolicInverse coeffs = inverse_coefficients(n, kind);
    CanonicalResidue cr =
        ntheory::canonical_residue(k, coeffs.representatives());
    std::size_t idx = *coeffs.representatives().index_of(cr.representative);
    double value = coeffs.value_at(idx);
    return kind == MatrixKind::sine ? cr.sign * value : value;
}

} // namespace cyclomat::trigmat

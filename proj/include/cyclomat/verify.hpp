#pragma once

#include <map>
#include <string>
#include <vector>

#include "cyclomat/linalg.hpp"
#include "cyclomat/types.hpp"

// Independent oracles (elimination-based inversion, rank, determinant) and
// the identity checks tying the character-theoretic constructions to the
// matrices. Each check evaluates both sides of its identity from scratch so
// that nothing is validated against itself.

namespace cyclomat::verify {

struct CheckReport {
    std::string check;
    long n = 0;
    std::string detail;      // kind or parity, plus free-form notes
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool skipped = false;
    std::string skip_reason;
    double elapsed_ms = 0.0;
};

// Inverse by Gaussian elimination with scaled partial pivoting. Throws
// singular_error when a scaled pivot drops below 1e-12, std::invalid_argument
// for a non-square input. smallest_pivot (optional) receives the smallest
// scaled pivot magnitude encountered.
linalg::RMatrix oracle_inverse(const linalg::RMatrix& m,
                               double* smallest_pivot = nullptr);

double oracle_determinant(const linalg::RMatrix& m);

// Rank by elimination; a column with no scaled pivot above pivot_tol counts
// as deficient. The 1e-7 default is safe because every nonzero eigenvalue of
// the matrices checked here has modulus >= 1.
std::size_t oracle_rank(const linalg::RMatrix& m, double pivot_tol = 1e-7);

// The unitary character matrix: rows over the representative set, columns
// over the characters of the given parity in canonical order, entries
// sqrt(2/phi(n)) * chi(k). The scaling makes conj(X)^t * X = I exactly (the
// row-orthogonality constant over the half-system is phi(n)/2).
linalg::CMatrix character_matrix(long n, Parity parity);

// Default tolerances: 1e-10 for condition-free character-sum identities,
// 1e-8 for matrix products whose error grows with the dimension.
CheckReport check_orthogonality(long n, Parity parity, double tol = 1e-10);
CheckReport check_unitarity(long n, Parity parity, double tol = 1e-10);
CheckReport check_diagonalization(long n, MatrixKind kind, double tol = 1e-8);

// The conductor-weighted character sum against its closed form in divisor
// counts:  sum_chi chi(k)/f_chi = (phi(n)/2n) * delta(k)  for every unit k,
// where delta is the difference (odd) or offset sum (even) of the divisor
// counts. Hypothesis: n square-free (odd parity also admits n = 4); violations
// throw std::domain_error.
CheckReport check_conductor_sum(long n, Parity parity, double tol = 1e-10);

// Agreement of the three independent invertibility certificates: the
// square-free criterion, elimination rank, and zero eigenvalues in the
// Gauss-sum spectrum. residual is the number of disagreements.
CheckReport check_invertibility(long n, MatrixKind kind);

// For invertible (n, kind): closed-form inverse against the identity and
// against the elimination inverse, entrywise.
CheckReport check_reconstruction(long n, MatrixKind kind, double tol = 1e-8);

extern const std::vector<std::string> kAllCheckNames;

struct SweepOptions {
    // Subset of kAllCheckNames; empty means all.
    std::vector<std::string> checks;
    // Per-check tolerance overrides.
    std::map<std::string, double> tolerances;
};

// Runs the selected checks for every n in [n_min, n_max], in a fixed order;
// hypothesis failures are recorded as skips, never as passes.
std::vector<CheckReport> sweep(long n_min, long n_max,
                               const SweepOptions& options = {});

} // namespace cyclomat::verify

#include "cyclomat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "cyclomat/characters.hpp"
#include "cyclomat/cyclotomic.hpp"
#include "cyclomat/gauss.hpp"
#include "cyclomat/kernels.hpp"
#include "cyclomat/ntheory.hpp"
#include "cyclomat/trigmat.hpp"

namespace cyclomat::verify {

using characters::DirichletCharacter;
using linalg::CMatrix;
using linalg::RMatrix;

// ---------------------------------------------------------------------------
// elimination oracle

namespace {

struct LuFactors {
    RMatrix lu;                   // L below diagonal (unit), U on and above
    std::vector<std::size_t> perm;
    int sign = 1;
    double smallest_scaled_pivot = std::numeric_limits<double>::infinity();
};

// Scaled partial pivoting; pivot_floor = 0 factors through near-singularity
// without throwing (determinant use).
LuFactors lu_factor(RMatrix a, double pivot_floor) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("elimination: matrix is not square");
    std::size_t n = a.rows();

    std::vector<double> scale(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            scale[i] = std::max(scale[i], std::abs(a(i, j)));
        if (scale[i] == 0.0) scale[i] = 1.0;   // all-zero row; pivots will vanish
    }

    LuFactors f;
    f.perm.resize(n);
    std::iota(f.perm.begin(), f.perm.end(), 0);

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = col;
        double best_mag = -1.0;
        for (std::size_t r = col; r < n; ++r) {
            double mag = std::abs(a(f.perm[r], col)) / scale[f.perm[r]];
            if (mag > best_mag) {
                best_mag = mag;
                best = r;
            }
        }
        if (best != col) {
            std::swap(f.perm[col], f.perm[best]);
            f.sign = -f.sign;
        }
        f.smallest_scaled_pivot = std::min(f.smallest_scaled_pivot, best_mag);
        if (best_mag < pivot_floor)
            throw singular_error(
                "elimination: matrix is singular to working precision "
                "(scaled pivot " +
                std::to_string(best_mag) + ")");
        double pivot = a(f.perm[col], col);
        if (pivot == 0.0) continue;   // exactly singular; keep factoring
        for (std::size_t r = col + 1; r < n; ++r) {
            double m = a(f.perm[r], col) / pivot;
            a(f.perm[r], col) = m;
            if (m != 0.0)
                kernels::axpy(-m, a.row(f.perm[col]) + col + 1,
                              a.row(f.perm[r]) + col + 1, n - col - 1);
        }
    }
    f.lu = std::move(a);
    return f;
}

} // namespace

RMatrix oracle_inverse(const RMatrix& m, double* smallest_pivot) {
    LuFactors f = lu_factor(m, 1e-12);
    if (smallest_pivot) *smallest_pivot = f.smallest_scaled_pivot;
    std::size_t n = m.rows();

    // forward/back substitution on the permuted identity, one column at a time
    RMatrix inv(n, n);
    std::vector<double> y(n), x(n);
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t i = 0; i < n; ++i) {
            double s = f.perm[i] == col ? 1.0 : 0.0;
            for (std::size_t j = 0; j < i; ++j) s -= f.lu(f.perm[i], j) * y[j];
            y[i] = s;
        }
        for (std::size_t i = n; i-- > 0;) {
            double s = y[i];
            for (std::size_t j = i + 1; j < n; ++j)
                s -= f.lu(f.perm[i], j) * x[j];
            x[i] = s / f.lu(f.perm[i], i);
        }
        for (std::size_t i = 0; i < n; ++i) inv(i, col) = x[i];
    }
    return inv;
}

double oracle_determinant(const RMatrix& m) {
    LuFactors f = lu_factor(m, 0.0);
    double det = f.sign;
    for (std::size_t i = 0; i < m.rows(); ++i) det *= f.lu(f.perm[i], i);
    return det;
}

std::size_t oracle_rank(const RMatrix& m, double pivot_tol) {
    RMatrix a = m;
    std::size_t rows = a.rows(), cols = a.cols();

    std::vector<double> scale(rows, 0.0);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j)
            scale[i] = std::max(scale[i], std::abs(a(i, j)));
        if (scale[i] == 0.0) scale[i] = 1.0;
    }

    std::size_t rank = 0;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t best = pivot_row;
        double best_mag = 0.0;
        for (std::size_t r = pivot_row; r < rows; ++r) {
            double mag = std::abs(a(r, col)) / scale[r];
            if (mag > best_mag) {
                best_mag = mag;
                best = r;
            }
        }
        if (best_mag < pivot_tol) continue;   // deficient column
        if (best != pivot_row) {
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(a(pivot_row, j), a(best, j));
            std::swap(scale[pivot_row], scale[best]);
        }
        double pivot = a(pivot_row, col);
        for (std::size_t r = pivot_row + 1; r < rows; ++r) {
            double f = a(r, col) / pivot;
            if (f != 0.0)
                kernels::axpy(-f, a.row(pivot_row) + col, a.row(r) + col,
                              cols - col);
        }
        ++rank;
        ++pivot_row;
    }
    return rank;
}

// ---------------------------------------------------------------------------
// character matrix and checks

namespace {

std::vector<DirichletCharacter> characters_of_parity(long n, Parity parity) {
    std::vector<DirichletCharacter> out;
    for (DirichletCharacter& chi : characters::enumerate_characters(n))
        if (chi.parity() == parity) out.push_back(std::move(chi));
    return out;
}

CMatrix to_complex_matrix(const RMatrix& m) {
    CMatrix c(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            c(i, j) = m(i, j);
    return c;
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

CheckReport finish(CheckReport report, double residual, double tol,
                   const Stopwatch& watch) {
    report.residual = residual;
    report.tolerance = tol;
    report.pass = residual <= tol;
    report.elapsed_ms = watch.elapsed_ms();
    return report;
}

bool conductor_sum_hypothesis(long n, Parity parity) {
    if (ntheory::is_squarefree(n)) return true;
    return parity == Parity::odd && n == 4;
}

} // namespace

CMatrix character_matrix(long n, Parity parity) {
    ntheory::RepresentativeSet reps(n);
    std::vector<DirichletCharacter> chars = characters_of_parity(n, parity);
    double scale = std::sqrt(2.0 / static_cast<double>(
                                       ntheory::euler_phi(n)));
    CMatrix x(reps.size(), chars.size());
    for (std::size_t col = 0; col < chars.size(); ++col)
        for (std::size_t row = 0; row < reps.size(); ++row)
            x(row, col) = scale * chars[col](reps.at(row)).to_complex();
    return x;
}

CheckReport check_orthogonality(long n, Parity parity, double tol) {
    Stopwatch watch;
    CheckReport report{.check = "orthogonality",
                       .n = n,
                       .detail = std::string(to_string(parity))};
    std::vector<DirichletCharacter> chars = characters_of_parity(n, parity);
    long half_phi = ntheory::euler_phi(n) / 2;

    double residual = 0.0;
    for (long k = 1; k <= n; ++k) {
        if (std::gcd(k, n) != 1) continue;
        long long expected = 0;
        if (k == 1)
            expected = half_phi;
        else if (k == n - 1)
            expected = parity == Parity::odd ? -half_phi : half_phi;

        std::vector<cyclotomic::RootTerm> terms;
        std::complex<double> sum{0.0, 0.0};
        for (const DirichletCharacter& chi : chars) {
            characters::CharacterValue v = chi(k);
            terms.push_back(v.to_root_term());
            sum += v.to_complex();
        }
        auto exact = cyclotomic::integer_sum(terms);
        if (!exact || *exact != expected) {
            residual = std::numeric_limits<double>::infinity();
            report.detail += ", exact sum mismatch at k=" + std::to_string(k);
            break;
        }
        residual = std::max(
            residual, std::abs(sum - std::complex<double>(
                                         static_cast<double>(expected), 0.0)));
    }
    return finish(std::move(report), residual, tol, watch);
}

CheckReport check_unitarity(long n, Parity parity, double tol) {
    Stopwatch watch;
    CheckReport report{.check = "unitarity",
                       .n = n,
                       .detail = std::string(to_string(parity))};
    CMatrix x = character_matrix(n, parity);
    CMatrix xh = linalg::conj_transpose(x);
    CMatrix identity = CMatrix::identity(x.rows());
    double residual =
        std::max(linalg::max_abs_diff(linalg::matmul(xh, x), identity),
                 linalg::max_abs_diff(linalg::matmul(x, xh), identity));
    return finish(std::move(report), residual, tol, watch);
}

CheckReport check_diagonalization(long n, MatrixKind kind, double tol) {
    Stopwatch watch;
    CheckReport report{.check = "diagonalization",
                       .n = n,
                       .detail = std::string(to_string(kind))};
    Parity parity = kind == MatrixKind::sine ? Parity::odd : Parity::even;
    CMatrix x = character_matrix(n, parity);
    CMatrix m = to_complex_matrix(trigmat::build_matrix(n, kind).values());
    gauss::SpectralData spec = gauss::spectrum(n, kind);

    CMatrix product = linalg::matmul(linalg::conj_transpose(x),
                                     linalg::matmul(m, x));
    CMatrix diag(product.rows(), product.cols());
    for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i)
        diag(i, i) = spec.eigenvalues[i];
    double residual = linalg::max_abs_diff(product, diag);
    return finish(std::move(report), residual, tol, watch);
}

CheckReport check_conductor_sum(long n, Parity parity, double tol) {
    if (!conductor_sum_hypothesis(n, parity))
        throw std::domain_error(
            "check_conductor_sum: hypothesis requires square-free n" +
            std::string(parity == Parity::odd ? " (or n = 4)" : "") +
            ", got n = " + std::to_string(n));
    Stopwatch watch;
    CheckReport report{.check = "conductor-sum",
                       .n = n,
                       .detail = std::string(to_string(parity))};
    std::vector<DirichletCharacter> chars = characters_of_parity(n, parity);
    std::vector<double> inv_conductor(chars.size());
    for (std::size_t i = 0; i < chars.size(); ++i)
        inv_conductor[i] = 1.0 / static_cast<double>(chars[i].conductor());

    const double scale =
        static_cast<double>(ntheory::euler_phi(n)) / (2.0 * n);
    const long rho = trigmat::cosine_offset(n);

    double residual = 0.0;
    for (long k = 1; k <= n; ++k) {
        if (std::gcd(k, n) != 1) continue;
        std::complex<double> lhs{0.0, 0.0};
        for (std::size_t i = 0; i < chars.size(); ++i)
            lhs += chars[i](k).to_complex() * inv_conductor[i];
        long plus = ntheory::residue_one_divisor_count(k, n);
        long minus = ntheory::residue_one_divisor_count(-k, n);
        double delta = parity == Parity::odd
                           ? static_cast<double>(plus - minus)
                           : static_cast<double>(plus + minus + rho);
        residual = std::max(residual, std::abs(lhs - scale * delta));
    }
    return finish(std::move(report), residual, tol, watch);
}

CheckReport check_invertibility(long n, MatrixKind kind) {
    Stopwatch watch;
    CheckReport report{.check = "invertibility",
                       .n = n,
                       .detail = std::string(to_string(kind))};
    bool criterion = trigmat::is_invertible(n, kind);
    linalg::RMatrix values = trigmat::build_matrix(n, kind).values();
    std::size_t dim = values.rows();
    std::size_t rank = oracle_rank(values);
    std::size_t zeros = gauss::spectrum(n, kind).zero_count();

    int disagreements = 0;
    if ((rank == dim) != criterion) ++disagreements;
    if ((zeros == 0) != criterion) ++disagreements;
    if (dim - rank != zeros) ++disagreements;

    report.detail += criterion ? ": invertible" : ": singular (expected)";
    report.detail += ", rank " + std::to_string(rank) + "/" +
                     std::to_string(dim) + ", zero eigenvalues " +
                     std::to_string(zeros);
    return finish(std::move(report), static_cast<double>(disagreements), 0.0,
                  watch);
}

CheckReport check_reconstruction(long n, MatrixKind kind, double tol) {
    if (!trigmat::is_invertible(n, kind))
        throw std::domain_error("check_reconstruction: (" + std::to_string(n) +
                                ", " + std::string(to_string(kind)) +
                                ") is singular by criterion");
    Stopwatch watch;
    CheckReport report{.check = "reconstruction",
                       .n = n,
                       .detail = std::string(to_string(kind))};
    RMatrix m = trigmat::build_matrix(n, kind).values();
    RMatrix inv = trigmat::explicit_inverse(n, kind).values();
    RMatrix identity = RMatrix::identity(m.rows());

    double residual =
        std::max(linalg::max_abs_diff(linalg::matmul(m, inv), identity),
                 linalg::max_abs_diff(linalg::matmul(inv, m), identity));
    residual = std::max(residual, linalg::max_abs_diff(oracle_inverse(m), inv));
    return finish(std::move(report), residual, tol, watch);
}

// ---------------------------------------------------------------------------
// sweep

const std::vector<std::string> kAllCheckNames = {
    "orthogonality", "unitarity",      "diagonalization",
    "conductor-sum", "invertibility",  "reconstruction",
};

std::vector<CheckReport> sweep(long n_min, long n_max,
                               const SweepOptions& options) {
    if (n_min < 3 || n_min > n_max)
        throw std::domain_error("sweep: need 3 <= n_min <= n_max");

    std::vector<std::string> selected =
        options.checks.empty() ? kAllCheckNames : options.checks;
    for (const std::string& name : selected)
        if (std::find(kAllCheckNames.begin(), kAllCheckNames.end(), name) ==
            kAllCheckNames.end())
            throw std::invalid_argument("sweep: unknown check '" + name + "'");

    auto tol_or = [&](const std::string& name, double fallback) {
        auto it = options.tolerances.find(name);
        return it == options.tolerances.end() ? fallback : it->second;
    };
    auto wanted = [&](const std::string& name) {
        return std::find(selected.begin(), selected.end(), name) !=
               selected.end();
    };

    std::vector<CheckReport> reports;
    for (long n = n_min; n <= n_max; ++n) {
        if (wanted("orthogonality")) {
            double tol = tol_or("orthogonality", 1e-10);
            reports.push_back(check_orthogonality(n, Parity::odd, tol));
            reports.push_back(check_orthogonality(n, Parity::even, tol));
        }
        if (wanted("unitarity")) {
            double tol = tol_or("unitarity", 1e-10);
            reports.push_back(check_unitarity(n, Parity::odd, tol));
            reports.push_back(check_unitarity(n, Parity::even, tol));
        }
        if (wanted("diagonalization")) {
            double tol = tol_or("diagonalization", 1e-8);
            reports.push_back(check_diagonalization(n, MatrixKind::sine, tol));
            reports.push_back(check_diagonalization(n, MatrixKind::cosine, tol));
        }
        if (wanted("conductor-sum")) {
            double tol = tol_or("conductor-sum", 1e-10);
            for (Parity parity : {Parity::odd, Parity::even}) {
                if (conductor_sum_hypothesis(n, parity)) {
                    reports.push_back(check_conductor_sum(n, parity, tol));
                } else {
                    CheckReport skip{.check = "conductor-sum",
                                     .n = n,
                                     .detail = std::string(to_string(parity))};
                    skip.tolerance = tol;
                    skip.skipped = true;
                    skip.skip_reason =
                        "hypothesis not met: n is not square-free";
                    reports.push_back(std::move(skip));
                }
            }
        }
        if (wanted("invertibility")) {
            reports.push_back(check_invertibility(n, MatrixKind::sine));
            reports.push_back(check_invertibility(n, MatrixKind::cosine));
        }
        if (wanted("reconstruction")) {
            double tol = tol_or("reconstruction", 1e-8);
            for (MatrixKind kind : {MatrixKind::sine, MatrixKind::cosine}) {
                if (trigmat::is_invertible(n, kind)) {
                    reports.push_back(check_reconstruction(n, kind, tol));
                } else {
                    CheckReport skip{.check = "reconstruction",
                                     .n = n,
                                     .detail = std::string(to_string(kind))};
                    skip.tolerance = tol;
                    skip.skipped = true;
                    skip.skip_reason = "matrix singular by criterion";
                    reports.push_back(std::move(skip));
                }
            }
        }
    }
    return reports;
}

} // namespace cyclomat::verify

#pragma once

#include <complex>
#include <vector>

#include "cyclomat/characters.hpp"
#include "cyclomat/types.hpp"

// Gauss sums and the eigenvalue spectra of the sine/cosine matrices. Sums are
// double precision over exact character values; the reduction through the
// conductor yields exact zeros where a Moebius or character factor vanishes,
// which is what the singularity tests rely on.

namespace cyclomat::gauss {

// tau(chi) = sum_{k=1..n} chi(k) zeta_n^k by direct summation.
std::complex<double> gauss_sum_direct(const characters::DirichletCharacter& chi);

// Gauss sum of the *conjugate* character, assembled from the primitive part:
//   mu(n/f) * conj(chi_f)(n/f) * tau(conj(chi_f)),
// with the primitive factor summed directly at modulus f. Pass the conjugate
// to obtain tau(chi) itself by reduction.
std::complex<double> gauss_sum_reduced(const characters::DirichletCharacter& chi);

struct GaussSum {
    enum class Method { direct, reduced };
    characters::DirichletCharacter character;
    std::complex<double> value;
    Method method;
};

GaussSum compute_gauss_sum(const characters::DirichletCharacter& chi,
                           GaussSum::Method method);

// | tau(chi_f) * tau(conj(chi_f)) - sigma * f |, sigma = -1 for odd chi and
// +1 for even chi; zero (to rounding) for every character.
double gauss_product_residual(const characters::DirichletCharacter& chi);

// Eigenvalues of the sine (over odd characters) or cosine (over even
// characters) matrix, paired with their characters in canonical enumeration
// order. t_diagonal holds the Gauss sums of the conjugate characters; the
// eigenvalue is -i times that for the sine matrix and equal to it for cosine.
struct SpectralData {
    MatrixKind kind;
    long modulus;
    std::vector<characters::DirichletCharacter> characters;
    std::vector<std::complex<double>> t_diagonal;
    std::vector<std::complex<double>> eigenvalues;

    std::size_t dimension() const { return eigenvalues.size(); }
    std::size_t zero_count(double threshold = 1e-9) const;
};

SpectralData spectrum(long n, MatrixKind kind);

} // namespace cyclomat::gauss

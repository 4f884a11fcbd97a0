#include "cyclomat/gauss.hpp"

#include <cmath>
#include <numbers>

#include "cyclomat/ntheory.hpp"

namespace cyclomat::gauss {

using characters::DirichletCharacter;

std::complex<double> gauss_sum_direct(const DirichletCharacter& chi) {
    long n = chi.modulus();
    std::complex<double> sum{0.0, 0.0};
    for (long k = 1; k <= n; ++k) {
        characters::CharacterValue v = chi(k);
        if (v.is_zero()) continue;
        double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                       static_cast<double>(n);
        sum += v.to_complex() * std::complex<double>(std::cos(angle),
                                                     std::sin(angle));
    }
    return sum;
}

std::complex<double> gauss_sum_reduced(const DirichletCharacter& chi) {
    long n = chi.modulus();
    long f = chi.conductor();
    int mu = ntheory::moebius(n / f);
    if (mu == 0) return {0.0, 0.0};
    DirichletCharacter primitive_conj = chi.primitive_part().conjugate();
    characters::CharacterValue factor = primitive_conj(n / f);
    if (factor.is_zero()) return {0.0, 0.0};
    return static_cast<double>(mu) * factor.to_complex() *
           gauss_sum_direct(primitive_conj);
}

GaussSum compute_gauss_sum(const DirichletCharacter& chi,
                           GaussSum::Method method) {
    std::complex<double> value = method == GaussSum::Method::direct
                                     ? gauss_sum_direct(chi)
                                     : gauss_sum_reduced(chi);
    return GaussSum{chi, value, method};
}

double gauss_product_residual(const DirichletCharacter& chi) {
    DirichletCharacter prim = chi.primitive_part();
    std::complex<double> product =
        gauss_sum_direct(prim) * gauss_sum_direct(prim.conjugate());
    double expected = (chi.is_odd() ? -1.0 : 1.0) *
                      static_cast<double>(chi.conductor());
    return std::abs(product - expected);
}

std::size_t SpectralData::zero_count(double threshold) const {
    std::size_t count = 0;
    for (const std::complex<double>& ev : eigenvalues)
        if (std::abs(ev) < threshold) ++count;
    return count;
}

SpectralData spectrum(long n, MatrixKind kind) {
    SpectralData data;
    data.kind = kind;
    data.modulus = n;
    const bool want_odd = kind == MatrixKind::sine;
    for (DirichletCharacter& chi : characters::enumerate_characters(n)) {
        if (chi.is_odd() != want_odd) continue;
        std::complex<double> tau_conj = gauss_sum_reduced(chi);
        data.t_diagonal.push_back(tau_conj);
        data.eigenvalues.push_back(kind == MatrixKind::sine
                                       ? std::complex<double>(0.0, -1.0) * tau_conj
                                       : tau_conj);
        data.characters.push_back(std::move(chi));
    }
    return data;
}

} // namespace cyclomat::gauss

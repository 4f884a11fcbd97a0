#pragma once

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

// Data-parallel primitives behind the dense-matrix layer. Every operation has
// a scalar reference implementation; SIMD variants (AVX2 on x86-64, NEON on
// aarch64) are selected at runtime and are required by the test suite to agree
// with the scalar kernels on random data.

namespace cyclomat::kernels {

enum class Backend { scalar, avx2, neon };

std::string_view backend_name(Backend backend);

// Backends usable on this machine; always contains Backend::scalar.
std::vector<Backend> available_backends();

Backend active_backend();

// Select the kernel set used by the dispatched entry points below.
// Throws std::invalid_argument if the backend is not available here.
void set_backend(Backend backend);

// y[i] += a * x[i]
void axpy(double a, const double* x, double* y, std::size_t n);
void axpy(std::complex<double> a, const std::complex<double>* x,
          std::complex<double>* y, std::size_t n);

// max_i |x[i] - y[i]|  (complex overload uses the complex modulus)
double max_abs_diff(const double* x, const double* y, std::size_t n);
double max_abs_diff(const std::complex<double>* x,
                    const std::complex<double>* y, std::size_t n);

// Reference kernels, independent of the dispatch state.
namespace scalar {
void axpy(double a, const double* x, double* y, std::size_t n);
void axpy(std::complex<double> a, const std::complex<double>* x,
          std::complex<double>* y, std::size_t n);
double max_abs_diff(const double* x, const double* y, std::size_t n);
double max_abs_diff(const std::complex<double>* x,
                    const std::complex<double>* y, std::size_t n);
} // namespace scalar

} // namespace cyclomat::kernels

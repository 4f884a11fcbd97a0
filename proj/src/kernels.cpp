#include "cyclomat/kernels.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

namespace cyclomat::kernels {

namespace scalar {

void axpy(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void axpy(std::complex<double> a, const std::complex<double>* x,
          std::complex<double>* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double max_abs_diff(const double* x, const double* y, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(x[i] - y[i]));
    return m;
}

double max_abs_diff(const std::complex<double>* x,
                    const std::complex<double>* y, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(x[i] - y[i]));
    return m;
}

} // namespace scalar

#if CYCLOMAT_HAVE_AVX2
namespace avx2 {
void axpy(double a, const double* x, double* y, std::size_t n);
void axpy(std::complex<double> a, const std::complex<double>* x,
          std::complex<double>* y, std::size_t n);
double max_abs_diff(const double* x, const double* y, std::size_t n);
double max_abs_diff(const std::complex<double>* x,
                    const std::complex<double>* y, std::size_t n);
} // namespace avx2
#endif

#if CYCLOMAT_HAVE_NEON
namespace neon {
void axpy(double a, const double* x, double* y, std::size_t n);
void axpy(std::complex<double> a, const std::complex<double>* x,
          std::complex<double>* y, std::size_t n);
double max_abs_diff(const double* x, const double* y, std::size_t n);
double max_abs_diff(const std::complex<double>* x,
                    const std::complex<double>* y, std::size_t n);
} // namespace neon
#endif

namespace {

struct KernelTable {
    Backend backend;
    void (*daxpy)(double, const double*, double*, std::size_t);
    void (*zaxpy)(std::complex<double>, const std::complex<double>*,
                  std::complex<double>*, std::size_t);
    double (*dmax_abs_diff)(const double*, const double*, std::size_t);
    double (*zmax_abs_diff)(const std::complex<double>*,
                            const std::complex<double>*, std::size_t);
};

constexpr KernelTable kScalarTable{
    Backend::scalar,
    &scalar::axpy,
    &scalar::axpy,
    &scalar::max_abs_diff,
    &scalar::max_abs_diff,
};

#if CYCLOMAT_HAVE_AVX2
constexpr KernelTable kAvx2Table{
    Backend::avx2,
    &avx2::axpy,
    &avx2::axpy,
    &avx2::max_abs_diff,
    &avx2::max_abs_diff,
};
#endif

#if CYCLOMAT_HAVE_NEON
constexpr KernelTable kNeonTable{
    Backend::neon,
    &neon::axpy,
    &neon::axpy,
    &neon::max_abs_diff,
    &neon::max_abs_diff,
};
#endif

bool backend_usable(Backend backend) {
    switch (backend) {
    case Backend::scalar:
        return true;
    case Backend::avx2:
#if CYCLOMAT_HAVE_AVX2
        return __builtin_cpu_supports("avx2") != 0;
#else
        return false;
#endif
    case Backend::neon:
#if CYCLOMAT_HAVE_NEON
        return true;   // baseline on aarch64
#else
        return false;
#endif
    }
    return false;
}

const KernelTable* table_for(Backend backend) {
    switch (backend) {
    case Backend::scalar:
        return &kScalarTable;
#if CYCLOMAT_HAVE_AVX2
    case Backend::avx2:
        return &kAvx2Table;
#endif
#if CYCLOMAT_HAVE_NEON
    case Backend::neon:
        return &kNeonTable;
#endif
    default:
        return nullptr;
    }
}

const KernelTable* pick_default() {
#if CYCLOMAT_HAVE_AVX2
    if (backend_usable(Backend::avx2)) return &kAvx2Table;
#endif
#if CYCLOMAT_HAVE_NEON
    if (backend_usable(Backend::neon)) return &kNeonTable;
#endif
    return &kScalarTable;
}

std::atomic<const KernelTable*>& active_table() {
    static std::atomic<const KernelTable*> table{pick_default()};
    return table;
}

} // namespace

std::string_view backend_name(Backend backend) {
    switch (backend) {
    case Backend::scalar: return "scalar";
    case Backend::avx2:   return "avx2";
    case Backend::neon:   return "neon";
    }
    return "unknown";
}

std::vector<Backend> available_backends() {
    std::vector<Backend> list{Backend::scalar};
    if (backend_usable(Backend::avx2)) list.push_back(Backend::avx2);
    if (backend_usable(Backend::neon)) list.push_back(Backend::neon);
    return list;
}

Backend active_backend() {
    return active_table().load(std::memory_order_acquire)->backend;
}

void set_backend(Backend backend) {
    if (!backend_usable(backend))
        throw std::invalid_argument("kernel backend '" +
                                    std::string(backend_name(backend)) +
                                    "' is not available on this machine");
    active_table().store(table_for(backend), std::memory_order_release);
}

void axpy(double a, const double* x, double* y, std::size_t n) {
    active_table().load(std::memory_order_acquire)->daxpy(a, x, y, n);
}

void axpy(std::complex<double> a, const std::complex<double>* x,
          std::complex<double>* y, std::size_t n) {
    active_table().load(std::memory_order_acquire)->zaxpy(a, x, y, n);
}

double max_abs_diff(const double* x, const double* y, std::size_t n) {
    return active_table().load(std::memory_order_acquire)->dmax_abs_diff(x, y, n);
}

double max_abs_diff(const std::complex<double>* x,
                    const std::complex<double>* y, std::size_t n) {
    return active_table().load(std::memory_order_acquire)->zmax_abs_diff(x, y, n);
}

} // namespace cyclomat::kernels
